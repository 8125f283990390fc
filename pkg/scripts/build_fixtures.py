#!/usr/bin/env python3
"""Regenerate the small fixture data bundled under ``src/hashseg/data``.

Everything is derived from the hand-written topic lexicons below with a fixed
seed, so rerunning the script reproduces the files byte for byte:

* ``corpus.txt``            tweets the n-gram counts and word-length prior come from
* ``unigrams.tsv`` / ``bigrams.tsv`` / ``word_len_prior.tsv``
* ``kb_pages.tsv`` / ``kb_mentions.tsv`` / ``kb_inlinks.tsv``
* ``taxonomy.tsv`` / ``stopwords.txt``
* ``annotated_tweets.tsv``  held-out tweets with entity spans (evaluation data)
* ``model.txt``             ranker trained on the annotated tweets

Usage: python scripts/build_fixtures.py [--out DIR]
"""

import argparse
import random
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from hashseg.evaluation import AnnotatedTweet, dump_annotated_tweets  # noqa: E402
from hashseg.ngram_lm import WordLenPrior, count_ngrams  # noqa: E402

SEED = 20140601
CORPUS_TWEETS = 6000
EVAL_TWEETS = 230
TOPIC_POOL = 24
ENTITY_FREE_SHARE = 0.15

# Entities: (surface as written in tweets, page id, in the n-gram corpus?)
TOPICS = {
    "surveillance": {
        "entities": [
            ("NSA", "National_Security_Agency", True),
            ("Snowden", "Edward_Snowden", True),
            ("Edward Snowden", "Edward_Snowden", True),
            ("PRISM", "PRISM_(surveillance_program)", True),
            ("CIA", "Central_Intelligence_Agency", True),
            ("WikiLeaks", "WikiLeaks", True),
            ("Assange", "Julian_Assange", True),
            ("GCHQ", "GCHQ", False),
            ("Manning", "Chelsea_Manning", False),
        ],
        "concepts": [("surveillance", "Surveillance"), ("privacy", "Privacy"),
                     ("whistleblower", "Whistleblower"), ("spy", "Espionage"),
                     ("government", "Government")],
        "N": ["spy", "leak", "secret", "privacy", "agency", "program", "documents", "data",
              "surveillance", "whistleblower", "government", "files", "phone", "records"],
        "V": ["spies", "leaks", "watches", "reveals", "hides", "tracks", "collects", "exposes"],
        "A": ["secret", "illegal", "massive", "classified", "shocking"],
        "T": ["{E} {V} on {F}", "{E} vs {F}", "new {N} about {E} {V} everyone",
              "{A} {N} from {E} today", "{E} {V} {N} of millions", "why does {E} need our {N}",
              "{E} says {F} {V} {N}", "{G} {E} {V} {A} {N}", "the {N} on {E} is {A}",
              "{E} {N} {V} {A} {N}"],
        "free": ["the {N} {V} everyone", "our {N} is not {A}", "{A} {N} and {A} {N} {G}",
                 "stop the {A} {N} now"],
    },
    "football": {
        "entities": [
            ("Barcelona", "FC_Barcelona", True),
            ("Messi", "Lionel_Messi", True),
            ("Real Madrid", "Real_Madrid_CF", True),
            ("Ronaldo", "Cristiano_Ronaldo", True),
            ("Chelsea", "Chelsea_F.C.", True),
            ("Premier League", "Premier_League", True),
            ("UCB", "UCB_League", False),
            ("Kane", "Harry_Kane", False),
            ("Pogba", "Paul_Pogba", False),
        ],
        "concepts": [("football", "Association_football"), ("goalkeeper", "Goalkeeper"),
                     ("stadium", "Stadium"), ("coach", "Coach_(sport)")],
        "N": ["goal", "match", "league", "team", "coach", "player", "season", "stadium", "fans",
              "penalty", "final", "football", "goalkeeper", "win"],
        "V": ["scores", "wins", "beats", "signs", "loses", "plays"],
        "A": ["brilliant", "huge", "late", "great"],
        "T": ["{E} vs {F} tonight", "{E} {V} a {A} {N}", "follow {E} {N} {G}",
              "{E} {V} {F} in the {N}", "what a {N} by {E}", "{A} {N} for {E} fans",
              "{E} {V} again {G}", "{E} coach {V} {N}"],
        "free": ["what a {A} {N} tonight", "the {N} {V} a {N}", "{G} {A} {N} in the {N}"],
    },
    "tech": {
        "entities": [
            ("Apple", "Apple_Inc.", True),
            ("iPhone", "IPhone", True),
            ("Google", "Google", True),
            ("Android", "Android_(operating_system)", True),
            ("Samsung", "Samsung", True),
            ("Microsoft", "Microsoft", True),
            ("Amazon", "Amazon_(company)", False),
            ("Nokia", "Nokia", False),
        ],
        "concepts": [("smartphone", "Smartphone"), ("software", "Software"),
                     ("app", "Mobile_app"), ("camera", "Camera")],
        "N": ["phone", "app", "update", "screen", "battery", "launch", "device", "software",
              "camera", "price", "smartphone", "laptop"],
        "V": ["launches", "releases", "announces", "updates", "crashes", "copies"],
        "A": ["new", "fast", "cheap", "smart", "slow"],
        "T": ["{E} {V} {A} {N}", "{E} vs {F} {N} war", "my {E} {N} {V} again",
              "{A} {N} from {E} {G}", "{E} {V} the {N} today", "is the {E} {N} worth the {N}",
              "{E} and {F} {V} {A} {N}"],
        "free": ["my {N} {V} again", "{A} {N} {A} {N}", "the {N} is so {A}"],
    },
    "music": {
        "entities": [
            ("Beyonce", "Beyonce", True),
            ("Grammys", "Grammy_Award", True),
            ("Adele", "Adele", True),
            ("Coldplay", "Coldplay", True),
            ("Katy Perry", "Katy_Perry", True),
            ("Prism", "Prism_(Katy_Perry_album)", True),
            ("Snowden", "Snowden_(film)", True),
            ("Cannes", "Cannes_Film_Festival", False),
            ("Drake", "Drake_(musician)", False),
        ],
        "concepts": [("album", "Album"), ("concert", "Concert"), ("song", "Song"),
                     ("tour", "Concert_tour")],
        "N": ["song", "album", "concert", "tour", "stage", "fans", "award", "singer", "show",
              "night", "film", "movie"],
        "V": ["sings", "performs", "releases", "drops", "wins"],
        "A": ["amazing", "live", "beautiful", "epic"],
        "T": ["{E} {V} at the {E2}", "{E} {V} {A} {N} {G}", "{A} {N} by {E} tonight",
              "new {E} {N} is {A}", "{E} {N} {V} everyone", "watching {E} {N} {G}"],
        "free": ["this {N} is {A}", "{A} {N} {A} {N} {G}", "the {N} {V} {G}"],
    },
    "home": {
        "entities": [
            ("IKEA", "IKEA", True),
            ("Martha Stewart", "Martha_Stewart", True),
            ("Better Homes", "Better_Homes_and_Gardens", True),
            ("Ikea", "IKEA", False),
        ],
        "concepts": [("garden", "Garden"), ("furniture", "Furniture"), ("apple", "Apple"),
                     ("kitchen", "Kitchen"), ("design", "Interior_design")],
        "N": ["home", "homes", "garden", "gardens", "sand", "den", "kitchen", "house", "furniture",
              "design", "plants", "flowers", "yard", "apple"],
        "V": ["builds", "plants", "decorates", "paints", "grows"],
        "A": ["cozy", "green", "modern", "small"],
        "T": ["{E} {V} {A} {N}", "{A} {N} ideas from {E}", "{E} {N} and {N} {G}",
              "homes and gardens with {E}", "{E} {V} the {N}"],
        "free": ["homes and gardens {G}", "{A} {N} and {A} {N}", "my {N} {V} {G}",
                 "the {N} and {N} are {A}", "home sand for the {N}"],
    },
    "weather": {
        "entities": [
            ("Boston", "Boston", True),
            ("Chicago", "Chicago", True),
            ("Sandy", "Hurricane_Sandy", True),
            ("NOAA", "NOAA", False),
            ("Denver", "Denver", False),
        ],
        "concepts": [("snow", "Snow"), ("storm", "Storm"), ("rain", "Rain"),
                     ("forecast", "Weather_forecasting")],
        "N": ["snow", "storm", "rain", "wind", "ice", "weather", "cold", "forecast", "heat",
              "sun", "den"],
        "V": ["hits", "covers", "brings", "slams"],
        "A": ["cold", "heavy", "freezing", "sunny", "wicked"],
        "T": ["{A} {N} {V} {E}", "{E} {N} {V} {G}", "{N} in {E} {G}", "{E} {A} {N} today",
              "{E} says {A} {N} {V} {F}"],
        "free": ["{A} {N} {V} the {N}", "so much {N} {G}", "snow den for the {N}"],
    },
    "politics": {
        "entities": [
            ("Obama", "Barack_Obama", True),
            ("Congress", "United_States_Congress", True),
            ("Romney", "Mitt_Romney", True),
            ("White House", "White_House", True),
            ("Senate", "United_States_Senate", True),
            ("NOTA", "None_of_the_above", True),
            ("Putin", "Vladimir_Putin", False),
            ("Bush", "George_W._Bush", False),
            ("Carter", "Jimmy_Carter", False),
        ],
        "concepts": [("election", "Election"), ("vote", "Voting"), ("tax", "Tax"),
                     ("campaign", "Political_campaign")],
        "N": ["vote", "election", "bill", "debate", "campaign", "tax", "speech", "law"],
        "V": ["passes", "blocks", "signs", "debates", "votes"],
        "A": ["new", "big", "final", "fair"],
        "T": ["{E} {V} the {A} {N}", "{E} vs {F} {N}", "{E} {N} {G}", "{A} {N} from {E}",
              "{E} and {F} {V} {N}"],
        "free": ["the {N} {V} {G}", "{A} {N} {A} {N}", "not a {N} {G}"],
    },
    "fraud": {
        "entities": [
            ("FBI", "Federal_Bureau_of_Investigation", True),
            ("Madoff", "Bernie_Madoff", False),
            ("Wall Street", "Wall_Street", True),
            ("Enron", "Enron", False),
        ],
        "concepts": [("fraud", "Fraud"), ("scam", "Confidence_trick"),
                     ("con", "Confidence_trick"), ("money", "Money"),
                     ("investors", "Investor")],
        "N": ["scam", "con", "fraud", "money", "investors", "scheme", "trick", "victim"],
        "V": ["steals", "cheats", "fools", "arrests"],
        "A": ["fake", "total", "huge"],
        "T": ["{E} {V} {N} {G}", "not a con says {E}", "{A} {N} on {E}", "{E} {N} {V} {N}",
              "{E} {V} {A} {N}"],
        "free": ["not a con {G}", "total {N} {G}", "this {N} {V} {N}"],
    },
}

GENERAL = ["today", "tonight", "everyone", "people", "really", "now", "love", "omg", "lol",
           "wow", "again", "finally", "shock", "believe", "crazy", "happy", "sad", "follow",
           "watch", "news", "best", "time", "put", "in", "bus", "car", "man", "mad", "off",
           "can", "habit", "den", "am", "no", "at"]

# Extra KB ambiguity: (surface, page id, prior) in addition to the main sense.
AMBIGUOUS = {
    "nsa": [("National_Security_Agency", 0.9)],
    "snowden": [("Edward_Snowden", 0.8), ("Snowden_(film)", 0.2)],
    "prism": [("PRISM_(surveillance_program)", 0.55), ("Prism_(optics)", 0.3),
              ("Prism_(Katy_Perry_album)", 0.15)],
    "apple": [("Apple_Inc.", 0.7), ("Apple", 0.3)],
    "barcelona": [("FC_Barcelona", 0.6), ("Barcelona", 0.4)],
    "chelsea": [("Chelsea_F.C.", 0.7), ("Chelsea_(London)", 0.3)],
    "sandy": [("Hurricane_Sandy", 0.7), ("Sandy_Koufax", 0.2)],
    "android": [("Android_(operating_system)", 0.8), ("Android_(robot)", 0.2)],
    "con": [("Confidence_trick", 0.5), ("Convention_(meeting)", 0.3)],
}
EXTRA_PAGES = {
    "Prism_(optics)": ("tech", "Prism (optics)"),
    "Barcelona": ("football", "Barcelona"),
    "Chelsea_(London)": ("politics", "Chelsea, London"),
    "Sandy_Koufax": ("football", "Sandy Koufax"),
    "Android_(robot)": ("tech", "Android (robot)"),
    "Convention_(meeting)": ("music", "Convention (meeting)"),
}

STOPWORDS = """a about after again all also am an and any are as at be because been before
being both but by can could did do does doing down during each few for from further had has
have having he her here hers him his how i if in into is it its just me more most my no nor
not of off on once only or other our out over own same she should so some such than that the
their them then there these they this those through to too under until up very was we were
what when where which while who whom why will with would you your""".split()

# Hypernym tree: child -> parent. Words map to one or more synsets below.
TREE = """
entity entity
physical_entity entity
abstraction entity
object physical_entity
matter physical_entity
artifact object
living_thing object
location object
device artifact
phone_device device
computer device
structure artifact
building structure
room building
furniture_art artifact
record_art artifact
document record_art
program_sw artifact
application program_sw
organism living_thing
person organism
agent_person person
spy_person agent_person
informer agent_person
athlete person
footballer athlete
musician person
singer_person musician
group_person person
fan_group group_person
investor_person person
victim_person person
plant_org organism
flower plant_org
fruit plant_org
apple_fruit fruit
region location
yard_region region
garden_region yard_region
home_region region
venue region
stadium_venue venue
stage_venue venue
precipitation matter
snow_mat precipitation
rain_mat precipitation
ice_mat matter
sand_mat matter
gas_mat matter
wind_mat gas_mat
communication abstraction
message communication
secret_msg message
leak_msg secret_msg
news_msg message
speech_msg message
music_comm communication
song_comm music_comm
album_comm music_comm
act abstraction
event act
social_event event
performance social_event
concert_event performance
show_event performance
tour_event performance
game_event social_event
match_event game_event
final_event match_event
goal_event game_event
penalty_event game_event
win_event game_event
political_event social_event
election_event political_event
vote_event political_event
debate_event political_event
campaign_event political_event
natural_event event
storm_event natural_event
heat_event natural_event
deception act
fraud_act deception
scam_act fraud_act
con_act scam_act
trick_act deception
scheme_act fraud_act
surveillance_act act
spying_act surveillance_act
tracking_act surveillance_act
launch_act act
release_act act
update_act release_act
attribute abstraction
state attribute
privacy_state state
weather_state state
cold_state weather_state
forecast_state weather_state
value_attr attribute
price_attr value_attr
money_attr value_attr
tax_attr value_attr
group abstraction
organization group
agency_org organization
government_org organization
team_org organization
league_org organization
legislature government_org
law_group group
bill_doc law_group
rule_law law_group
time_period abstraction
season_time time_period
night_time time_period
design_attr attribute
meeting_event social_event
"""

SENSES = {
    "phone": ["phone_device"], "smartphone": ["phone_device"], "device": ["device"],
    "laptop": ["computer"], "camera": ["device"], "screen": ["device"], "battery": ["device"],
    "house": ["building"], "homes": ["building", "home_region"], "home": ["home_region", "building"],
    "kitchen": ["room"], "den": ["room"], "furniture": ["furniture_art"],
    "documents": ["document"], "files": ["document", "record_art"], "records": ["record_art"],
    "data": ["record_art"], "software": ["program_sw"], "app": ["application"],
    "program": ["program_sw", "surveillance_act"], "spy": ["spy_person"], "spies": ["spying_act", "spy_person"],
    "whistleblower": ["informer"], "player": ["footballer"], "goalkeeper": ["footballer"],
    "coach": ["athlete"], "singer": ["singer_person"], "sings": ["song_comm"],
    "fans": ["fan_group"], "investors": ["investor_person"], "victim": ["victim_person"],
    "plants": ["plant_org"], "flowers": ["flower"], "apple": ["apple_fruit"],
    "yard": ["yard_region"], "garden": ["garden_region"], "gardens": ["garden_region"],
    "stadium": ["stadium_venue"], "stage": ["stage_venue"], "snow": ["snow_mat"],
    "rain": ["rain_mat"], "ice": ["ice_mat"], "sand": ["sand_mat"], "wind": ["wind_mat"],
    "secret": ["secret_msg"], "leak": ["leak_msg"], "leaks": ["leak_msg"], "reveals": ["leak_msg"],
    "exposes": ["leak_msg"], "news": ["news_msg"], "speech": ["speech_msg"], "song": ["song_comm"],
    "album": ["album_comm"], "concert": ["concert_event"], "show": ["show_event"],
    "tour": ["tour_event"], "performs": ["performance"], "match": ["match_event"],
    "final": ["final_event"], "goal": ["goal_event"], "scores": ["goal_event"],
    "penalty": ["penalty_event"], "win": ["win_event"], "wins": ["win_event"],
    "beats": ["win_event"], "football": ["game_event"], "election": ["election_event"],
    "vote": ["vote_event"], "votes": ["vote_event"], "debate": ["debate_event"],
    "debates": ["debate_event"], "campaign": ["campaign_event"], "storm": ["storm_event"],
    "heat": ["heat_event"], "fraud": ["fraud_act"], "scam": ["scam_act"],
    "con": ["con_act", "meeting_event"], "trick": ["trick_act"], "scheme": ["scheme_act"],
    "cheats": ["fraud_act"], "fools": ["trick_act"], "steals": ["fraud_act"],
    "surveillance": ["surveillance_act"], "watches": ["spying_act"], "tracks": ["tracking_act"],
    "collects": ["surveillance_act"], "launch": ["launch_act"], "launches": ["launch_act"],
    "releases": ["release_act"], "drops": ["release_act"], "update": ["update_act"],
    "updates": ["update_act"], "privacy": ["privacy_state"], "weather": ["weather_state"],
    "cold": ["cold_state"], "freezing": ["cold_state"], "forecast": ["forecast_state"],
    "price": ["price_attr"], "money": ["money_attr"], "tax": ["tax_attr"],
    "agency": ["agency_org"], "government": ["government_org"], "team": ["team_org"],
    "league": ["league_org"], "bill": ["bill_doc"], "law": ["rule_law"], "passes": ["bill_doc"],
    "signs": ["bill_doc"], "blocks": ["bill_doc"], "season": ["season_time"],
    "night": ["night_time"], "tonight": ["night_time"], "design": ["design_attr"],
    "film": ["show_event"], "movie": ["show_event"], "award": ["win_event"],
}


def build_pages(rng):
    """Entity, concept, ambiguity and filler pages with topic-clustered inlinks."""
    topic_of = {}
    titles = {}
    for topic, lex in TOPICS.items():
        for surface, pid, _ in lex["entities"]:
            topic_of.setdefault(pid, topic)
            titles.setdefault(pid, pid.replace("_", " "))
        for _, pid in lex["concepts"]:
            topic_of.setdefault(pid, topic)
            titles.setdefault(pid, pid.replace("_", " "))
    for pid, (topic, title) in EXTRA_PAGES.items():
        topic_of[pid] = topic
        titles[pid] = title
    pools = {}
    for topic in TOPICS:
        pools[topic] = [f"{topic}_article_{i:02d}" for i in range(TOPIC_POOL)]
        for i, pid in enumerate(pools[topic]):
            titles[pid] = f"{topic.title()} article {i}"
    global_pool = [f"article_{i:03d}" for i in range(120)]
    for i, pid in enumerate(global_pool):
        titles[pid] = f"Article {i}"
    inlinks = {}
    by_topic = {}
    for pid, topic in sorted(topic_of.items()):
        by_topic.setdefault(topic, []).append(pid)
    for pid, topic in sorted(topic_of.items()):
        src = set(rng.sample(pools[topic], rng.randint(10, 20)))
        src |= set(rng.sample(global_pool, rng.randint(2, 6)))
        src |= {p for p in by_topic[topic] if p != pid and rng.random() < 0.6}
        inlinks[pid] = sorted(src)
    return titles, inlinks


def build_mentions():
    mentions = {}
    for lex in TOPICS.values():
        for surface, pid, _ in lex["entities"]:
            key = surface.lower()
            mentions.setdefault(key, {})
            mentions[key].setdefault(pid, None)
        for surface, pid in lex["concepts"]:
            mentions.setdefault(surface, {}).setdefault(pid, None)
    out = {}
    for key, pages in mentions.items():
        if key in AMBIGUOUS:
            out[key] = list(AMBIGUOUS[key])
            continue
        pids = sorted(pages)
        share = round(0.9 / len(pids), 4)
        out[key] = [(p, share) for p in pids]
    return out


def fill(rng, topic, template):
    """Instantiate a template; returns tokens and entity spans (start, end, page)."""
    lex = TOPICS[topic]
    tokens, spans = [], []
    used = set()
    oov_used = False
    for tok in template.split():
        if tok in ("{E}", "{F}", "{E2}"):
            pool = lex["entities"] if tok != "{E2}" else [e for e in lex["entities"]
                                                         if e[1] == "Grammy_Award"]
            choices = [e for e in pool if e[1] not in used
                       and (e[2] or not oov_used)] or pool
            surface, pid, in_lm = rng.choice(choices)
            used.add(pid)
            oov_used = oov_used or not in_lm
            words = surface.split()
            spans.append((len(tokens), len(tokens) + len(words), pid))
            tokens.extend(words)
        elif tok in ("{N}", "{V}", "{A}"):
            tokens.append(rng.choice(lex[tok[1]]))
        elif tok == "{G}":
            tokens.append(rng.choice(GENERAL))
        else:
            tokens.append(tok)
    return tokens, spans


def generate(rng, count, in_corpus):
    tweets = []
    topics = sorted(TOPICS)
    while len(tweets) < count:
        topic = rng.choice(topics)
        lex = TOPICS[topic]
        free = rng.random() < ENTITY_FREE_SHARE
        template = rng.choice(lex["free"] if free else lex["T"])
        tokens, spans = fill(rng, topic, template)
        if in_corpus and any(not _in_lm(pid, topic) for _, _, pid in spans):
            continue
        tweets.append((tokens, spans))
    return tweets


def _in_lm(pid, topic):
    return all(flag for _, p, flag in TOPICS[topic]["entities"] if p == pid)


def write_tsv(path, rows):
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write("\t".join(str(x) for x in row) + "\n")


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=ROOT / "src" / "hashseg" / "data")
    parser.add_argument("--skip-model", action="store_true")
    args = parser.parse_args(argv)
    out = args.out
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(SEED)

    corpus = generate(rng, CORPUS_TWEETS, in_corpus=True)
    with open(out / "corpus.txt", "w", encoding="utf-8") as fh:
        for tokens, _ in corpus:
            fh.write(" ".join(tokens) + "\n")
    unigrams, bigrams = count_ngrams(tokens for tokens, _ in corpus)
    write_tsv(out / "unigrams.tsv", sorted(unigrams.items(), key=lambda kv: (-kv[1], kv[0])))
    write_tsv(out / "bigrams.tsv", [(f"{a} {b}", c) for (a, b), c in
                                    sorted(bigrams.items(), key=lambda kv: (-kv[1], kv[0]))])
    prior = WordLenPrior.from_words((w for tokens, _ in corpus for w in tokens), max_length=15)
    prior.dump(out / "word_len_prior.tsv")

    titles, inlinks = build_pages(random.Random(SEED + 1))
    write_tsv(out / "kb_pages.tsv", sorted(titles.items()))
    write_tsv(out / "kb_inlinks.tsv", [(pid, ",".join(src)) for pid, src in sorted(inlinks.items())])
    mentions = build_mentions()
    write_tsv(out / "kb_mentions.tsv", [(surface, pid, prior) for surface, cands in
                                        sorted(mentions.items()) for pid, prior in cands])

    edges = [line.split() for line in TREE.strip().splitlines()]
    rows = [(child, parent) for child, parent in edges]
    rows += [(f"w:{word}", syn) for word, syns in sorted(SENSES.items()) for syn in syns]
    write_tsv(out / "taxonomy.tsv", rows)
    with open(out / "stopwords.txt", "w", encoding="utf-8") as fh:
        fh.write("\n".join(sorted(set(STOPWORDS))) + "\n")

    held_out = generate(random.Random(SEED + 2), EVAL_TWEETS, in_corpus=False)
    dump_annotated_tweets([AnnotatedTweet(" ".join(tokens), tuple(spans))
                           for tokens, spans in held_out], out / "annotated_tweets.tsv")

    if not args.skip_model:
        subprocess.run([sys.executable, "-m", "hashseg", "train",
                        str(out / "annotated_tweets.tsv"),
                        "--output", str(out / "model.txt"), "--seed", "0"],
                       check=True, env={"PYTHONPATH": str(ROOT / "src")})


if __name__ == "__main__":
    main()
