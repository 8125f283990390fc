"""Content-word filtering and taxonomy-based similarity between a hashtag and its tweet."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Mapping, Sequence, Tuple

from ._io import LoadError, PathLike, iter_records

_ALPHA_RE = re.compile(r"[^\W\d_]+")

# Closed-class words that carry no topical content; merged with any stopword file.
FUNCTION_WORDS = frozenset("""
a an the and or but nor so yet for of to in on at by with from into onto upon over under
about above below after before between through during without within against among across
i me my mine we us our ours you your yours he him his she her hers it its they them their theirs
this that these those who whom whose which what where when why how
is am are was were be been being do does did done have has had having
will would shall should can could may might must
not no yes very just also too than then there here
vs via
""".split())


class Taxonomy:
    """Hypernym DAG with word senses.

    Parameters
    ----------
    parents : mapping of synset id to parent synset ids
        Exactly one synset (the root) has no parents.
    word_senses : mapping of word to synset ids
    """

    def __init__(self, parents: Mapping[str, Sequence[str]],
                 word_senses: Mapping[str, Sequence[str]]):
        self.parents: Dict[str, Tuple[str, ...]] = {k: tuple(v) for k, v in parents.items()}
        for syn, ps in self.parents.items():
            for p in ps:
                if p not in self.parents:
                    raise ValueError(f"synset {syn!r} has unknown parent {p!r}")
        roots = [s for s, ps in self.parents.items() if not ps]
        if len(roots) != 1:
            raise ValueError(f"taxonomy needs exactly one root, found {len(roots)}")
        self.root = roots[0]
        self.depth: Dict[str, int] = {}
        for syn in self.parents:
            self._depth_of(syn, ())
        self.word_senses: Dict[str, Tuple[str, ...]] = {}
        for word, senses in word_senses.items():
            for s in senses:
                if s not in self.parents:
                    raise ValueError(f"word {word!r} maps to unknown synset {s!r}")
            key = word.lower()
            merged = self.word_senses.get(key, ()) + tuple(senses)
            self.word_senses[key] = tuple(dict.fromkeys(merged))
        self._ancestors: Dict[str, FrozenSet[str]] = {}

    def _depth_of(self, syn, trail):
        if syn in self.depth:
            return self.depth[syn]
        if syn in trail:
            raise ValueError(f"cycle through synset {syn!r}")
        ps = self.parents[syn]
        d = 1 if not ps else 1 + min(self._depth_of(p, trail + (syn,)) for p in ps)
        self.depth[syn] = d
        return d

    def ancestors(self, syn: str) -> FrozenSet[str]:
        """``syn`` and every synset above it."""
        found = self._ancestors.get(syn)
        if found is None:
            out = {syn}
            stack = [syn]
            while stack:
                for p in self.parents[stack.pop()]:
                    if p not in out:
                        out.add(p)
                        stack.append(p)
            found = self._ancestors[syn] = frozenset(out)
        return found

    def synset_similarity(self, s1: str, s2: str) -> float:
        common = self.ancestors(s1) & self.ancestors(s2)
        if not common:
            return 0.0
        lcs_depth = max(self.depth[c] for c in common)
        return 2.0 * lcs_depth / (self.depth[s1] + self.depth[s2])

    def wu_palmer(self, w1: str, w2: str) -> float:
        """Best Wu-Palmer similarity over all sense pairs; 0 for unknown words."""
        senses1 = self.word_senses.get(w1.lower(), ())
        senses2 = self.word_senses.get(w2.lower(), ())
        best = 0.0
        for a in senses1:
            for b in senses2:
                best = max(best, self.synset_similarity(a, b))
        return best


def load_taxonomy(path: PathLike) -> Taxonomy:
    """Read a hypernym edge list plus ``w:word<TAB>synset`` sense lines.

    The root is declared with a self-loop line ``root<TAB>root``.
    """
    parents: Dict[str, List[str]] = {}
    senses: Dict[str, List[str]] = {}
    for lineno, line in iter_records(path):
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
            raise LoadError(path, "expected two tab-separated fields", lineno)
        left, right = parts[0].strip(), parts[1].strip()
        if left.startswith("w:"):
            senses.setdefault(left[2:], []).append(right)
            continue
        parents.setdefault(left, [])
        parents.setdefault(right, [])
        if left != right:
            parents[left].append(right)
    try:
        return Taxonomy(parents, senses)
    except ValueError as exc:
        raise LoadError(path, str(exc)) from None


@dataclass(frozen=True)
class ContentLexicon:
    stopwords: FrozenSet[str] = frozenset()
    function_words: FrozenSet[str] = FUNCTION_WORDS

    def is_content(self, word: str) -> bool:
        w = word.lower()
        return len(w) > 1 and w not in self.stopwords and w not in self.function_words


def load_stopwords(path: PathLike) -> ContentLexicon:
    words = {line.strip().lower() for _, line in iter_records(path)}
    return ContentLexicon(frozenset(words))


def content_words(lex: ContentLexicon, text: str) -> List[str]:
    """Lowercased alphabetic tokens that survive the stopword and length filters."""
    return [w for w in _ALPHA_RE.findall(text.lower()) if lex.is_content(w)]


def context_score(tax: Taxonomy, lex: ContentLexicon, seg_chunks: Sequence[str],
                  tweet_text: str) -> float:
    """Mean over hashtag content words of their best similarity to any tweet content word."""
    hashtag_words = content_words(lex, " ".join(seg_chunks))
    tweet_words = set(content_words(lex, tweet_text))
    if not hashtag_words or not tweet_words:
        return 0.0
    total = 0.0
    for h in hashtag_words:
        total += max(tax.wu_palmer(h, t) for t in tweet_words)
    return total / len(hashtag_words)
