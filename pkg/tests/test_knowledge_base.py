import copy
import math
import pickle

import pytest

from conftest import make_kb
from hashseg._io import LoadError
from hashseg.knowledge_base import KbPage, Kb, load_kb, milne_witten


def worked_pair():
    a = frozenset({"s1", "s2", "s3", "s4"})
    b = frozenset({"s1", "s2", "s5"})
    return a, b


class TestMilneWitten:
    def test_worked_example(self):
        a, b = worked_pair()
        delta = (math.log(4) - math.log(2)) / (math.log(100) - math.log(3))
        assert delta == pytest.approx(0.1977, abs=1e-4)
        assert milne_witten(a, b, 100) == pytest.approx(1 - delta)
        assert milne_witten(a, b, 100) == pytest.approx(0.802, abs=1e-3)

    def test_log_base_invariant(self):
        a, b = worked_pair()
        d10 = (math.log10(4) - math.log10(2)) / (math.log10(100) - math.log10(3))
        assert milne_witten(a, b, 100) == pytest.approx(1 - d10)

    def test_identical_sets(self):
        a, _ = worked_pair()
        assert milne_witten(a, a, 100) == 1.0

    def test_disjoint_and_empty(self):
        assert milne_witten(frozenset({"x"}), frozenset({"y"}), 10) == 0.0
        assert milne_witten(frozenset(), frozenset({"y"}), 10) == 0.0

    def test_clamped_when_overlap_is_tiny(self):
        a = frozenset(f"a{i}" for i in range(50)) | {"c"}
        b = frozenset({"c", "b"})
        assert milne_witten(a, b, 60) == 0.0


@pytest.fixture
def surveillance_kb():
    """NSA, Snowden and PRISM share sources; the optics and film pages do not."""
    inlinks = {
        "NSA": ["s1", "s2", "s3", "s4"],
        "Snowden": ["s1", "s2", "s5"],
        "PRISM": ["s1", "s3", "s5", "s6"],
        "Prism_optics": ["o1", "o2"],
        "Snowden_film": ["f1", "f2", "s5"],
    }
    mentions = {
        "nsa": [("NSA", 0.9)],
        "snowden": [("Snowden", 0.6), ("Snowden_film", 0.4)],
        "prism": [("PRISM", 0.5), ("Prism_optics", 0.5)],
        "NSA vs": [("NSA", 0.1)],
    }
    return make_kb(inlinks, mentions, total_pages=100)


class TestKb:
    def test_candidate_pages(self, surveillance_kb):
        kb = surveillance_kb
        assert kb.candidate_pages("snowden") == [("Snowden", 0.6), ("Snowden_film", 0.4)]
        assert kb.candidate_pages("SNOWDEN") == kb.candidate_pages("snowden")
        assert kb.candidate_pages("qqq") == []

    def test_relatedness_symmetric_and_cached(self, surveillance_kb):
        kb = surveillance_kb
        assert kb.relatedness("NSA", "Snowden") == kb.relatedness("Snowden", "NSA")
        assert kb.relatedness("NSA", "Snowden") == pytest.approx(0.802, abs=1e-3)
        with pytest.raises(KeyError):
            kb.relatedness("NSA", "nope")

    def test_vote_two_candidates(self, surveillance_kb):
        kb = surveillance_kb
        expected = (kb.relatedness("Snowden", "NSA") * 0.6
                    + kb.relatedness("Snowden_film", "NSA") * 0.4) / 2
        assert kb.vote("snowden", "NSA") == pytest.approx(expected)
        assert kb.vote("qqq", "NSA") == 0.0

    def test_vote_single_candidate(self):
        kb = make_kb({"p": ["x", "y"], "q": ["x"]}, {"b": [("p", 1.0)]}, total_pages=50)
        assert kb.vote("b", "q") == pytest.approx(kb.relatedness("p", "q"))

    def test_total_relatedness(self, surveillance_kb):
        kb = surveillance_kb
        assert kb.total_relatedness("NSA", []) == 0.0
        assert kb.total_relatedness("NSA", ["prism"]) == kb.vote("prism", "NSA")
        both = kb.vote("snowden", "NSA") + kb.vote("prism", "NSA")
        assert kb.total_relatedness("NSA", ["snowden", "prism"]) == pytest.approx(both)

    def test_extract_mentions(self, surveillance_kb):
        found = surveillance_kb.extract_mentions(["nsa", "vs", "snowden"])
        assert [(m.surface, m.start, m.end) for m in found] == [("nsa vs", 0, 2),
                                                               ("snowden", 2, 3)]
        assert surveillance_kb.extract_mentions(["hello", "world"]) == []

    def test_extract_mentions_two_spans(self):
        kb = make_kb({"a": ["x"], "b": ["x"]}, {"nsa": [("a", 1.0)], "snowden": [("b", 1.0)]})
        found = kb.extract_mentions(["NSA", "vs", "Snowden"])
        assert [m.surface for m in found] == ["nsa", "snowden"]

    def test_link_hashtag_entities(self, surveillance_kb):
        kb = surveillance_kb
        links, score = kb.link_hashtag_entities(["NSA", "vs", "Snowden"], ["prism"])
        # "nsa vs" is the longest match; its only page is NSA
        pages = {link.mention.surface: link.page for link in links}
        assert pages["nsa vs"] == "NSA"
        rel_nsa = kb.total_relatedness("NSA", ["prism"])
        rel_snow = kb.total_relatedness("Snowden", ["prism"])
        expected = (min(rel_nsa, 1) * 0.1 + min(rel_snow, 1) * 0.6) / 2
        assert score == pytest.approx(expected)

    def test_link_no_mentions(self, surveillance_kb):
        assert surveillance_kb.link_hashtag_entities(["hello"], ["prism"]) == ([], 0.0)

    def test_pruning_keeps_score(self, surveillance_kb):
        _, kept = surveillance_kb.link_hashtag_entities(["snowden"], ["prism"], threshold=0.0)
        links, pruned = surveillance_kb.link_hashtag_entities(["snowden"], ["prism"],
                                                              threshold=0.99)
        assert links == [] and kept == pruned

    def test_disambiguate_prefers_context(self, surveillance_kb):
        page, rel, prior = surveillance_kb.disambiguate("prism", ["nsa"])
        assert page == "PRISM" and rel > 0 and prior == 0.5

    def test_disambiguate_tie_uses_prior(self, surveillance_kb):
        page, rel, _ = surveillance_kb.disambiguate("snowden", [])
        assert (page, rel) == ("Snowden", 0.0)

    def test_validation(self):
        pages = {"a": KbPage("a", "A", frozenset())}
        with pytest.raises(ValueError):
            Kb(pages, {"x": [("zz", 0.5)]})
        with pytest.raises(ValueError):
            Kb(pages, {"x": [("a", 1.5)]})
        with pytest.raises(ValueError):
            Kb(pages, {"x": [("a", 0.7)], "X": [("a", 0.7)]})
        with pytest.raises(ValueError):
            Kb(pages, {}, total_pages=0)

    def test_copy_and_pickle(self, surveillance_kb):
        kb = surveillance_kb
        kb.relatedness("NSA", "PRISM")
        assert copy.deepcopy(kb) is kb
        again = pickle.loads(pickle.dumps(kb))
        assert again.relatedness("NSA", "PRISM") == kb.relatedness("NSA", "PRISM")


def write_kb(tmp_path, pages, mentions, inlinks):
    paths = []
    for name, text in (("pages", pages), ("mentions", mentions), ("inlinks", inlinks)):
        p = tmp_path / f"{name}.tsv"
        p.write_text(text)
        paths.append(p)
    return paths


class TestLoadKb:
    PAGES = "1\tOne\n2\tTwo\n3\tThree\n"
    MENTIONS = "one\t1\t0.8\nthing\t2\t0.5\nthing\t3\t0.5\n"
    INLINKS = "1\t2,3\n2\t3\n"

    def test_consistent(self, tmp_path):
        kb = load_kb(*write_kb(tmp_path, self.PAGES, self.MENTIONS, self.INLINKS))
        assert kb.total_pages == 3
        assert kb.pages["1"].inlinks == frozenset({"2", "3"})
        assert kb.pages["3"].inlinks == frozenset()

    def test_override_total(self, tmp_path):
        paths = write_kb(tmp_path, self.PAGES, self.MENTIONS, self.INLINKS)
        assert load_kb(*paths, total_pages_override=10 ** 6).total_pages == 10 ** 6

    def test_unknown_page_named(self, tmp_path):
        paths = write_kb(tmp_path, self.PAGES, "ghost\t99\t0.5\n", self.INLINKS)
        with pytest.raises(LoadError, match="ghost"):
            load_kb(*paths)

    def test_malformed_prior(self, tmp_path):
        paths = write_kb(tmp_path, self.PAGES, "one\t1\tlots\n", self.INLINKS)
        with pytest.raises(LoadError) as err:
            load_kb(*paths)
        assert err.value.lineno == 1

    def test_prior_sum(self, tmp_path):
        paths = write_kb(tmp_path, self.PAGES, "x\t1\t0.6\nx\t2\t0.6\n", self.INLINKS)
        with pytest.raises(LoadError):
            load_kb(*paths)

    def test_unknown_inlink_source(self, tmp_path):
        paths = write_kb(tmp_path, self.PAGES, self.MENTIONS, "1\t2,77\n")
        with pytest.raises(LoadError, match="77"):
            load_kb(*paths)
