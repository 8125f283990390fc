"""Property-based checks of the invariants each module promises."""

import math

import numpy as np
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from hashseg.elastic_net import fold_assignment, train_elastic_net
from hashseg.evaluation import (P_AT_N, AnnotatedTweet, hit_at_n, linking_prf,
                                synthesize_dataset)
from hashseg.features import capitalization_clusters, capitalization_score
from hashseg.knowledge_base import milne_witten
from hashseg.ngram_lm import UnigramModel, WordLenPrior
from hashseg.segmentation import (SeederConfig, brute_force_best_seg, chunk_score,
                                  seed_segmentations, viterbi_word_seg)

letters = st.text(alphabet="abc", min_size=1, max_size=4)
lexicons = st.dictionaries(letters, st.integers(1, 50), min_size=1, max_size=12)
bodies = st.text(alphabet="abc", min_size=1, max_size=9)
PRIOR = WordLenPrior({n: 0.06 for n in range(1, 16)}, 0.1)


@given(lexicons, bodies)
def test_viterbi_equals_brute_force(counts, body):
    lm = UnigramModel.from_counts(counts)
    fast, slow = viterbi_word_seg(lm, body), brute_force_best_seg(lm, body)
    assert fast.chunks == slow.chunks
    assert math.isclose(fast.viterbi_score, slow.viterbi_score, abs_tol=1e-9)


@given(lexicons, st.text(alphabet="abcABC", min_size=1, max_size=12))
def test_viterbi_reconstructs(counts, body):
    seg = viterbi_word_seg(UnigramModel.from_counts(counts), body)
    assert "".join(seg.chunks) == body
    assert math.isclose(seg.viterbi_score, chunk_score(UnigramModel.from_counts(counts), seg.chunks))


@given(lexicons, bodies, st.integers(1, 25))
def test_seeder_invariants(counts, body, top_k):
    lm = UnigramModel.from_counts(counts)
    segs = seed_segmentations(lm, PRIOR, body, SeederConfig(top_k=top_k))
    keys = [s.key for s in segs]
    assert 1 <= len(segs) <= top_k
    assert len(keys) == len(set(keys))
    assert all("".join(s.chunks) == body for s in segs)
    assert viterbi_word_seg(lm, body).key in keys


page_sets = st.frozensets(st.integers(0, 30), max_size=15)


@given(page_sets, page_sets, st.integers(31, 10 ** 6))
def test_relatedness_range_and_symmetry(a, b, w):
    r = milne_witten(a, b, w)
    assert 0.0 <= r <= 1.0
    assert r == milne_witten(b, a, w)


@given(page_sets.filter(bool), st.integers(31, 10 ** 6))
def test_self_relatedness(a, w):
    assert milne_witten(a, a, w) == 1.0


camel = st.text(alphabet="abAB", min_size=1, max_size=14)


@given(camel, st.data())
def test_capitalization_bounds(raw, data):
    clusters = capitalization_clusters(raw)
    prev_end = 0
    for cl in clusters:
        assert raw[cl.start:cl.end] == cl.text
        assert cl.start >= prev_end
        prev_end = cl.end
    cuts = data.draw(st.lists(st.integers(1, max(1, len(raw) - 1)), unique=True, max_size=5))
    bounds = [0] + sorted(c for c in cuts if c < len(raw)) + [len(raw)]
    chunks = [raw[i:j] for i, j in zip(bounds, bounds[1:])]
    score = capitalization_score(raw, chunks)
    assert 0 <= score <= len(clusters)
    assert capitalization_score(raw, [raw]) == 0


@settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.integers(0, 10 ** 6), st.floats(0.0, 2.0), st.floats(0.0, 1.0))
def test_objective_non_increasing(seed, alpha, rho):
    rng = np.random.default_rng(seed)
    X = rng.normal(size=(30, 5)) * rng.uniform(0.1, 10, size=5)
    y = (rng.random(30) < 0.3).astype(float)
    model = train_elastic_net(X, y, alpha, rho)
    h = np.array(model.objective_history)
    assert np.all(np.diff(h) <= 1e-12 * (1 + np.abs(h[:-1])))
    assert h[-1] <= h[0]


pairs = st.lists(st.tuples(st.sampled_from("abc"), st.sampled_from(["P1", "P2", "P3", "P4"])),
                 max_size=4)


@given(pairs, pairs)
def test_linking_prf_bounds(pred, gold):
    p, r, f = linking_prf(pred, gold)
    assert all(0.0 <= v <= 1.0 for v in (p, r, f))
    if p == 0 or r == 0:
        assert f == 0.0


@given(st.lists(st.lists(st.sampled_from("abcd"), min_size=1, max_size=3), max_size=25),
       st.lists(st.sampled_from("abcd"), min_size=1, max_size=3))
def test_hits_monotone_in_n(ranked, gold):
    ranked = [tuple(r) for r in ranked]
    hits = [hit_at_n(ranked, [tuple(gold)], n) for n in P_AT_N]
    assert hits == sorted(hits)


words = st.text(alphabet="abcXYZ", min_size=1, max_size=6)


@st.composite
def tweets(draw):
    tokens = draw(st.lists(words, min_size=2, max_size=8))
    n = len(tokens)
    spans, pos = [], 0
    while pos < n and draw(st.booleans()):
        start = draw(st.integers(pos, n - 1))
        end = draw(st.integers(start + 1, min(n, start + 2)))
        spans.append((start, end, f"page{start}"))
        pos = end
    return AnnotatedTweet(" ".join(tokens), tuple(spans))


@given(st.lists(tweets(), max_size=5), st.integers(0, 100))
def test_synthesized_instances_reconstruct(tws, seed):
    for inst in synthesize_dataset(tws, seed=seed):
        assert "".join(inst.gold_chunks) == inst.hashtag
        assert all(inst.gold_chunks)


@given(st.integers(5, 200), st.integers(2, 5), st.integers(0, 1000))
def test_fold_partition_is_cover(n, folds, seed):
    assume(n >= folds)
    ids = fold_assignment(n, folds, seed)
    assert ids.shape == (n,)
    assert set(ids.tolist()) == set(range(folds))
    sizes = np.bincount(ids, minlength=folds)
    assert sizes.max() - sizes.min() <= 1
