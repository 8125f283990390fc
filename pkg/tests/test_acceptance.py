"""Acceptance criteria, one test each.

A summary line per criterion is printed at the end of the pytest run
(section "acceptance criteria"). Run just this file with::

    pytest tests/test_acceptance.py -v
"""

import io
import math
import random
import sys
import time

import numpy as np
import pytest

from hashseg.cli import main
from hashseg.elastic_net import (ElasticNetModel, coordinate_descent, soft_threshold,
                                 train_elastic_net)
from hashseg.evaluation import (P_AT_N, build_tables, gold_rank, kfold_evaluate,
                                load_annotated_tweets, synthesize_dataset)
from hashseg.features import capitalization_clusters, capitalization_score
from hashseg.knowledge_base import Kb, KbPage, milne_witten
from hashseg.ngram_lm import UnigramModel
from hashseg.ranker import candidate_table, rank
from hashseg.resources import data_path
from hashseg.segmentation import brute_force_best_seg, viterbi_word_seg

EXAMPLE_HASHTAG = "NSAvsSnowden"
EXAMPLE_TWEET = "PRISM leaks shock everyone"


@pytest.fixture(scope="module")
def dataset():
    return synthesize_dataset(load_annotated_tweets(data_path("tweets")), seed=0)


@pytest.fixture(scope="module")
def tables(dataset, res):
    return build_tables(dataset, res)


@pytest.mark.acceptance(1, "Viterbi equals brute force on 1000 random strings")
def test_viterbi_oracle(record_property):
    rng = random.Random(1)
    alphabet = "abcde"
    lexicon = {}
    while len(lexicon) < 50:
        word = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 4)))
        lexicon[word] = rng.randint(1, 1000)
    lm = UnigramModel.from_counts(lexicon)
    strings = ["".join(rng.choice(alphabet) for _ in range(rng.randint(1, 10)))
               for _ in range(1000)]
    start = time.perf_counter()
    mismatches = 0
    for s in strings:
        fast, slow = viterbi_word_seg(lm, s), brute_force_best_seg(lm, s)
        if fast.chunks != slow.chunks or abs(fast.viterbi_score - slow.viterbi_score) > 1e-9:
            mismatches += 1
    elapsed = time.perf_counter() - start
    record_property("detail", f"mismatches={mismatches}/1000")
    record_property("detail", f"runtime={elapsed:.2f}s")
    assert mismatches == 0
    assert elapsed < 5.0


@pytest.mark.acceptance(2, "seeder top-20 gold recall >= 0.95 on the fixture hashtags")
def test_seeder_recall(dataset, res, record_property):
    assert len(dataset) >= 200
    start = time.perf_counter()
    fresh = build_tables(dataset, res)
    elapsed = time.perf_counter() - start
    found = sum(gold_rank([c.segmentation.chunks for c in table[:20]], inst.golds) is not None
                for table, inst in zip(fresh, dataset))
    recall = found / len(dataset)
    record_property("detail", f"recall={recall:.4f} on {len(dataset)} hashtags")
    record_property("detail", f"runtime={elapsed:.2f}s")
    assert recall >= 0.95
    assert elapsed < 30.0


@pytest.mark.acceptance(3, "k-fold (k=5) P@1 >= 0.70 with monotone P@n")
def test_kfold_p_at_1(dataset, res, tables, record_property):
    report = kfold_evaluate(dataset, res, folds=5, seed=0, tables=tables)
    values = [report.p_at_n[n] for n in P_AT_N]
    record_property("detail", " ".join(f"P@{n}={report.p_at_n[n]:.3f}" for n in P_AT_N))
    assert report.p_at_n[1] >= 0.70
    assert values == sorted(values)


@pytest.mark.acceptance(4, "all five features P@1 >= unigram-only P@1")
def test_feature_ablation(dataset, res, tables, record_property):
    full = kfold_evaluate(dataset, res, folds=5, seed=0, tables=tables)
    unigram = kfold_evaluate(dataset, res, folds=5, seed=0, tables=tables, columns=[0])
    record_property("detail", f"all_features_P@1={full.p_at_n[1]:.4f}")
    record_property("detail", f"unigram_only_P@1={unigram.p_at_n[1]:.4f}")
    print(f"all five features P@1={full.p_at_n[1]:.4f}  unigram only P@1={unigram.p_at_n[1]:.4f}")
    assert full.p_at_n[1] >= unigram.p_at_n[1]


@pytest.mark.acceptance(5, "elastic net: OLS, ridge 2/3, lasso soft-threshold, monotone objective")
def test_elastic_net(record_property):
    # (a) alpha = 0 against the normal equations
    worst = 0.0
    histories = []
    for seed in range(20):
        rng = np.random.default_rng(seed)
        X = rng.normal(size=(80, 5)) + rng.normal(size=5)
        y = X @ rng.normal(size=5) + 0.1 * rng.normal(size=80)
        model = train_elastic_net(X, y, 0.0, 0.5, tol=1e-12, max_iter=100000)
        Z = model.standardize(X)
        assert np.linalg.cond(Z.T @ Z) < 100
        w = np.linalg.solve(Z.T @ Z, Z.T @ y)
        worst = max(worst, float(np.max(np.abs(model.weights - w))))
        histories.append(model.objective_history)
    record_property("detail", f"(a) max|w-w_ols|={worst:.2e}")
    assert worst <= 1e-5

    # (b) ridge, X = [1, 1], y = [1, 1], alpha = 0.5, rho = 0
    w, _, h = coordinate_descent(np.array([[1.0], [1.0]]), np.array([1.0, 1.0]), 0.5, 0.0,
                                 tol=1e-12)
    histories.append(h)
    record_property("detail", f"(b) w={w[0]:.9f}")
    assert abs(w[0] - 2 / 3) <= 1e-6

    # (c) orthonormal design lasso
    worst_lasso = 0.0
    for seed, alpha in enumerate((0.05, 0.2, 0.5, 1.0, 3.0)):
        rng = np.random.default_rng(100 + seed)
        q, _ = np.linalg.qr(rng.normal(size=(50, 5)))
        Z = q * np.sqrt(50)
        y = Z @ rng.normal(scale=2.0, size=5) + rng.normal(size=50)
        model = train_elastic_net(Z, y, alpha, 1.0, tol=1e-12, standardize=False)
        expected = np.array([soft_threshold(b, alpha) for b in Z.T @ y / 50])
        worst_lasso = max(worst_lasso, float(np.max(np.abs(model.weights - expected))))
        histories.append(model.objective_history)
    record_property("detail", f"(c) max|w-soft|={worst_lasso:.2e}")
    assert worst_lasso <= 1e-6

    # (d) objective never increases across sweeps, on every run above
    rises = sum(int(np.any(np.diff(np.asarray(hh)) > 1e-12)) for hh in histories)
    record_property("detail", f"(d) runs with a rise={rises}/{len(histories)}")
    assert rises == 0


def _oracle_rel(kb, a, b):
    # independent restatement with log10 and explicit set sizes
    ia, ib = kb.pages[a].inlinks, kb.pages[b].inlinks
    common = len(ia & ib)
    if not ia or not ib or common == 0:
        return 0.0
    num = math.log10(max(len(ia), len(ib))) - math.log10(common)
    den = math.log10(kb.total_pages) - math.log10(min(len(ia), len(ib)))
    if den <= 0:
        return 1.0 if num == 0 else 0.0
    return min(1.0, max(0.0, 1 - num / den))


def _random_kb(rng, n_pages):
    ids = [f"p{i}" for i in range(n_pages)]
    pages = {}
    for pid in ids:
        k = rng.randint(0, min(6, n_pages - 1))
        pages[pid] = KbPage(pid, pid, frozenset(rng.sample([x for x in ids if x != pid], k)))
    mentions = {}
    for m in range(rng.randint(2, 6)):
        cands = rng.sample(ids, rng.randint(1, 3))
        raw = [rng.random() + 0.05 for _ in cands]
        scale = rng.uniform(0.5, 1.0) / sum(raw)
        mentions[f"m{m}"] = [(c, r * scale) for c, r in zip(cands, raw)]
    return Kb(pages, mentions, total_pages=rng.choice([n_pages, 100, 10 ** 6]))


@pytest.mark.acceptance(6, "relatedness suite and brute-force votes on small KBs")
def test_relatedness_suite(record_property):
    a = frozenset({"s1", "s2", "s3", "s4"})
    b = frozenset({"s1", "s2", "s5"})
    worked = milne_witten(a, b, 100)
    record_property("detail", f"worked example rel={worked:.6f}")
    assert abs(worked - 0.802) <= 1e-3

    rng = random.Random(6)
    checked = 0
    for _ in range(60):
        kb = _random_kb(rng, rng.randint(3, 20))
        ids = sorted(kb.pages)
        for x in ids:
            if kb.pages[x].inlinks:
                assert kb.relatedness(x, x) == 1.0
            for y in ids:
                r = kb.relatedness(x, y)
                assert 0.0 <= r <= 1.0
                assert r == kb.relatedness(y, x)
                assert math.isclose(r, _oracle_rel(kb, x, y), abs_tol=1e-12)
        surfaces = sorted(kb.mentions)
        for voter in surfaces:
            cands = kb.mentions[voter]
            for pa in ids:
                expected = sum(_oracle_rel(kb, pb, pa) * pr for pb, pr in cands) / len(cands)
                assert math.isclose(kb.vote(voter, pa), expected, abs_tol=1e-12)
        for target in surfaces:
            context = [s for s in surfaces if s != target]
            best = None
            for pid, prior in kb.mentions[target]:
                total = sum(sum(_oracle_rel(kb, pb, pid) * pr for pb, pr in kb.mentions[v])
                            / len(kb.mentions[v]) for v in context)
                assert math.isclose(kb.total_relatedness(pid, context), total, abs_tol=1e-12)
                if best is None or (total, prior) > (best[1], best[2]):
                    best = (pid, total, prior)
            links, score = kb.link_hashtag_entities([target], context, threshold=0.1)
            assert math.isclose(score, min(best[1], 1.0) * best[2], abs_tol=1e-12)
            assert [l.page for l in links] == ([best[0]] if min(best[1], 1.0) >= 0.1 else [])
            checked += 1
    record_property("detail", f"{checked} hashtag mentions checked")


@pytest.mark.acceptance(7, "capitalization rules")
def test_capitalization_rules(record_property):
    intact = capitalization_score("followUCBleague", ["follow", "ucb", "league"])
    split = capitalization_score("followUCBleague", ["follow", "uc", "bleague"])
    clusters = capitalization_clusters("homesandgardens")
    record_property("detail", f"intact={intact} split={split} clusters={clusters}")
    assert intact == 0
    assert split == 1
    assert clusters == []


def _cli(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.mark.acceptance(8, "train and evaluate are byte-identical across runs")
def test_determinism(tmp_path, record_property):
    outputs = []
    for run in range(2):
        model_path = tmp_path / f"model{run}.txt"
        code_t, out_t = _cli(["train", "-o", str(model_path), "--seed", "0"])
        code_e, out_e = _cli(["evaluate", "--seed", "0"])
        assert code_t == 0 and code_e == 0
        outputs.append((model_path.read_bytes(), out_t, out_e))
    same_model = outputs[0][0] == outputs[1][0]
    same_train = outputs[0][1] == outputs[1][1]
    same_eval = outputs[0][2] == outputs[1][2]
    record_property("detail", f"model={same_model} train={same_train} evaluate={same_eval}")
    assert same_model and same_train and same_eval


@pytest.mark.acceptance(9, "worked example NSAvsSnowden")
def test_worked_example(res, record_property):
    model = ElasticNetModel.load(data_path("model"))
    table = candidate_table(res, EXAMPLE_HASHTAG, EXAMPLE_TWEET)
    result = rank(model, table, EXAMPLE_HASHTAG)
    top = result.top.segmentation.text
    links = {link.mention.surface: link.page for link in result.links}
    record_property("detail", f"top='{top}'")
    record_property("detail", "links=" + ",".join(f"{k}->{v}" for k, v in sorted(links.items())))
    assert top == "NSA vs Snowden"
    assert links.get("nsa") == "National_Security_Agency"
    assert links.get("snowden") == "Edward_Snowden"


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
