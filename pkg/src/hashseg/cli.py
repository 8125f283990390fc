"""Command-line interface: ``annotate``, ``train``, ``evaluate`` and ``build-prior``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, TextIO

from ._io import LoadError
from .elastic_net import ElasticNetModel, TrainingError, objective
from .evaluation import kfold_evaluate, load_annotated_tweets, synthesize_dataset
from .features import FEATURE_NAMES
from .knowledge_base import DEFAULT_THRESHOLD
from .ngram_lm import WordLenPrior
from .ranker import (DEFAULT_ALPHA_GRID, DEFAULT_RHO_GRID, AnnotationResult, candidate_table,
                     fit_ranker, rank, training_rows, unweighted_model, feature_matrix)
from .resources import Resources, data_path, load_resources
from .segmentation import SeederConfig

logger = logging.getLogger("hashseg")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3

RESOURCE_FLAGS = {
    "unigrams": "unigrams",
    "bigrams": "bigrams",
    "prior": "prior",
    "kb_pages": "kb-pages",
    "kb_mentions": "kb-mentions",
    "kb_inlinks": "kb-inlinks",
    "taxonomy": "taxonomy",
    "stopwords": "stopwords",
}


@dataclass
class RunConfig:
    unigrams: Path
    bigrams: Path
    prior: Path
    kb_pages: Path
    kb_mentions: Path
    kb_inlinks: Path
    taxonomy: Path
    stopwords: Path
    seeder: SeederConfig
    rel_threshold: float = DEFAULT_THRESHOLD
    seed: int = 0
    output_format: str = "text"
    kb_total_pages: Optional[int] = None

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        paths = {key: Path(getattr(args, key)) for key in RESOURCE_FLAGS}
        missing = [f"--{RESOURCE_FLAGS[k]} {p}" for k, p in paths.items() if not p.is_file()]
        if missing:
            raise FileNotFoundError("missing input file(s): " + ", ".join(missing))
        if not 0.0 <= args.rel_threshold:
            raise ValueError("--rel-threshold must be non-negative")
        seeder = SeederConfig(args.min_len, args.max_len, args.window_constant, args.top_k)
        return cls(seeder=seeder, rel_threshold=args.rel_threshold, seed=args.seed,
                   output_format=args.format, kb_total_pages=args.kb_total_pages, **paths)

    def load(self) -> Resources:
        return load_resources(self.unigrams, self.bigrams, self.prior, self.kb_pages,
                              self.kb_mentions, self.kb_inlinks, self.taxonomy, self.stopwords,
                              seeder=self.seeder, rel_threshold=self.rel_threshold,
                              total_pages=self.kb_total_pages)


def _float_list(text: str) -> List[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _add_common(p: argparse.ArgumentParser, formats=("text", "tsv", "json-lines")):
    g = p.add_argument_group("resources (default: bundled fixture data)")
    for key, flag in RESOURCE_FLAGS.items():
        g.add_argument(f"--{flag}", dest=key, default=str(data_path(key)), metavar="PATH")
    g.add_argument("--kb-total-pages", type=int, default=None, metavar="W",
                   help="page count of the full collection the KB subset comes from")
    s = p.add_argument_group("seeding")
    s.add_argument("--min-len", type=int, default=2)
    s.add_argument("--max-len", type=int, default=6)
    s.add_argument("--top-k", type=int, default=20)
    s.add_argument("--window-constant", type=float, default=1.0)
    p.add_argument("--rel-threshold", type=float, default=DEFAULT_THRESHOLD)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=formats, default=formats[0])


def _add_training(p: argparse.ArgumentParser):
    p.add_argument("dataset", nargs="?", default=str(data_path("tweets")),
                   help="annotated tweets file (default: bundled fixture tweets)")
    p.add_argument("--alpha", type=_float_list, default=list(DEFAULT_ALPHA_GRID),
                   help="comma-separated alpha grid")
    p.add_argument("--rho", type=_float_list, default=list(DEFAULT_RHO_GRID),
                   help="comma-separated rho grid")
    p.add_argument("--folds", type=int, default=5)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hashseg", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("annotate", help="segment and link hashtag<TAB>tweet lines")
    _add_common(p)
    p.add_argument("input", nargs="?", default="-", help="input file (default: stdin)")
    p.add_argument("--model", default=str(data_path("model")))
    p.add_argument("--unweighted", action="store_true",
                   help="rank with equal weights on standardized features, no model file")
    p.set_defaults(func=cmd_annotate)

    p = sub.add_parser("train", help="fit the ranker on annotated tweets")
    _add_common(p, formats=("text",))
    _add_training(p)
    p.add_argument("-o", "--output", required=True, help="model file to write")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("evaluate", help="k-fold P@n and linking scores")
    _add_common(p, formats=("text", "json-lines"))
    _add_training(p)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("build-prior", help="word-length prior from a text corpus")
    p.add_argument("corpus", help="UTF-8 text, one document per line")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--max-length", type=int, default=15)
    p.set_defaults(func=cmd_build_prior)
    return parser


def _links_field(result: AnnotationResult) -> str:
    return ";".join(f"{link.mention.surface}:{link.page}:{link.score:.6f}"
                    for link in result.links)


def write_result(result: AnnotationResult, fmt: str, out: TextIO, kb) -> None:
    tag = "#" + result.hashtag.lstrip("#")
    if fmt == "tsv":
        for i, cand in enumerate(result.candidates, start=1):
            links = _links_field(result) if i == 1 else ""
            out.write(f"{tag}\t{i}\t{cand.segmentation.text}\t{cand.score:.6f}\t{links}\n")
    elif fmt == "json-lines":
        doc = {
            "hashtag": tag,
            "candidates": [
                {"rank": i, "segmentation": list(c.segmentation.chunks),
                 "score": round(c.score, 6),
                 "features": {k: round(v, 6) for k, v in zip(FEATURE_NAMES, c.features)}}
                for i, c in enumerate(result.candidates, start=1)
            ],
            "links": [
                {"surface": link.mention.surface, "page_id": link.page,
                 "title": kb.title(link.page), "score": round(link.score, 6)}
                for link in result.links
            ],
        }
        out.write(json.dumps(doc, ensure_ascii=False) + "\n")
    else:
        out.write(tag + "\n")
        for i, cand in enumerate(result.candidates, start=1):
            out.write(f"  {i:>2}. {cand.segmentation.text}  ({cand.score:.6f})\n")
        for link in result.links:
            out.write(f"      {link.mention.surface} -> {link.page} ({link.score:.6f})\n")


def cmd_annotate(args, out: TextIO) -> int:
    cfg = RunConfig.from_args(args)
    res = cfg.load()
    model = None
    if not args.unweighted:
        model = ElasticNetModel.load(args.model)
        if model.n_features != len(FEATURE_NAMES):
            raise LoadError(args.model, f"expected {len(FEATURE_NAMES)} weights")
    try:
        stream = sys.stdin if args.input == "-" else open(args.input, encoding="utf-8")
    except OSError as exc:
        print(f"hashseg: cannot read input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    skipped = 0
    with stream:
        for lineno, line in enumerate(stream, start=1):
            line = line.rstrip("\r\n")
            if not line.strip():
                continue
            hashtag, sep, tweet = line.partition("\t")
            if not sep or not hashtag.strip().lstrip("#"):
                skipped += 1
                logger.warning("line %d: expected 'hashtag<TAB>tweet', skipped", lineno)
                continue
            table = candidate_table(res, hashtag.strip(), tweet)
            m = model or unweighted_model(feature_matrix(table))
            write_result(rank(m, table, hashtag.strip().lstrip("#")), cfg.output_format, out,
                         res.kb)
    if skipped:
        print(f"hashseg: skipped {skipped} malformed line(s)", file=sys.stderr)
    return EXIT_OK


def _dataset(args, cfg: RunConfig):
    tweets = load_annotated_tweets(args.dataset)
    return synthesize_dataset(tweets, seed=cfg.seed)


def cmd_train(args, out: TextIO) -> int:
    cfg = RunConfig.from_args(args)
    res = cfg.load()
    dataset = _dataset(args, cfg)
    if len(dataset) < args.folds:
        raise TrainingError(f"{len(dataset)} instances cannot fill {args.folds} folds")
    tables = [candidate_table(res, inst.hashtag, inst.tweet_context) for inst in dataset]
    X, y, groups = training_rows(tables, [inst.gold_chunks for inst in dataset])
    model = fit_ranker(X, y, groups, args.alpha, args.rho, args.folds, cfg.seed)
    model.save(args.output)
    final = objective(model.standardize(X), y, model.weights, model.alpha, model.rho)
    out.write(f"instances={len(dataset)}\nrows={len(y)}\n")
    out.write(f"alpha={model.alpha:.6g}\nrho={model.rho:.6g}\nobjective={final:.9f}\n")
    out.write("weights=" + ",".join(f"{n}:{w:.6f}" for n, w in zip(FEATURE_NAMES, model.weights))
              + "\n")
    return EXIT_OK


def cmd_evaluate(args, out: TextIO) -> int:
    cfg = RunConfig.from_args(args)
    res = cfg.load()
    dataset = _dataset(args, cfg)
    report = kfold_evaluate(dataset, res, folds=args.folds, seed=cfg.seed,
                            alpha_grid=args.alpha, rho_grid=args.rho)
    out.write(report.to_json() + "\n" if cfg.output_format == "json-lines" else report.to_text())
    return EXIT_OK


def cmd_build_prior(args, out: TextIO) -> int:
    with open(args.corpus, encoding="utf-8") as fh:
        prior = WordLenPrior.from_corpus(fh, max_length=args.max_length)
    prior.dump(args.output)
    mass = sum(prior.prob(n) for n in range(2, 7))
    out.write(f"lengths=1..{args.max_length}\nmass_2_to_6={mass:.6f}\n")
    return EXIT_OK


def main(argv=None, out: Optional[TextIO] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except TrainingError as exc:
        print(f"hashseg: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (LoadError, FileNotFoundError, ValueError, OSError) as exc:
        print(f"hashseg: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
