"""Bundle of every loaded model the annotator needs, and the bundled fixture data."""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources as importlib_resources
from pathlib import Path
from typing import Optional

from .context import ContentLexicon, Taxonomy, load_stopwords, load_taxonomy
from .knowledge_base import DEFAULT_THRESHOLD, Kb, load_kb
from .ngram_lm import (BigramModel, UnigramModel, WordLenPrior, load_bigrams, load_unigrams,
                       load_word_len_prior)
from .segmentation import SeederConfig

DATA_FILES = {
    "unigrams": "unigrams.tsv",
    "bigrams": "bigrams.tsv",
    "prior": "word_len_prior.tsv",
    "kb_pages": "kb_pages.tsv",
    "kb_mentions": "kb_mentions.tsv",
    "kb_inlinks": "kb_inlinks.tsv",
    "taxonomy": "taxonomy.tsv",
    "stopwords": "stopwords.txt",
    "model": "model.txt",
    "corpus": "corpus.txt",
    "tweets": "annotated_tweets.tsv",
}


def data_path(name: str) -> Path:
    """Path of a bundled fixture file, by key of :data:`DATA_FILES` or file name."""
    filename = DATA_FILES.get(name, name)
    return Path(str(importlib_resources.files("hashseg") / "data" / filename))


@dataclass(frozen=True)
class Resources:
    unigrams: UnigramModel
    bigrams: BigramModel
    prior: WordLenPrior
    kb: Kb
    taxonomy: Taxonomy
    lexicon: ContentLexicon
    seeder: SeederConfig = field(default_factory=SeederConfig)
    rel_threshold: float = DEFAULT_THRESHOLD


def load_resources(unigrams, bigrams, prior, kb_pages, kb_mentions, kb_inlinks, taxonomy,
                   stopwords, seeder: Optional[SeederConfig] = None,
                   rel_threshold: float = DEFAULT_THRESHOLD,
                   total_pages: Optional[int] = None) -> Resources:
    return Resources(
        unigrams=load_unigrams(unigrams),
        bigrams=load_bigrams(bigrams),
        prior=load_word_len_prior(prior),
        kb=load_kb(kb_pages, kb_mentions, kb_inlinks, total_pages),
        taxonomy=load_taxonomy(taxonomy),
        lexicon=load_stopwords(stopwords),
        seeder=seeder or SeederConfig(),
        rel_threshold=rel_threshold,
    )


def bundled_resources(seeder: Optional[SeederConfig] = None,
                      rel_threshold: float = DEFAULT_THRESHOLD) -> Resources:
    """Load the small fixture LM, KB, taxonomy and stopword list shipped with the package."""
    keys = ("unigrams", "bigrams", "prior", "kb_pages", "kb_mentions", "kb_inlinks",
            "taxonomy", "stopwords")
    return load_resources(*(data_path(k) for k in keys), seeder=seeder,
                          rel_threshold=rel_threshold)
