"""Context-aware hashtag segmentation and entity linking."""

from .context import ContentLexicon, Taxonomy, content_words, context_score, load_taxonomy
from .elastic_net import ElasticNetModel, ElasticNetRanker, cross_validate, train_elastic_net
from .evaluation import (AnnotatedTweet, EvalReport, LabeledInstance, kfold_evaluate,
                         linking_prf, precision_at_n, synthesize_dataset)
from .features import (FeatureVector, capitalization_clusters, capitalization_score,
                       extract_features)
from .knowledge_base import EntityLink, Kb, KbPage, load_kb
from .ngram_lm import (BigramModel, UnigramModel, WordLenPrior, load_bigrams, load_unigrams,
                       load_word_len_prior)
from .ranker import AnnotationResult, HashtagSegmenter, rank
from .resources import Resources, bundled_resources, load_resources
from .segmentation import (SeederConfig, Segmentation, brute_force_best_seg, enumerate_windows,
                           seed_segmentations, sliding_window_score, viterbi_word_seg)

__version__ = "0.1.0"
