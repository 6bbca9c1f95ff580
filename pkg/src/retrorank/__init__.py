"""retrorank: search and re-rank bug-fixing comments from resolved bug threads.

Pipeline: tf-idf cosine retrieval over resolved-bug comments, positivity
re-ranking against a bonus/penalty opinion lexicon, TextRank co-occurrence
re-ranking, fused by a linear weighted combination. Ships an evaluation
harness (mean goldset rank + Student's paired t-test), a CLI, and an HTTP
service.
"""

from .corpus import (BugNotFoundError, BugReport, Comment, Corpus, CorpusError,
                     get_bug, load_corpus, resolved_comments, save_corpus)
from .evalstats import (EvalReport, EvalRun, GoldsetEntry, GoldsetError,
                        PairComparison, TTestResult, ZeroVarianceError,
                        goldset_rank, load_goldset, paired_t_test, report_dict,
                        report_text, run_eval, t_cdf, t_critical, validate_goldset)
from .ranker import (PRESETS, MissingLexiconError, PipelineConfig, RankedComment,
                     SearchEngine, UnknownPresetError, normalize_minmax, preset, rank)
from .sentiment import (LexiconError, OpinionLexicon, SentimentScore,
                        default_lexicon, load_lexicon, sa_score)
from .textprep import (QUERY_REF, TokenizedDoc, default_stopwords,
                       load_stopwords, tokenize)
from .textrank import (CoocGraph, KeywordScores, build_cooc_graph, dump_graph,
                       textrank, tr_score)
from .vsm import (DuplicateDocRefError, EmptyQueryError, InvertedIndex,
                  build_index, load_index, save_index, vsm_score)

__version__ = "0.1.0"
