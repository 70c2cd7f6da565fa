"""Conversational question answering over heterogeneous sources.

The pipeline has three stages: question understanding into 4-slot structured
representations, entity-centric evidence retrieval with on-the-fly
verbalization and BM25 scoring, and heterogeneous answering. A distant
supervision labeler, a full evaluation harness and an interactive session
service round out the package.
"""

__version__ = "0.1.0"

from .benchmark import (
    BenchmarkSplit,
    Conversation,
    GoldAnswer,
    Turn,
    load_convmix,
    split_convmix,
)
from .corpus import (
    Corpus,
    Entity,
    EntityId,
    Infobox,
    KBFact,
    Literal,
    Table,
    WikiPage,
    load_snapshot,
    normalize_literal,
)
from .qu import (
    ConversationHistory,
    ConversationalFlowGraph,
    QuVariant,
    StructuredRepresentation,
    build_cfg,
    generate_sr,
    heuristic_sr,
    infer_answer_type,
    prepend,
)
from .retrieval import (
    Disambiguation,
    Evidence,
    RankedEvidence,
    Retriever,
    RetrieverConfig,
    bm25_score,
    disambiguate,
    retrieve_evidences,
    sentence_evidences,
    top_e,
    verbalize_fact,
    verbalize_infobox_entry,
    verbalize_table_row,
)
from .supervision import (
    LabeledTurn,
    RelevantMention,
    gold_answer_type,
    is_answering,
    label_conversation,
)
from .answering import (
    HaTrainingInstance,
    PredictedAnswer,
    extractive_answer,
    prepare_training_set,
)
from .evaluation import (
    MetricsReport,
    NormalizedAnswer,
    answer_presence,
    evaluate_run,
    levenshtein,
    mcnemar,
    normalize_answer,
    p_at_1,
    paired_t_test,
)
from .pipeline import Pipeline, PipelineConfig, run_benchmark

__all__ = [
    "BenchmarkSplit",
    "Conversation",
    "ConversationHistory",
    "ConversationalFlowGraph",
    "Corpus",
    "Disambiguation",
    "Entity",
    "EntityId",
    "Evidence",
    "GoldAnswer",
    "HaTrainingInstance",
    "Infobox",
    "KBFact",
    "LabeledTurn",
    "Literal",
    "MetricsReport",
    "NormalizedAnswer",
    "Pipeline",
    "PipelineConfig",
    "PredictedAnswer",
    "QuVariant",
    "RankedEvidence",
    "RelevantMention",
    "Retriever",
    "RetrieverConfig",
    "StructuredRepresentation",
    "Table",
    "Turn",
    "WikiPage",
    "answer_presence",
    "bm25_score",
    "build_cfg",
    "disambiguate",
    "evaluate_run",
    "extractive_answer",
    "generate_sr",
    "gold_answer_type",
    "heuristic_sr",
    "infer_answer_type",
    "is_answering",
    "label_conversation",
    "levenshtein",
    "load_convmix",
    "load_snapshot",
    "mcnemar",
    "normalize_answer",
    "normalize_literal",
    "p_at_1",
    "paired_t_test",
    "prepare_training_set",
    "prepend",
    "retrieve_evidences",
    "run_benchmark",
    "sentence_evidences",
    "split_convmix",
    "top_e",
    "verbalize_fact",
    "verbalize_infobox_entry",
    "verbalize_table_row",
]
