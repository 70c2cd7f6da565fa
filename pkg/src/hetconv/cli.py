"""Command line interface: ingest | label | run | eval | compare | serve."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .benchmark import load_convmix, split_convmix
from .corpus import load_snapshot
from .evaluation import evaluate_run, mcnemar
from .pipeline import (
    PipelineConfig,
    config_from_mapping,
    load_config_file,
    run_benchmark,
)
from .qu import QuVariant
from .retrieval import Retriever
from .supervision import label_conversation, write_labeled_jsonl

log = logging.getLogger(__name__)


def _add_corpus_arg(parser):
    parser.add_argument("--corpus", required=True, help="snapshot directory")


def _add_benchmark_arg(parser):
    parser.add_argument("--benchmark", required=True, help="conversation benchmark JSON file")


def _add_config_args(parser):
    parser.add_argument("--config", help="pipeline config file (TOML or JSON)")
    parser.add_argument("--qu", choices=[v.value for v in QuVariant], help="QU variant")
    parser.add_argument("--mode", choices=["gold", "predicted"], help="history mode")
    parser.add_argument(
        "--sources",
        help="comma-separated source mask, e.g. kb,text,table,info",
    )
    parser.add_argument("--e", type=int, help="evidences kept after scoring")
    parser.add_argument(
        "--ablate",
        help="comma-separated frame slots to blank: "
        "context,question_entity,predicate,type,ordering",
    )
    parser.add_argument("--reader-endpoint", help="external generative reader URL")
    parser.add_argument("--qu-endpoint", help="external QU service URL")


def _build_config(args) -> PipelineConfig:
    raw = load_config_file(args.config) if args.config else {}
    if getattr(args, "qu", None):
        raw["qu"] = args.qu
    if getattr(args, "mode", None):
        raw["history_mode"] = args.mode
    if getattr(args, "reader_endpoint", None):
        raw["reader_endpoint"] = args.reader_endpoint
        raw["answerer"] = "external"
    if getattr(args, "qu_endpoint", None):
        raw["qu_endpoint"] = args.qu_endpoint
    if getattr(args, "ablate", None):
        raw["ablate"] = [s.strip() for s in args.ablate.split(",") if s.strip()]
    retriever = dict(raw.get("retriever", {}))
    if getattr(args, "sources", None):
        retriever["sources"] = [s.strip() for s in args.sources.split(",") if s.strip()]
    if getattr(args, "e", None):
        retriever["e"] = args.e
    if retriever:
        raw["retriever"] = retriever
    return config_from_mapping(raw)


def _select_split(conversations, args):
    if not getattr(args, "split", None) or args.split == "all":
        return conversations
    split = split_convmix(conversations, seed=args.seed)
    return list(getattr(split, args.split))


def cmd_ingest(args) -> int:
    corpus = load_snapshot(args.corpus)
    facts = {f.fact_id for fs in corpus.facts_by_subject.values() for f in fs}
    print(f"entities   {len(corpus.entities)}")
    print(f"facts      {len(facts)}")
    print(f"pages      {len(corpus.pages)}")
    print(f"aliases    {len(corpus.alias_lexicon)}")
    print(f"links      {len(corpus.link_dictionary)}")
    if args.out:
        Path(args.out).write_text(
            json.dumps(corpus.to_dict(), ensure_ascii=False, indent=2), "utf-8"
        )
        print(f"normalized snapshot written to {args.out}")
    return 0


def cmd_label(args) -> int:
    corpus = load_snapshot(args.corpus)
    conversations = _select_split(load_convmix(args.benchmark), args)
    config = _build_config(args)
    retriever = Retriever(corpus, config.retriever)
    labels = [
        (conv.conv_id, label_conversation(conv, corpus, retriever))
        for conv in conversations
    ]
    write_labeled_jsonl(args.out, labels)
    turns = sum(len(item[1]) for item in labels)
    print(f"labeled {turns} turns across {len(labels)} conversations -> {args.out}")
    return 0


def cmd_run(args) -> int:
    corpus = load_snapshot(args.corpus)
    conversations = _select_split(load_convmix(args.benchmark), args)
    config = _build_config(args)
    results = run_benchmark(
        corpus,
        conversations,
        config,
        run_path=args.out,
        evidence_dump_path=args.dump_evidences,
    )
    print(f"ran {len(results)} questions -> {args.out}")
    return 0


def cmd_eval(args) -> int:
    conversations = load_convmix(args.benchmark)
    report = evaluate_run(args.run, conversations)
    print(report.format_table())
    if args.out:
        Path(args.out).write_text(
            json.dumps(report.to_dict(), ensure_ascii=False, indent=2), "utf-8"
        )
        print(f"report written to {args.out}")
    return 0


def cmd_compare(args) -> int:
    conversations = load_convmix(args.benchmark)
    report_a = evaluate_run(args.run_a, conversations)
    report_b = evaluate_run(args.run_b, conversations)
    keys_a = [(r.conv_id, r.turn) for r in report_a.records]
    keys_b = [(r.conv_id, r.turn) for r in report_b.records]
    if keys_a != keys_b:
        print("run files cover different question sets", file=sys.stderr)
        return 2
    a = [r.p_at_1 for r in report_a.records]
    b = [r.p_at_1 for r in report_b.records]
    b_only = sum(1 for x, y in zip(a, b) if x == 1 and y == 0)
    c_only = sum(1 for x, y in zip(a, b) if x == 0 and y == 1)
    statistic, p_value = mcnemar(a, b)
    print(f"P@1 A = {report_a.p_at_1:.3f}   P@1 B = {report_b.p_at_1:.3f}")
    print(f"A-only correct b = {b_only}, B-only correct c = {c_only}")
    print(f"McNemar statistic = {statistic:.4f}, p = {p_value:.4f}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    corpus = load_snapshot(args.corpus)
    if not args.mode:
        args.mode = "predicted"  # sessions see the system's own answers by default
    config = _build_config(args)
    app = create_app(
        corpus,
        config,
        persist_dir=args.persist,
        static_dir=args.static,
    )
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hetconv",
        description="Conversational QA over heterogeneous sources",
    )
    parser.add_argument("--version", action="version", version=f"hetconv {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="validate a snapshot and print stats")
    _add_corpus_arg(p_ingest)
    p_ingest.add_argument("--out", help="write the normalized snapshot to this JSON file")
    p_ingest.set_defaults(func=cmd_ingest)

    p_label = sub.add_parser("label", help="distant-supervision labeling of a benchmark")
    _add_corpus_arg(p_label)
    _add_benchmark_arg(p_label)
    p_label.add_argument("--out", required=True, help="output JSONL of labeled turns")
    p_label.add_argument("--split", choices=["train", "dev", "test", "all"], default="all")
    p_label.add_argument("--seed", type=int, default=0)
    _add_config_args(p_label)
    p_label.set_defaults(func=cmd_label)

    p_run = sub.add_parser("run", help="batch QU -> retrieval -> answering run")
    _add_corpus_arg(p_run)
    _add_benchmark_arg(p_run)
    p_run.add_argument("--out", required=True, help="output run JSONL")
    p_run.add_argument("--dump-evidences", help="optional evidence dump JSONL")
    p_run.add_argument("--split", choices=["train", "dev", "test", "all"], default="all")
    p_run.add_argument("--seed", type=int, default=0)
    _add_config_args(p_run)
    p_run.set_defaults(func=cmd_run)

    p_eval = sub.add_parser("eval", help="score a run file against the benchmark")
    p_eval.add_argument("--run", required=True)
    _add_benchmark_arg(p_eval)
    p_eval.add_argument("--out", help="write the JSON report here")
    p_eval.set_defaults(func=cmd_eval)

    p_compare = sub.add_parser("compare", help="McNemar significance test of two runs")
    p_compare.add_argument("--run-a", required=True)
    p_compare.add_argument("--run-b", required=True)
    _add_benchmark_arg(p_compare)
    p_compare.set_defaults(func=cmd_compare)

    p_serve = sub.add_parser("serve", help="start the interactive session service")
    _add_corpus_arg(p_serve)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8220)
    p_serve.add_argument("--persist", help="directory for session JSON persistence")
    p_serve.add_argument("--static", help="directory of UI assets to serve under /ui")
    _add_config_args(p_serve)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
