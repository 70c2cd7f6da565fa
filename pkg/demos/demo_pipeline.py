"""End-to-end walkthrough: load the bundled snapshot and benchmark, run the
pipeline in gold-frame oracle mode and in heuristic mode, and score both runs.

    python demos/demo_pipeline.py
"""

from pathlib import Path

from hetconv import load_convmix, load_snapshot
from hetconv.evaluation import evaluate_run
from hetconv.pipeline import PipelineConfig, run_benchmark, write_run_file
from hetconv.qu import QuVariant

ROOT = Path(__file__).resolve().parent.parent

corpus = load_snapshot(ROOT / "fixtures" / "got-mini")
benchmark = load_convmix(ROOT / "fixtures" / "convmix-mini.json")
print(f"corpus: {len(corpus.entities)} entities, {len(corpus.pages)} pages")
print(f"benchmark: {len(benchmark)} conversations\n")

out_dir = ROOT / "demos" / "out"
out_dir.mkdir(exist_ok=True)

for variant in (QuVariant.GOLD_SR, QuVariant.HEURISTIC_SR):
    config = PipelineConfig(qu=variant, history_mode="gold")
    results = run_benchmark(corpus, benchmark, config)
    run_path = out_dir / f"run-{variant.value}.jsonl"
    write_run_file(run_path, results)
    report = evaluate_run(run_path, benchmark)
    print(f"=== {variant.value} ===")
    print(report.format_table())
    print()
