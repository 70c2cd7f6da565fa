"""Walk the running example conversation turn by turn and print what the
system would show a user: the frame, the conversational flow graph and the
best evidences.

    python demos/demo_explainability.py
"""

from pathlib import Path

from hetconv import load_snapshot
from hetconv.pipeline import Pipeline, PipelineConfig
from hetconv.qu import ConversationHistory, QuVariant

ROOT = Path(__file__).resolve().parent.parent

corpus = load_snapshot(ROOT / "fixtures" / "got-mini")
pipeline = Pipeline(corpus, PipelineConfig(qu=QuVariant.HEURISTIC_SR, history_mode="predicted"))

questions = [
    "Who played Jaime Lannister in GoT?",
    "What about the dwarf?",
    "When was he born?",
    "Release date of first season?",
    "Duration of an episode?",
]

history = ConversationHistory()
for question in questions:
    result = pipeline.ask(history, question)
    cfg = pipeline.explain(history, question, result.sr)
    print(f"q{len(history.turns)}: {question}")
    print(f"  frame : {result.sr.serialized()}")
    if cfg.self_sufficient:
        print("  flow  : self-sufficient")
    else:
        for edge in cfg.edges:
            print(f"  flow  : {edge.source} -> {edge.target}  via {', '.join(edge.words)}")
    print(f"  answer: {result.prediction.raw}")
    for entry in result.ranked[:3]:
        print(f"    [{entry.evidence.source:5s} {entry.bm25:6.2f}] {entry.evidence.text[:90]}")
    history = history.append(question, (result.prediction.raw,))
    print()
