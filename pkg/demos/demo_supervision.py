"""Distant supervision in action: label plain question/answer conversations
with gold frames by testing which mentions bring in answering evidences.

    python demos/demo_supervision.py
"""

from pathlib import Path

from hetconv import load_convmix, load_snapshot
from hetconv.retrieval import Retriever
from hetconv.supervision import label_conversation

ROOT = Path(__file__).resolve().parent.parent

corpus = load_snapshot(ROOT / "fixtures" / "got-mini")
conversations = load_convmix(ROOT / "fixtures" / "supervision-planted.json")
retriever = Retriever(corpus)

for conversation in conversations[:3]:
    print(f"=== {conversation.conv_id} ===")
    labeled = label_conversation(conversation, corpus, retriever)
    for turn, label in zip(conversation.turns, labeled):
        mentions = ", ".join(
            f"{m.surface} (turn {m.source_turn}, {m.evidence_count} ev)"
            for m in label.relevant_mentions
        )
        print(f"q{turn.index}: {turn.question}")
        print(f"  gold frame: {label.gold_sr.serialized()}")
        print(f"  relevant  : {mentions or '-'}")
    print()
