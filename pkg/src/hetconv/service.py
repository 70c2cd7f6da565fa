"""HTTP service for interactive conversation sessions.

Sessions run the pipeline in predicted-answer mode: the history a follow-up
sees contains the system's own previous answers. Each answer ships with its
frame, the conversational flow graph and the ranked evidences so a client can
explain and steer the run (sr_override re-runs retrieval and answering).
"""

from __future__ import annotations

import json
import logging
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .corpus import Corpus
from .pipeline import Pipeline, PipelineConfig, TurnResult
from .qu import ConversationHistory, SrFormatError, StructuredRepresentation, build_cfg

log = logging.getLogger(__name__)

DEFAULT_EVIDENCE_PAGE = 20


class AskRequest(BaseModel):
    question: str | None = None
    sr_override: str | None = None
    turn: int | None = None


@dataclass
class SessionTurn:
    question: str
    result: TurnResult

    def payload(self, evidence_limit: int, history: ConversationHistory, corpus) -> dict:
        cfg = build_cfg(self.result.sr, history, self.question, corpus.stopwords)
        return {
            "turn": self.result.turn,
            "question": self.question,
            "answer": self.result.prediction.raw,
            "normalized": self.result.prediction.to_dict()["normalized"],
            "sr": self.result.sr.serialized(),
            "cfg": cfg.to_dict(),
            "evidences": [
                {
                    "rank": entry.rank,
                    "score": entry.bm25,
                    "source": entry.evidence.source,
                    "text": entry.evidence.text,
                    "id": entry.evidence.evidence_id,
                    "provenance": list(entry.evidence.provenance),
                }
                for entry in self.result.ranked[:evidence_limit]
            ],
            "total_evidences": len(self.result.ranked),
        }


@dataclass
class Session:
    session_id: str
    turns: list[SessionTurn] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def history_before(self, index: int) -> ConversationHistory:
        history = ConversationHistory()
        for turn in self.turns[:index]:
            history = history.append(turn.question, (turn.result.prediction.raw,))
        return history


def _parse_override(raw: str) -> StructuredRepresentation:
    try:
        return StructuredRepresentation.parse(raw)
    except (SrFormatError, ValueError) as exc:
        slots = raw.split(" | ")
        raise HTTPException(
            status_code=400,
            detail={
                "error": "malformed sr_override",
                "expected_slots": 4,
                "received_slots": len(slots),
                "slots": slots,
                "message": str(exc),
            },
        ) from None


def create_app(
    corpus: Corpus,
    config: PipelineConfig | None = None,
    persist_dir: str | Path | None = None,
    static_dir: str | Path | None = None,
) -> FastAPI:
    """Build the session service over a loaded corpus.

    persist_dir, when given, receives one JSON file per session after every
    mutation; static_dir, when it exists, is served under /ui.
    """
    config = config or PipelineConfig(history_mode="predicted")
    pipeline = Pipeline(corpus, config)
    sessions: dict[str, Session] = {}
    registry_lock = threading.Lock()
    app = FastAPI(title="hetconv session service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def _persist(session: Session):
        if persist_dir is None:
            return
        path = Path(persist_dir)
        path.mkdir(parents=True, exist_ok=True)
        payload = {
            "session_id": session.session_id,
            "turns": [
                turn.payload(len(turn.result.ranked), session.history_before(i), corpus)
                for i, turn in enumerate(session.turns)
            ],
        }
        (path / f"{session.session_id}.json").write_text(
            json.dumps(payload, ensure_ascii=False, indent=2), "utf-8"
        )

    def _get_session(session_id: str) -> Session:
        session = sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail=f"unknown session {session_id!r}")
        return session

    @app.get("/health")
    def health():
        return {
            "status": "ok",
            "entities": len(corpus.entities),
            "pages": len(corpus.pages),
        }

    @app.post("/sessions")
    def create_session():
        session = Session(session_id=uuid.uuid4().hex[:12])
        with registry_lock:
            sessions[session.session_id] = session
        _persist(session)
        return {"session_id": session.session_id}

    @app.post("/sessions/{session_id}/ask")
    def ask(
        session_id: str,
        request: AskRequest,
        evidences: int = Query(default=DEFAULT_EVIDENCE_PAGE, ge=1),
    ):
        session = _get_session(session_id)
        override = (
            _parse_override(request.sr_override) if request.sr_override is not None else None
        )
        with session.lock:
            if request.turn is not None:
                # steering: re-run retrieval + answering for a stored turn
                if not 0 <= request.turn < len(session.turns):
                    raise HTTPException(
                        status_code=404, detail=f"session has no turn {request.turn}"
                    )
                if override is None:
                    raise HTTPException(
                        status_code=400, detail="re-running a turn requires sr_override"
                    )
                stored = session.turns[request.turn]
                history = session.history_before(request.turn)
                result = pipeline.ask(history, stored.question, sr_override=override)
                result.turn = request.turn
                session.turns[request.turn] = SessionTurn(stored.question, result)
                _persist(session)
                return session.turns[request.turn].payload(evidences, history, corpus)

            if not request.question:
                raise HTTPException(status_code=400, detail="question is required")
            history = session.history_before(len(session.turns))
            result = pipeline.ask(history, request.question, sr_override=override)
            result.turn = len(session.turns)
            session.turns.append(SessionTurn(request.question, result))
            _persist(session)
            return session.turns[-1].payload(evidences, history, corpus)

    @app.get("/sessions/{session_id}")
    def replay(
        session_id: str,
        evidences: int = Query(default=DEFAULT_EVIDENCE_PAGE, ge=1),
    ):
        session = _get_session(session_id)
        with session.lock:
            return {
                "session_id": session.session_id,
                "turns": [
                    turn.payload(evidences, session.history_before(i), corpus)
                    for i, turn in enumerate(session.turns)
                ],
            }

    @app.delete("/sessions/{session_id}")
    def delete(session_id: str):
        with registry_lock:
            if session_id not in sessions:
                raise HTTPException(status_code=404, detail=f"unknown session {session_id!r}")
            del sessions[session_id]
        if persist_dir is not None:
            stored = Path(persist_dir) / f"{session_id}.json"
            stored.unlink(missing_ok=True)
        return {"deleted": session_id}

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/ui", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
