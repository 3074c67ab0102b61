"""HTTP service exposing realization and drill sessions to the web UI.

Sessions live in memory with a TTL; the expected answer stays server-side
until the first check. The engine is sealed at startup and shared read-only
across requests.
"""

import random
import secrets
import threading
import time
from dataclasses import dataclass, field
from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .drill import check_answer, load_patterns, make_exercise
from .engine import Engine
from .errors import ParseError, SchemaError
from .interchange import parse_tree

DEFAULT_TTL = 30 * 60.0
DIRECTIONS = ("fr-en", "en-fr")


class RealizeRequest(BaseModel):
    tree: dict


class DrillNewRequest(BaseModel):
    direction: str
    level: int = 0
    seed: Optional[int] = None
    distractors: int = 3


class DrillCheckRequest(BaseModel):
    session_id: str
    answer: str


@dataclass
class Session:
    exercise: object
    created: float
    last_used: float
    attempts: int = 0
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    def __init__(self, ttl=DEFAULT_TTL, clock=time.monotonic):
        self.ttl = ttl
        self.clock = clock
        self._sessions = {}
        self._lock = threading.Lock()

    def create(self, exercise):
        sid = secrets.token_hex(16)
        now = self.clock()
        with self._lock:
            self._purge(now)
            self._sessions[sid] = Session(exercise, now, now)
        return sid

    def get(self, sid):
        now = self.clock()
        with self._lock:
            self._purge(now)
            session = self._sessions.get(sid)
            if session is not None:
                session.last_used = now
            return session

    def _purge(self, now):
        stale = [sid for sid, s in self._sessions.items() if now - s.last_used > self.ttl]
        for sid in stale:
            del self._sessions[sid]


def create_app(engine=None, patterns=None, ttl=DEFAULT_TTL, clock=time.monotonic):
    engine = engine or Engine.default()
    engine.seal()
    patterns = patterns if patterns is not None else load_patterns(engine)
    store = SessionStore(ttl=ttl, clock=clock)

    app = FastAPI(title="birealize drill service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.engine = engine
    app.state.store = store

    @app.post("/realize")
    def realize(req: RealizeRequest):
        try:
            tree = parse_tree(engine, req.tree)
        except (SchemaError, ParseError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        result = engine.realize(tree)
        return {
            "text": result.text,
            "warnings": [
                {"code": w.code, "language": w.language, "lemma": w.lemma,
                 "message": w.message}
                for w in result.warnings
            ],
        }

    @app.post("/drill/new")
    def drill_new(req: DrillNewRequest):
        if req.direction not in DIRECTIONS:
            raise HTTPException(status_code=400, detail=f"direction must be one of {DIRECTIONS}")
        if not 0 <= req.level <= 3:
            raise HTTPException(status_code=400, detail="level must be in 0..3")
        rng = random.Random(req.seed)
        eligible = [p for p in patterns if p.level <= req.level]
        pattern = eligible[rng.randrange(len(eligible))]
        exercise = make_exercise(engine, pattern, req.direction, rng,
                                 distractors=req.distractors, level_cap=req.level,
                                 seed=req.seed)
        sid = store.create(exercise)
        return {"session_id": sid, "source_text": exercise.source_text,
                "tokens": list(exercise.tokens)}

    @app.post("/drill/check")
    def drill_check(req: DrillCheckRequest):
        session = store.get(req.session_id)
        if session is None:
            raise HTTPException(status_code=404, detail="unknown or expired session")
        with session.lock:
            session.attempts += 1
            verdict = check_answer(session.exercise, req.answer)
            attempts = session.attempts
        return {"correct": verdict.correct, "expected": verdict.expected,
                "next_allowed": True, "attempts": attempts}

    @app.get("/health")
    def health():
        return {"status": "ok", "lexicon_counts": engine.lexicon_counts()}

    return app
