"""HTTP facade over the engine, versioned under /v1.

Projects live in an in-memory store with optional write-through to
project files on disk.  Writes are serialized per store and guarded by
an optimistic revision counter: a write carrying an expected revision
that no longer matches is rejected with 409.  Compute endpoints work on
a snapshot, so a long sensitivity run never blocks edits.

Engine errors surface as a stable JSON shape:
    {"code": "...", "message": "...", "locus": "..." | null}
"""

from __future__ import annotations

import os
import re
import threading

from fastapi import FastAPI, Header, Request
from fastapi.responses import JSONResponse

from . import pipeline, project, sensitivity
from .errors import FuzzyHoqError, ValidationError

__all__ = ["create_app", "ProjectStore"]

_ID_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9_.-]*$")

CODE_UNKNOWN_PROJECT = "unknown-project"
CODE_REVISION_CONFLICT = "revision-conflict"
CODE_BAD_PROJECT_ID = "bad-project-id"
CODE_BAD_REQUEST = "bad-request"


class _ApiProblem(Exception):
    def __init__(self, status: int, code: str, message: str, locus: str | None = None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.locus = locus

    def response(self) -> JSONResponse:
        return JSONResponse(
            status_code=self.status,
            content={"code": self.code, "message": str(self), "locus": self.locus},
        )


class ProjectStore:
    """Revision-counted project documents with write-through persistence."""

    def __init__(self, data_dir: str | None = None):
        self._lock = threading.RLock()
        self._projects: dict[str, tuple[project.HoqProject, int]] = {}
        self._data_dir = data_dir
        if data_dir:
            os.makedirs(data_dir, exist_ok=True)
            for name in sorted(os.listdir(data_dir)):
                if name.endswith(".json"):
                    pid = name[: -len(".json")]
                    if _ID_RE.match(pid):
                        self._projects[pid] = (project.load(os.path.join(data_dir, name)), 0)

    def _persist(self, pid: str, doc_project: project.HoqProject) -> None:
        if self._data_dir:
            project.save(doc_project, os.path.join(self._data_dir, f"{pid}.json"))

    def snapshot(self, pid: str) -> tuple[project.HoqProject, int]:
        with self._lock:
            if pid not in self._projects:
                raise _ApiProblem(404, CODE_UNKNOWN_PROJECT, f"no project {pid!r}")
            stored, revision = self._projects[pid]
            return stored.clone(), revision

    def put(self, pid: str, new: project.HoqProject, expected: int | None) -> int:
        with self._lock:
            current = self._projects.get(pid)
            if expected is not None and (current[1] if current else 0) != expected:
                raise _ApiProblem(
                    409,
                    CODE_REVISION_CONFLICT,
                    f"expected revision {expected}, store has {current[1] if current else 0}",
                )
            revision = (current[1] + 1) if current else 1
            self._projects[pid] = (new, revision)
            self._persist(pid, new)
            return revision

    def mutate(self, pid: str, fn, expected: int | None) -> tuple[project.HoqProject, int]:
        with self._lock:
            if pid not in self._projects:
                raise _ApiProblem(404, CODE_UNKNOWN_PROJECT, f"no project {pid!r}")
            stored, revision = self._projects[pid]
            if expected is not None and revision != expected:
                raise _ApiProblem(
                    409, CODE_REVISION_CONFLICT, f"expected revision {expected}, store has {revision}"
                )
            fn(stored)
            revision += 1
            self._projects[pid] = (stored, revision)
            self._persist(pid, stored)
            return stored.clone(), revision


def _check_pid(pid: str) -> str:
    if not _ID_RE.match(pid):
        raise _ApiProblem(400, CODE_BAD_PROJECT_ID, f"invalid project id {pid!r}")
    return pid


def _field(body: dict, name: str, kind, required: bool = True):
    if name not in body:
        if required:
            raise _ApiProblem(400, CODE_BAD_REQUEST, f"missing field {name!r}")
        return None
    value = body[name]
    if kind is float and isinstance(value, int) and not isinstance(value, bool):
        value = float(value)
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise _ApiProblem(400, CODE_BAD_REQUEST, f"field {name!r} must be {kind.__name__}")
    return value


async def _json_body(request: Request) -> dict:
    try:
        body = await request.json()
    except Exception:
        raise _ApiProblem(400, CODE_BAD_REQUEST, "body must be JSON")
    if not isinstance(body, dict):
        raise _ApiProblem(400, CODE_BAD_REQUEST, "body must be a JSON object")
    return body


def create_app(data_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="fuzzyhoq", version="1")
    store = ProjectStore(data_dir)
    app.state.store = store

    @app.exception_handler(_ApiProblem)
    async def _problem_handler(_request, exc: _ApiProblem):
        return exc.response()

    @app.exception_handler(FuzzyHoqError)
    async def _engine_handler(_request, exc: FuzzyHoqError):
        body = {"code": exc.code, "message": str(exc), "locus": exc.locus}
        if isinstance(exc, ValidationError):
            body["problems"] = exc.problems
        return JSONResponse(status_code=400, content=body)

    @app.put("/v1/projects/{pid}")
    async def put_project(
        pid: str, request: Request, x_expected_revision: int | None = Header(default=None)
    ):
        _check_pid(pid)
        doc = await _json_body(request)
        parsed = project.from_document(doc)
        revision = store.put(pid, parsed, x_expected_revision)
        return {"id": pid, "revision": revision}

    @app.get("/v1/projects/{pid}")
    async def get_project(pid: str):
        _check_pid(pid)
        snapshot, revision = store.snapshot(pid)
        return {"id": pid, "revision": revision, "project": project.to_document(snapshot)}

    @app.patch("/v1/projects/{pid}/judgments")
    async def patch_judgment(pid: str, request: Request):
        _check_pid(pid)
        body = await _json_body(request)
        respondent = _field(body, "respondent", str)
        slot = _field(body, "matrix", str)
        i = _field(body, "i", int)
        j = _field(body, "j", int)
        value = _field(body, "value", float)
        expected = _field(body, "revision", int, required=False)

        def edit(p: project.HoqProject):
            p.set_judgment(slot, respondent, i, j, value)

        snapshot, revision = store.mutate(pid, edit, expected)
        matrix = snapshot.judgment_table(slot)[respondent]
        return {
            "id": pid,
            "revision": revision,
            "matrix": [[float(x) for x in row] for row in matrix],
        }

    @app.patch("/v1/projects/{pid}/cells")
    async def patch_cell(pid: str, request: Request):
        _check_pid(pid)
        body = await _json_body(request)
        grid = _field(body, "grid", str)
        row = _field(body, "row", int)
        col = _field(body, "col", int)
        token = _field(body, "token", str)
        expected = _field(body, "revision", int, required=False)
        if grid not in ("relationships", "roof"):
            raise _ApiProblem(400, CODE_BAD_REQUEST, "field 'grid' must be 'relationships' or 'roof'")

        def edit(p: project.HoqProject):
            if grid == "relationships":
                p.set_relationship(row, col, token)
            else:
                p.set_roof(row, col, token)

        snapshot, revision = store.mutate(pid, edit, expected)
        stored_token = (
            snapshot.relationships[row][col] if grid == "relationships" else snapshot.roof_token(row, col)
        )
        return {"id": pid, "revision": revision, "grid": grid, "row": row, "col": col, "token": stored_token}

    @app.post("/v1/projects/{pid}/compute/ahp")
    async def compute_ahp(pid: str, request: Request):
        _check_pid(pid)
        body = await _json_body(request) if await request.body() else {}
        respondent = _field(body, "respondent", str, required=False)
        method = _field(body, "method", str, required=False) or "eigenvector"
        snapshot, revision = store.snapshot(pid)
        result = pipeline.compute_ahp(snapshot, respondent, method, allow_inconsistent=True)
        return {"id": pid, "revision": revision, **result.to_dict()}

    @app.post("/v1/projects/{pid}/compute/rank")
    async def compute_rank(pid: str, request: Request):
        _check_pid(pid)
        body = await _json_body(request) if await request.body() else {}
        allow = bool(body.get("allow_inconsistent", False))
        method = _field(body, "method", str, required=False) or "eigenvector"
        snapshot, revision = store.snapshot(pid)
        report = pipeline.compute_rank(snapshot, method=method, allow_inconsistent=allow)
        return {"id": pid, "revision": revision, **report.to_dict()}

    @app.post("/v1/projects/{pid}/compute/sensitivity")
    async def compute_sensitivity(pid: str, request: Request):
        _check_pid(pid)
        body = await _json_body(request)
        spec = sensitivity.PerturbationSpec(
            trials=_field(body, "trials", int),
            seed=_field(body, "seed", int),
            judgment_step_prob=_field(body, "judgment_step_prob", float, required=False) or 0.0,
            cell_flip_prob=_field(body, "cell_flip_prob", float, required=False) or 0.0,
            perturb_roof=bool(body.get("perturb_roof", False)),
        )
        snapshot, revision = store.snapshot(pid)
        report = sensitivity.run_sensitivity(snapshot, spec)
        return {"id": pid, "revision": revision, **report.to_dict()}

    return app
