"""HTTP service wrapping the generator, grader and estimator.

Run with `enigme serve` or `uvicorn enigme.service:app`.  Responses carry
the same field names and values as the CLI's JSONL records.
"""

from __future__ import annotations

import secrets
from typing import Literal

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .estimate import estimate_table, estimate_variations
from .generate import generate_batch
from .grader import grade
from .model import Category, Dimension, GenerationError

_MASK64 = (1 << 64) - 1

CategoryName = Literal["numeric", "sequence", "physics"]
GradeModeName = Literal["exact", "normalized"]


class PuzzleModel(BaseModel):
    id: str
    category: CategoryName
    dimension: int
    seed: int
    prompt: str
    solution: str | None = None
    meta: dict[str, str]


class GenerateRequest(BaseModel):
    category: CategoryName
    dimension: int = Field(ge=1, le=3)
    seed: int | None = None
    count: int = Field(default=1, ge=1, le=1000)
    with_solution: bool = True


class GenerateResponse(BaseModel):
    base_seed: int
    puzzles: list[PuzzleModel]


class GradeRequest(BaseModel):
    solution: str
    candidate: str
    mode: GradeModeName = "normalized"


class GradeResponse(BaseModel):
    score: int
    mode: GradeModeName
    detail: str | None = None


class EstimateModel(BaseModel):
    category: CategoryName
    dimension: int
    cardinality: str  # decimal string: cardinalities overflow JSON numbers


class EstimateResponse(BaseModel):
    estimates: list[EstimateModel]


class HealthResponse(BaseModel):
    status: str
    version: str


app = FastAPI(
    title="enigme",
    description="Deterministic text reasoning puzzles: generate, grade, estimate.",
    version=__version__,
)


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/puzzles", response_model=GenerateResponse, response_model_exclude_none=True)
def make_puzzles(request: GenerateRequest) -> GenerateResponse:
    base_seed = request.seed if request.seed is not None else secrets.randbits(64)
    base_seed &= _MASK64
    try:
        puzzles = generate_batch(request.category, request.dimension,
                                 base_seed, request.count)
    except GenerationError as exc:
        raise HTTPException(status_code=500, detail=str(exc)) from exc
    return GenerateResponse(
        base_seed=base_seed,
        puzzles=[
            PuzzleModel(
                id=p.id,
                category=p.category.value,
                dimension=int(p.dimension),
                seed=p.seed,
                prompt=p.prompt,
                solution=p.solution if request.with_solution else None,
                meta=p.meta,
            )
            for p in puzzles
        ],
    )


@app.post("/grade", response_model=GradeResponse)
def grade_answer(request: GradeRequest) -> GradeResponse:
    result = grade(request.solution, request.candidate, request.mode)
    return GradeResponse(score=result.score, mode=result.mode, detail=result.detail)


@app.get("/estimates", response_model=EstimateResponse)
def estimates(category: CategoryName | None = None,
              dimension: int | None = None) -> EstimateResponse:
    if dimension is not None and dimension not in (1, 2, 3):
        raise HTTPException(status_code=422, detail="dimension must be 1, 2 or 3")
    if category is None and dimension is None:
        rows = estimate_table()
    elif category is not None and dimension is None:
        rows = estimate_table(categories=[Category.parse(category)])
    elif category is None:
        rows = estimate_table(dimensions=[Dimension(dimension)])
    else:
        rows = [estimate_variations(Category.parse(category), Dimension(dimension))]
    return EstimateResponse(
        estimates=[
            EstimateModel(
                category=row.category.value,
                dimension=int(row.dimension),
                cardinality=str(row.cardinality),
            )
            for row in rows
        ]
    )
