import json
import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore", DeprecationWarning)
    from fastapi.testclient import TestClient

from enigme.cli import puzzle_to_json
from enigme.generate import generate_puzzle
from enigme.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    body = client.get("/health").json()
    assert body["status"] == "ok"


def test_generate_matches_library(client):
    response = client.post(
        "/puzzles",
        json={"category": "sequence", "dimension": 2, "seed": 11, "count": 2},
    )
    assert response.status_code == 200
    payload = response.json()
    assert payload["base_seed"] == 11
    for i, record in enumerate(payload["puzzles"]):
        puzzle = generate_puzzle("sequence", 2, 11 + i)
        assert record["id"] == puzzle.id
        assert record["seed"] == puzzle.seed
        assert record["prompt"] == puzzle.prompt
        assert record["solution"] == puzzle.solution
        assert record["meta"] == puzzle.meta


def test_generate_matches_cli_jsonl(client):
    response = client.post(
        "/puzzles",
        json={"category": "physics", "dimension": 1, "seed": 1, "count": 1},
    )
    record = response.json()["puzzles"][0]
    cli_record = json.loads(puzzle_to_json(generate_puzzle("physics", 1, 1), True))
    assert record == cli_record


def test_generate_without_solution(client):
    response = client.post(
        "/puzzles",
        json={"category": "numeric", "dimension": 1, "seed": 5, "with_solution": False},
    )
    record = response.json()["puzzles"][0]
    assert "solution" not in record


def test_generate_draws_seed_when_absent(client):
    response = client.post("/puzzles", json={"category": "numeric", "dimension": 1})
    payload = response.json()
    seed = payload["base_seed"]
    assert payload["puzzles"][0]["prompt"] == generate_puzzle("numeric", 1, seed).prompt


def test_generate_validation(client):
    assert client.post("/puzzles", json={"category": "numeric", "dimension": 4}).status_code == 422
    assert client.post("/puzzles", json={"category": "algebra", "dimension": 1}).status_code == 422
    assert client.post(
        "/puzzles", json={"category": "numeric", "dimension": 1, "count": 0}
    ).status_code == 422


def test_grade_endpoint(client):
    body = client.post(
        "/grade", json={"solution": "6", "candidate": "The answer is 6."}
    ).json()
    assert body == {"score": 1, "mode": "normalized", "detail": None}
    body = client.post(
        "/grade", json={"solution": "6", "candidate": "16", "mode": "normalized"}
    ).json()
    assert body["score"] == 0


def test_estimates_endpoint(client):
    body = client.get("/estimates").json()
    assert len(body["estimates"]) == 9
    body = client.get("/estimates", params={"category": "numeric", "dimension": 1}).json()
    assert len(body["estimates"]) == 1
    assert int(body["estimates"][0]["cardinality"]) >= 10**5
    assert client.get("/estimates", params={"dimension": 9}).status_code == 422
