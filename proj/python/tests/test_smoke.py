import json
import os
import pathlib

import jsonschema
import pytest

import lnsolve

SCHEMA_PATH = pathlib.Path(
    os.environ.get("LNS_SCHEMA", pathlib.Path(__file__).resolve().parents[2] / "docs" / "report.schema.json")
)


@pytest.fixture(scope="module")
def schema():
    return json.loads(SCHEMA_PATH.read_text())


def test_solutions_n3():
    sols = lnsolve.solutions(1300, [3])
    assert len(sols) == 8
    assert (3, 5, 5, 36599, 1226) in sols
    for n, a, b, x, y in sols:
        assert x * x + 5**a * 11**b == y**n


def test_n6_single_solution():
    assert lnsolve.solutions(100, [6]) == [(6, 1, 1, 3, 2)]


def test_lucas_sequence():
    assert lnsolve.lucas_sequence(1, 1, 11, 8) == [0, 1, 1, -2, -5, 1, 16, 13]
    with pytest.raises(ValueError):
        lnsolve.lucas_sequence(1, 2, 11, 5)


def test_hensel_digits():
    assert lnsolve.hensel_digits(5) == [[2, 0, 4, 0, 4]]
    assert lnsolve.hensel_digits(11) == [[2, 5, 0, 3, 3]]


def test_reports_follow_schema(schema):
    reports = [
        lnsolve.search(200, [3, 6], jobs=2),
        lnsolve.descent3("i0"),
        lnsolve.descent3("i1", verify_point=True),
        lnsolve.lucas(11, 5),
        lnsolve.n4(),
        lnsolve.sieve(case=(6, 0, 2, 1), bounds=(25, 18, 33), jobs=2),
        lnsolve.verify_theorem([3], 200, jobs=2),
    ]
    for rep in reports:
        jsonschema.validate(rep, schema)
        assert rep["config"]["sha256"] == lnsolve.config_sha256()


def test_n4_and_lucas_pass():
    assert lnsolve.n4()["pass"]
    rep = lnsolve.lucas(55, 5)
    assert rep["pass"]


def test_full_pipeline(schema):
    rep = lnsolve.full(bounds=(25, 18, 33), skip_reduction=True, jobs=2)
    jsonschema.validate(rep, schema)
    assert rep["pass"]


def test_errors():
    with pytest.raises(ValueError):
        lnsolve.descent3("i7")
    with pytest.raises(ValueError):
        lnsolve.lucas(3, 5)
    with pytest.raises(ValueError):
        lnsolve.solutions(1, [3])
