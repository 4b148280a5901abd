"""End-to-end smoke tests for the python bindings."""

import json

import pytest

import burnside


@pytest.fixture(scope="module")
def s3():
    return burnside.Session("S3")


def test_version():
    assert burnside.__version__ == "0.1.0"


def test_group_basics(s3):
    assert s3.label == "S3"
    assert s3.order == 6
    assert s3.subgroup_count() == 6
    assert s3.class_count() == 4
    assert s3.class_labels() == ["1:1", "2:1", "3:1", "6:1"]


def test_table_of_marks(s3):
    assert s3.table_of_marks() == [
        [6, 3, 2, 1],
        [0, 1, 0, 1],
        [0, 0, 2, 1],
        [0, 0, 0, 1],
    ]


def test_residuals_and_perfect_classes(s3):
    assert s3.p_perfect_classes("3") == ["1:1", "2:1", "6:1"]
    assert s3.residuals("3") == {
        "1:1": "1:1",
        "2:1": "2:1",
        "3:1": "1:1",
        "6:1": "6:1",
    }


def test_idempotents(s3):
    assert s3.idempotent_marks("2:1", "3") == ["0", "1", "0", "0"]
    assert s3.idempotent_orbit("6:1", "3") == ["1/2", "-1", "-1/2", "1"]


def test_theorem_a(s3):
    assert s3.theorem_a_ok("3")
    assert s3.theorem_a_ok("none")
    assert s3.theorem_a_ok("all")


def test_json_reports(s3):
    doc = json.loads(s3.report_json("3"))
    assert doc["ok"] is True
    assert doc["group"]["order"] == 6
    assert doc["payload"]["splitting"]["total_ranks"] == [1, 2, 2, 4]

    norm = json.loads(s3.norm_json("(1,2)", "(1,2); (1,2,3)", "3"))
    assert norm["payload"]["consistent"] is True
    rows = {r["L"]: r["division"] for r in norm["payload"]["rows"]}
    assert rows["2:1"] is False
    assert rows["1:1"] is True

    assert "RESULT: ok" in s3.report_text("3")


def test_a4_splitting():
    s = burnside.Session("A4")
    doc = json.loads(s.splitting_json("2"))
    assert doc["ok"] is True
    labels = [f["L"] for f in doc["payload"]["factors"]]
    assert labels == ["1:1", "3:1", "12:1"]


def test_errors():
    with pytest.raises(RuntimeError):
        burnside.Session("NOPE")
    with pytest.raises(RuntimeError):
        burnside.Session("S8")  # exceeds the default order cap
    s = burnside.Session("S3")
    with pytest.raises(ValueError):
        s.idempotent_marks("9:9", "3")
