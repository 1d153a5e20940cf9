import pytest
from fastapi.testclient import TestClient

from edstrings.service import create_app

T1_TEXT = "{AC,A,TGCT}{,CA}"
T2_TEXT = "{T,}{GCA,AC}"


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_root(client):
    response = client.get("/")
    assert response.status_code == 200
    assert response.json()["status"] == "ok"


def test_intersect_decide(client):
    response = client.post("/intersect", json={"t1": T1_TEXT, "t2": T2_TEXT})
    assert response.status_code == 200
    assert response.json() == {"answer": True}


def test_intersect_modes(client):
    response = client.post("/intersect", json={
        "t1": T1_TEXT, "t2": T2_TEXT, "mode": "shortest"})
    assert response.json() == {"answer": True, "witness": "AC", "length": 2}
    response = client.post("/intersect", json={
        "t1": T1_TEXT, "t2": T2_TEXT, "mode": "count"})
    assert response.json() == {"answer": True, "count": 1}
    response = client.post("/intersect", json={
        "t1": "{A}", "t2": "{B}", "mode": "witness"})
    assert response.json() == {"answer": False}


def test_parse_error_is_400(client):
    response = client.post("/intersect", json={"t1": "{A", "t2": "A"})
    assert response.status_code == 400
    assert "t1" in response.json()["detail"]


def test_matching_statistics(client):
    response = client.post("/matching-statistics",
                           json={"t1": T1_TEXT, "t2": T2_TEXT})
    assert response.json() == {"ms": [3, 2]}


def test_common_strings(client):
    response = client.post("/longest-common-substring",
                           json={"t1": "{xABCx}", "t2": "{yABCy}"})
    assert response.json() == {"length": 3, "witness": "ABC"}
    response = client.post("/longest-common-subsequence",
                           json={"t1": "{AB}", "t2": "{BA}"})
    assert response.json()["length"] == 1


def test_edsm(client):
    response = client.post("/edsm", json={
        "pattern": "{CA}", "text": T1_TEXT, "mode": "report"})
    body = response.json()
    assert body["found"] is True
    assert 2 in body["end_segments"]


def test_approx_endpoints(client):
    response = client.post("/approx/intersect", json={
        "t1": "{ab}", "t2": "{ac}", "metric": "hamming"})
    body = response.json()
    assert body["finite"] is True and body["distance"] == 1
    response = client.post("/approx/intersect", json={
        "t1": "{aaa}", "t2": "{bbb}", "metric": "edit", "k": 2})
    assert response.json() == {"finite": False}
    response = client.post("/approx/edsm", json={
        "pattern": "{ax}", "text": "{ay}", "metric": "edit"})
    body = response.json()
    assert body["distance"] == 1 and body["end_segments"] == [1]


def test_unary_endpoint(client):
    response = client.post("/unary", json={"t1": "1,2\n0,3", "t2": "4"})
    assert response.json() == {"nonempty": True, "lengths": [4]}


def test_acronym_endpoint(client):
    response = client.post("/acronym", json={
        "dictionary": ["faq", "fq", "xyz"],
        "words": ["frequently", "asked", "questions"]})
    assert response.json() == {"answer": True, "acronyms": ["faq", "fq"]}


def test_generate_endpoints(client):
    first = client.post("/generate/random", json={"seed": 11}).json()
    second = client.post("/generate/random", json={"seed": 11}).json()
    assert first == second
    response = client.post("/generate/ov", json={"vectors": ["10", "01", "11"]})
    body = response.json()
    assert body["t1"] == "0{0,1}{0,1}{0}{0}{0}"
    assert body["t2"] == "{00,}{0000,}{10,01,11}{00,}{0000,}"
