"""HTTP service: routes, payload shape, error codes, determinism."""

import io

import pytest
from fastapi.testclient import TestClient
from helpers import (
    poorly_fitted_race,
    rr_with_breathing,
    steady_fixture,
    well_fitted_race,
)
from helpers import roundtrip as decode_fixture

from hrefit.cli import run
from hrefit.fitcodec import encode_fixture
from hrefit.server import build_app


@pytest.fixture(scope="module")
def activities():
    # 105 bpm at 2.5 m/s: pace 400/60 min/km, HRE exactly 700 even after
    # wire quantization (2.5 m/s and cm distances are exact on the wire)
    flat = decode_fixture(
        steady_fixture(
            n=1500,
            hr=105,
            speed=2.5,
            rr_intervals=rr_with_breathing(0.25, duration_s=600.0),
        )
    )
    wall = decode_fixture(poorly_fitted_race())
    return [flat, wall]


@pytest.fixture(scope="module")
def client(activities):
    return TestClient(build_app(activities))


def test_list_activities(client, activities):
    r = client.get("/api/activities")
    assert r.status_code == 200
    rows = r.json()
    assert len(rows) == 2
    by_id = {row["id"]: row for row in rows}
    flat = by_id[activities[0].id]
    assert flat["sport"] == "running"
    assert flat["hre"] == pytest.approx(700.0, abs=0.5)
    assert flat["band"] == "well_fitted"
    wall = by_id[activities[1].id]
    assert wall["band"] == "poorly_fitted"
    assert [row["start_time"] for row in rows] == sorted(
        row["start_time"] for row in rows
    )


def test_bundle_constant_run_is_flat_700(client, activities):
    r = client.get(f"/api/activities/{activities[0].id}")
    assert r.status_code == 200
    bundle = r.json()
    hre = [v for v in bundle["samples"]["hre"] if v is not None]
    assert hre
    assert all(v == pytest.approx(700.0, abs=1e-6) for v in hre)
    assert bundle["summary"]["hre"] == pytest.approx(700.0, abs=1e-6)
    assert bundle["fitness"]["band"] == "well_fitted"
    assert bundle["drift"]["stable"] is True
    assert bundle["has_rr"] is True


def test_bundle_arrays_are_parallel_and_consistent(client, activities):
    bundle = client.get(f"/api/activities/{activities[1].id}").json()
    samples = bundle["samples"]
    n = len(samples["t"])
    assert n > 0
    for key in ("distance", "lat", "lon", "altitude", "hr", "pace", "hre", "grade"):
        assert len(samples[key]) == n
    for hr, pace, hre in zip(samples["hr"], samples["pace"], samples["hre"]):
        if hr is None or pace is None:
            assert hre is None


def test_bundle_window_parameter_changes_smoothing(client, activities):
    wall_id = activities[1].id
    narrow = client.get(f"/api/activities/{wall_id}", params={"window": "5"}).json()
    wide = client.get(f"/api/activities/{wall_id}", params={"window": "600"}).json()
    assert narrow["samples"]["hre"] != wide["samples"]["hre"]


def test_unknown_activity_404(client):
    assert client.get("/api/activities/deadbeef").status_code == 404


def test_malformed_window_400(client, activities):
    a = activities[0].id
    assert client.get(f"/api/activities/{a}", params={"window": "bogus"}).status_code == 400
    assert client.get(f"/api/activities/{a}", params={"window": "-3"}).status_code == 400
    assert client.get(f"/api/activities/{a}", params={"window": "0"}).status_code == 400


def test_rollup_endpoint(client):
    r = client.get("/api/rollup")
    assert r.status_code == 200
    rows = r.json()
    assert rows and rows[0]["session_count"] >= 1
    yearly = client.get("/api/rollup", params={"granularity": "yearly"}).json()
    assert all(len(row["period"]) == 4 for row in yearly)
    assert all(row["avg_monthly_distance_km"] is not None for row in yearly)


def test_rollup_bad_granularity_400(client):
    assert client.get("/api/rollup", params={"granularity": "weekly"}).status_code == 400


def test_breathing_endpoint(client, activities):
    r = client.get(f"/api/activities/{activities[0].id}/breathing")
    assert r.status_code == 200
    payload = r.json()
    assert payload["unit"] == "breaths/min"
    assert len(payload["t"]) == len(payload["v"]) > 0
    assert all(v == pytest.approx(15.0, abs=0.5) for v in payload["v"])


def test_breathing_404_without_rr(client, activities):
    assert (
        client.get(f"/api/activities/{activities[1].id}/breathing").status_code == 404
    )


def test_identical_requests_are_byte_identical(client, activities):
    url = f"/api/activities/{activities[1].id}"
    assert client.get(url).content == client.get(url).content
    assert client.get("/api/rollup").content == client.get("/api/rollup").content


def test_bundle_matches_cli_series(tmp_path, activities):
    # the same numbers must come out of the HTTP bundle and the series
    # command for the same file and window
    fixture = well_fitted_race()
    path = tmp_path / "race.fit"
    path.write_bytes(encode_fixture(fixture))
    activity = decode_fixture(fixture)

    out = io.StringIO()
    assert run(["series", str(path), "--output", "csv"], stdout=out, stderr=io.StringIO()) == 0
    cli_rows = out.getvalue().splitlines()[1:]

    bundle = TestClient(build_app([activity])).get(f"/api/activities/{activity.id}").json()
    hre = bundle["samples"]["hre"]
    assert len(cli_rows) == len(hre)
    for line, bundle_hre in zip(cli_rows, hre):
        cell = line.split(",")[3]
        if bundle_hre is None:
            assert cell == ""
        else:
            assert float(cell) == pytest.approx(bundle_hre, abs=5e-5)


def test_root_serves_viewer_or_placeholder(client):
    r = client.get("/")
    assert r.status_code == 200
    content_type = r.headers["content-type"]
    if content_type.startswith("text/plain"):
        assert "hrefit" in r.text
    else:
        assert content_type.startswith("text/html")
