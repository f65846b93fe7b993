"""CLI exit codes, report rendering, and determinism, via subprocess."""

import json
import socket
import subprocess
import sys
import time

import httpx
import pytest

from rwl.cli import EXIT_DISAGREEMENT, EXIT_FAIL, _exit_code_for_reports, main
from rwl.service.schemas import Report


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "rwl.cli", *args],
        capture_output=True,
        text=True,
        timeout=300,
    )
    return proc


def json_lines(stdout):
    return [json.loads(line) for line in stdout.splitlines() if line.strip()]


def test_count_family_all():
    proc = run_cli("count", "--family", "path", "--n", "7", "--method", "all")
    assert proc.returncode == 0, proc.stderr
    reports = json_lines(proc.stdout)
    assert {r["method"] for r in reports} == {"dp", "walk", "formula"}
    assert all(r["value"] == "64" for r in reports)


def test_count_king_board():
    proc = run_cli("count", "--family", "king", "--m", "2", "--n", "3", "--method", "all")
    assert proc.returncode == 0
    assert all(r["value"] == "480" for r in json_lines(proc.stdout))


def test_count_graph_file_disconnected(tmp_path):
    path = tmp_path / "two_components.txt"
    path.write_text("4 2\n0 1\n2 3\n")
    proc = run_cli("count", "--graph", str(path))
    assert proc.returncode == 0
    reports = json_lines(proc.stdout)
    assert all(r["value"] == "0" for r in reports)
    assert all(r["status"] == "disconnected" for r in reports)


def test_count_usage_errors():
    assert run_cli("count").returncode == 2
    assert run_cli("count", "--family", "path").returncode == 2  # missing --n
    proc = run_cli("count", "--family", "path", "--n", "3", "--graph", "x.txt")
    assert proc.returncode == 2


def test_count_parse_error_exit_code(tmp_path):
    path = tmp_path / "loop.txt"
    path.write_text("2 1\n0 0\n")
    proc = run_cli("count", "--graph", str(path))
    assert proc.returncode == 2
    assert "line 2" in proc.stderr


def test_count_size_limit_exit_codes():
    proc = run_cli("count", "--family", "complete", "--n", "70", "--method", "dp")
    assert proc.returncode == 4
    proc = run_cli("count", "--family", "path", "--n", "11", "--method", "walk")
    assert proc.returncode == 4


def test_family_table_csv():
    proc = run_cli("family-table", "--family", "cycle", "--n-max", "5", "--format", "csv")
    assert proc.returncode == 0
    lines = proc.stdout.strip().splitlines()
    assert lines[0] == "family,n,value"
    assert lines[1:] == ["cycle,3,6", "cycle,4,16", "cycle,5,40"]


def test_family_table_text_and_json():
    proc = run_cli("family-table", "--family", "grid2", "--n-max", "3")
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1].split() == ["grid2", "3", "208"]
    proc = run_cli("family-table", "--family", "king2", "--n-max", "2", "--format", "json")
    assert [r["value"] for r in json_lines(proc.stdout)] == ["2", "24"]


def test_verify_pass():
    proc = run_cli("verify", "--claim", "eq003", "--n-max", "30")
    assert proc.returncode == 0
    report = json_lines(proc.stdout)[0]
    assert report["status"] == "pass"


def test_verify_oracle_equivalence():
    proc = run_cli("verify", "--claim", "oracle-equivalence", "--n-max", "5")
    assert proc.returncode == 0


def test_verify_unknown_claim():
    assert run_cli("verify", "--claim", "eq999").returncode == 2


def test_verify_bad_points():
    proc = run_cli("verify", "--claim", "asymptotic", "--points", "50,10")
    assert proc.returncode == 2


def test_series_values():
    proc = run_cli("series", "--egf", "a182525", "--terms", "2")
    report = json_lines(proc.stdout)[0]
    assert report["params"]["terms"] == {"0": "1", "1": "2", "2": "10"}
    proc = run_cli("series", "--egf", "a087547", "--terms", "1")
    assert json_lines(proc.stdout)[0]["params"]["terms"] == {"1": "1"}


def test_info():
    proc = run_cli("info")
    data = json.loads(proc.stdout)
    assert data["name"] == "random-walk-labelings"
    assert "oracle-equivalence" in data["claims"]


def test_unknown_subcommand_and_flags():
    assert run_cli("frobnicate").returncode == 2
    assert run_cli("count", "--family", "nope", "--n", "3").returncode == 2


def test_byte_identical_apart_from_elapsed():
    args = ("count", "--family", "cycle", "--n", "9", "--method", "all")
    first, second = run_cli(*args), run_cli(*args)

    def normalize(stdout):
        rows = json_lines(stdout)
        for row in rows:
            row["elapsed_ms"] = 0.0
        return json.dumps(rows, sort_keys=True)

    assert normalize(first.stdout) == normalize(second.stdout)


def test_exit_code_mapping_for_statuses():
    # statuses that cannot be produced by a correct build still need their
    # contractual exit codes; exercise the mapping directly
    fail = Report(input="claim:x", method="verify", status="fail")
    disagree = Report(input="family:p", method="dp", value="1", status="disagreement")
    ok = Report(input="family:p", method="dp", value="1", status="ok")
    assert _exit_code_for_reports([ok, fail]) == EXIT_FAIL
    assert _exit_code_for_reports([ok, disagree, fail]) == EXIT_DISAGREEMENT
    assert _exit_code_for_reports([ok]) == 0


def test_main_in_process():
    assert main(["count", "--family", "path", "--n", "3", "--method", "formula"]) == 0
    assert main(["verify", "--claim", "eq771", "--n-max", "20"]) == 0


@pytest.fixture(scope="module")
def live_server():
    with socket.socket() as probe:
        probe.bind(("127.0.0.1", 0))
        port = probe.getsockname()[1]
    proc = subprocess.Popen(
        [sys.executable, "-m", "rwl.cli", "serve", "--port", str(port)],
        stdout=subprocess.DEVNULL,
        stderr=subprocess.DEVNULL,
    )
    url = f"http://127.0.0.1:{port}"
    try:
        deadline = time.monotonic() + 30
        while True:
            try:
                httpx.get(url + "/info", timeout=2)
                break
            except httpx.HTTPError:
                if time.monotonic() > deadline:
                    pytest.skip("service did not come up")
                time.sleep(0.2)
        yield url
    finally:
        proc.terminate()
        proc.wait(timeout=15)


def test_remote_count_matches_local(live_server):
    local = run_cli("count", "--family", "grid", "--m", "2", "--n", "4", "--method", "dp")
    remote = run_cli("--server", live_server, "count", "--family", "grid", "--m", "2",
                     "--n", "4", "--method", "dp")
    assert remote.returncode == 0
    assert json_lines(remote.stdout)[0]["value"] == json_lines(local.stdout)[0]["value"] == "3584"


def test_remote_error_mapping(live_server):
    proc = run_cli("--server", live_server, "verify", "--claim", "eq999")
    assert proc.returncode == 2
    proc = run_cli("--server", live_server, "count", "--family", "complete",
                   "--n", "70", "--method", "dp")
    assert proc.returncode == 4


def test_remote_info(live_server):
    proc = run_cli("--server", live_server, "info")
    assert json.loads(proc.stdout)["name"] == "random-walk-labelings"
