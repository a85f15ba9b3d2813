import json
import subprocess
import sys

import pytest

from anosovforms.serialize import (
    algebra_to_json,
    canonical_dumps,
    datum_to_json,
)


def run_cli(*args, check=True):
    proc = subprocess.run(
        [sys.executable, "-m", "anosovforms", *args],
        capture_output=True, text=True,
    )
    if check and proc.returncode != 0:
        raise AssertionError(
            f"cli failed ({proc.returncode}): {proc.stderr}\n{proc.stdout}"
        )
    return proc


@pytest.fixture(scope="module")
def workdir(tmp_path_factory):
    return tmp_path_factory.mktemp("cli")


@pytest.fixture(scope="module")
def z4_files(workdir):
    bundle_path = workdir / "z4_bundle.json"
    proc = run_cli("construct", "--recipe", "z4", "-o", str(bundle_path))
    summary = json.loads(proc.stdout)
    assert summary["signature"] == [2, 4]
    bundle = json.loads(bundle_path.read_text())
    alg = workdir / "z4_alg.json"
    mp = workdir / "z4_map.json"
    alg.write_text(canonical_dumps(bundle["algebra"]))
    mp.write_text(canonical_dumps({"matrix": bundle["matrix"]}))
    return bundle, alg, mp


class TestConstruct:
    def test_z4_gold_matrix(self, z4_files):
        bundle, _, _ = z4_files
        assert bundle["matrix"][0] == ["0", "0", "0", "-1", "0", "0"]
        assert bundle["matrix"][5] == ["0", "0", "0", "0", "-1/2", "-5/2"]

    def test_count(self, workdir):
        out = workdir / "count.json"
        proc = run_cli("construct", "--recipe", "count", "--k", "5", "--l", "2",
                       "-o", str(out))
        assert json.loads(proc.stdout)["signature"] == [2, 4]
        bundle = json.loads(out.read_text())
        assert bundle["provenance"]["classified"] == 5

    def test_count_bad_params_exit1(self):
        proc = run_cli("construct", "--recipe", "count", "--k", "4", "--l", "2",
                       check=False)
        assert proc.returncode == 1
        err = json.loads(proc.stderr)
        assert err["error"] == "BadParameters"

    def test_stdout_bundle_when_no_output(self):
        proc = run_cli("construct", "--recipe", "last", "--class", "2")
        bundle = json.loads(proc.stdout)
        assert bundle["certificate"]["type"] == [3, 3]


class TestCertify:
    def test_gold(self, z4_files):
        _, alg, mp = z4_files
        proc = run_cli("certify", "--algebra", str(alg), "--map", str(mp))
        cert = json.loads(proc.stdout)
        assert cert["signature"] == [2, 4]
        assert cert["integer_like"] and cert["hyperbolic"]

    def test_negative_verdict_is_exit_zero(self, workdir):
        from anosovforms.liealg import heisenberg

        alg = workdir / "heis.json"
        alg.write_text(canonical_dumps(algebra_to_json(heisenberg())))
        mp = workdir / "id3.json"
        mp.write_text(canonical_dumps(
            {"matrix": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]}
        ))
        proc = run_cli("certify", "--algebra", str(alg), "--map", str(mp))
        cert = json.loads(proc.stdout)
        assert cert["hyperbolic"] is False

    def test_malformed_json_exit2(self, workdir):
        bad = workdir / "bad.json"
        bad.write_text("not json")
        proc = run_cli("certify", "--algebra", str(bad), "--map", str(bad),
                       check=False)
        assert proc.returncode == 2


class TestDeterminism:
    def test_identical_bytes(self, z4_files):
        _, alg, mp = z4_files
        a = run_cli("certify", "--algebra", str(alg), "--map", str(mp)).stdout
        b = run_cli("certify", "--algebra", str(alg), "--map", str(mp)).stdout
        assert a == b

    def test_round_trip(self, z4_files, workdir):
        _, alg, mp = z4_files
        cert1 = run_cli("certify", "--algebra", str(alg), "--map", str(mp)).stdout
        # re-serialize the parsed algebra and certify again
        parsed = json.loads(alg.read_text())
        alg2 = workdir / "alg_rt.json"
        alg2.write_text(canonical_dumps(parsed))
        assert alg2.read_text() == alg.read_text()
        cert2 = run_cli("certify", "--algebra", str(alg2), "--map", str(mp)).stdout
        assert cert1 == cert2


class TestTools:
    def test_pell(self):
        proc = run_cli("pell", "--disc", "20")
        assert json.loads(proc.stdout) == {"x": 18, "y": 4}

    def test_pell_bad_disc(self):
        proc = run_cli("pell", "--disc", "4", check=False)
        assert proc.returncode == 1

    def test_classify42(self, z4_files):
        _, alg, _ = z4_files
        proc = run_cli("classify42", "--algebra", str(alg))
        assert json.loads(proc.stdout) == {"anosov_compatible": True, "k": 5}

    def test_pfaffian(self, z4_files):
        _, alg, _ = z4_files
        proc = run_cli("pfaffian", "--algebra", str(alg))
        out = json.loads(proc.stdout)
        assert out["discriminant"] == "5/4"

    def test_dualize(self, workdir):
        from anosovforms.pfaffian import hk_algebra, nk_algebra

        alg = workdir / "n5.json"
        alg.write_text(canonical_dumps(algebra_to_json(nk_algebra(5))))
        proc = run_cli("dualize", "--algebra", str(alg))
        dual = json.loads(proc.stdout)
        assert dual == json.loads(canonical_dumps(algebra_to_json(hk_algebra(5))))

    def test_verify_field(self, workdir, sqrt2):
        field = workdir / "sqrt2.json"
        field.write_text(canonical_dumps(datum_to_json(sqrt2)))
        proc = run_cli("verify-field", "--field", str(field))
        out = json.loads(proc.stdout)
        assert out["verified"] and out["degree"] == 2

    def test_verify_field_rejects(self, workdir, sqrt2):
        data = datum_to_json(sqrt2)
        data["automorphisms"][1] = ["1", "1"]
        field = workdir / "bad_field.json"
        field.write_text(canonical_dumps(data))
        proc = run_cli("verify-field", "--field", str(field), check=False)
        assert proc.returncode == 1

    def test_pisot_search(self, workdir, sqrt2):
        field = workdir / "sqrt2b.json"
        field.write_text(canonical_dumps(datum_to_json(sqrt2)))
        cons = workdir / "cone.json"
        cons.write_text(json.dumps([
            {"coeffs": [1, 0], "rel": ">1"}, {"coeffs": [0, 1], "rel": "<1"},
        ]))
        proc = run_cli("pisot", "--field", str(field), "--height", "2",
                       "--constraints", str(cons))
        found = json.loads(proc.stdout)
        assert {"coeffs": ["1", "1"], "min_poly": ["-1", "-2", "1"]}.items() <= \
            next(u for u in found if u["coeffs"] == ["1", "1"]).items()

    def test_pisot_height_zero(self, workdir, sqrt2):
        field = workdir / "sqrt2c.json"
        field.write_text(canonical_dumps(datum_to_json(sqrt2)))
        proc = run_cli("pisot", "--field", str(field), "--height", "0")
        assert json.loads(proc.stdout) == []
