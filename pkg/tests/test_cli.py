"""CLI integration: subcommands, exit codes, report determinism."""

import io
import json

from skeintails.cli import main
from skeintails.networks import theta_network
from skeintails.qcore import poch_inf


def run(argv):
    buf = io.StringIO()
    code = main(argv, out=buf)
    return code, buf.getvalue()


class TestSeries:
    def test_text(self):
        code, out = run(["series", "theta_f", "--k", "2", "--order", "14"])
        assert code == 0
        assert out.strip() == "1 - q - q^4 + q^7 + q^13"

    def test_json(self):
        code, out = run(["series", "poch_inf", "--c", "1", "--order", "6", "--format", "json"])
        assert code == 0
        obj = json.loads(out)
        assert obj == poch_inf(1, 6).to_json_obj()

    def test_csv(self):
        code, out = run(["series", "lambda", "--order", "4", "--format", "csv"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "exponent,numerator,denominator"
        assert len(lines) == 5

    def test_unknown_series_exit2(self):
        code, _ = run(["series", "nosuch", "--order", "5"])
        assert code == 2

    def test_bad_params_exit2(self):
        code, _ = run(["series", "theta_f", "--order", "5"])
        assert code == 2


class TestVerify:
    def test_builtin_pass(self, tmp_path):
        report = tmp_path / "report.json"
        code, out = run(
            ["verify", "builtin:andrews-gordon", "--out", str(report)]
        )
        assert code == 0
        assert "4/4 cases passed" in out
        obj = json.loads(report.read_text())
        assert obj["passed"] is True
        assert [c["id"] for c in obj["cases"]] == [f"ag-k{k}" for k in (2, 3, 4, 5)]

    def test_jobs_deterministic(self, tmp_path):
        r1, r2 = tmp_path / "r1.json", tmp_path / "r2.json"
        run(["verify", "builtin:jacobi", "--jobs", "1", "--out", str(r1)])
        run(["verify", "builtin:jacobi", "--jobs", "4", "--out", str(r2)])
        assert r1.read_text() == r2.read_text()

    def test_negative_control_names_exponent(self, tmp_path):
        suite = {
            "suite": "negative",
            "cases": [
                {
                    "id": "wrong",
                    "check": "series_equal",
                    "params": {
                        "a": {"series": "theta_f", "k": 2},
                        "b": {"series": "poch_inf", "c": 1},
                        "order": 12,
                    },
                }
            ],
        }
        path = tmp_path / "neg.json"
        path.write_text(json.dumps(suite))
        code, out = run(["verify", str(path)])
        assert code == 1
        # theta_f(2) and (q;q)_inf first differ at q^2
        assert "q^2" in out

    def test_missing_suite_exit2(self):
        code, _ = run(["verify", "builtin:nosuch"])
        assert code == 2
        code, _ = run(["verify", "/nonexistent/path.json"])
        assert code == 2

    def test_order_override(self, tmp_path):
        suite = {
            "suite": "s",
            "cases": [
                {
                    "id": "x",
                    "kind": "identity",
                    "check": "andrews_gordon",
                    "params": {"k": 2, "order": 50},
                }
            ],
        }
        path = tmp_path / "s.json"
        path.write_text(json.dumps(suite))
        code, out = run(["verify", str(path), "--order", "10"])
        assert code == 0 and "order 10" in out

    def test_slow_cases_excluded_by_default(self, tmp_path):
        report = tmp_path / "r.json"
        code, _ = run(["verify", "builtin:products", "--out", str(report)])
        assert code == 0
        obj = json.loads(report.read_text())
        assert all(c["status"] == "pass" for c in obj["cases"])


class TestJones:
    def test_trivial(self):
        code, out = run(["jones", "--f", "3", "--n", "0"])
        assert code == 0 and out.strip() == "1"

    def test_normalized_prefix(self):
        code, out = run(
            ["jones", "--f", "3", "--n", "4", "--normalized", "--order", "4"]
        )
        assert code == 0
        assert out.strip() == "1 - q - q^2"

    def test_exact_json(self):
        code, out = run(["jones", "--f", "2", "--n", "1", "--format", "json"])
        assert code == 0
        obj = json.loads(out)
        assert obj["variable"] == "v"

    def test_usage_error(self):
        code, _ = run(["jones", "--f", "0", "--n", "1"])
        assert code == 2


class TestOracle:
    def test_theta_file(self, tmp_path):
        path = tmp_path / "theta.net"
        path.write_text(theta_network(2, 2, 2).serialize())
        code, out = run(["oracle", str(path)])
        assert code == 0
        assert "/" in out  # theta(2,2,2) is a genuine rational function

    def test_loop_file(self, tmp_path):
        path = tmp_path / "loop.net"
        path.write_text("loops 1\n")
        code, out = run(["oracle", str(path)])
        assert code == 0
        assert out.strip() == "-v^2 - v^-2"

    def test_capacity_exit2(self, tmp_path):
        from skeintails.networks import torus_knot_network

        path = tmp_path / "big.net"
        path.write_text(torus_knot_network(5, 1).serialize())
        code, _ = run(["oracle", str(path), "--max-crossings", "3"])
        assert code == 2

    def test_parse_error_exit2(self, tmp_path):
        path = tmp_path / "bad.net"
        path.write_text("frob 1\n")
        code, _ = run(["oracle", str(path)])
        assert code == 2
