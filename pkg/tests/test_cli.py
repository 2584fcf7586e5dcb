import io
import json
import subprocess
import sys

import pytest

from lrpictures.cli import main
from lrpictures.verify import Check, VerificationReport, check_budgets, run_bijection, triples
from lrpictures.errors import BudgetExceeded


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def json_lines(text):
    return [json.loads(line) for line in text.splitlines()]


def test_coeff_all_agree():
    code, text = run("coeff", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1", "--method", "all", "--json")
    assert code == 0
    got = json.loads(text)
    assert got["coefficients"] == {"crystal": 2, "pictures": 2, "ballot": 2}
    assert got["agree"] is True


def test_coeff_table_output():
    code, text = run("coeff", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1")
    assert code == 0
    assert text.splitlines() == ["crystal   2", "pictures  2", "ballot    2", "agree     true"]


def test_coeff_empty_lambda():
    code, text = run("coeff", "--lambda", "", "--mu", "1", "--nu", "1", "--method", "ballot")
    assert code == 0 and text.split() == ["ballot", "1"]


def test_coeff_size_mismatch_is_zero():
    code, text = run("coeff", "--lambda", "1", "--mu", "1", "--nu", "3", "--method", "all", "--json")
    assert code == 0
    got = json.loads(text)
    assert set(got["coefficients"].values()) == {0} and got["agree"] is True


def test_bad_partition_names_flag(capsys):
    with pytest.raises(SystemExit) as info:
        main(["coeff", "--lambda", "1,2", "--mu", "1", "--nu", "2,1"])
    assert info.value.code == 2
    assert "--lambda" in capsys.readouterr().err


def test_enumerate_crystal():
    code, text = run("enumerate", "crystal", "--lambda", "1", "--mu", "1", "--nu", "2", "--order", "J")
    assert code == 0
    assert json_lines(text) == [[[1]], {"count": 1}]


def test_enumerate_pictures():
    code, text = run("enumerate", "pictures", "--lambda", "1", "--mu", "1", "--nu", "2")
    assert code == 0
    assert json_lines(text) == [{"mu": [1], "nu": [2], "lambda": [1], "map": [[[1, 1], [1, 2]]]},
                                {"count": 1}]


def test_enumerate_no_pictures():
    code, text = run("enumerate", "pictures", "--mu", "1,1", "--lambda", "", "--nu", "2")
    assert code == 0 and json_lines(text) == [{"count": 0}]


def test_enumerate_with_order_file(tmp_path):
    good = tmp_path / "good.ord"
    good.write_text("1,2\n2,2\n1,1\n2,1\n")
    code, text = run("enumerate", "crystal", "--lambda", "2", "--mu", "2,2", "--nu", "4,2",
                     "--order", f"@{good}")
    assert code == 0 and json_lines(text)[-1] == {"count": 1}


def test_enumerate_rejects_inadmissible_order_file(tmp_path, capsys):
    bad = tmp_path / "bad.ord"
    bad.write_text("1,1\n1,2\n")
    code, _ = run("enumerate", "crystal", "--lambda", "1", "--mu", "2", "--nu", "3", "--order", f"@{bad}")
    assert code == 2
    assert "(1, 2) must precede (1, 1)" in capsys.readouterr().err


def test_orders_listing():
    code, text = run("orders", "2,2")
    assert code == 0
    assert text.splitlines() == ["1,2 1,1 2,2 2,1", "1,2 2,2 1,1 2,1", "# count: 2"]
    code, text = run("orders", "3,2/1", "--json")
    assert json_lines(text) == [[[1, 3], [1, 2], [2, 2], [2, 1]], {"count": 1}]


def test_add_trace_json():
    code, text = run("add", "--start", "2,1", "--letters", "3,1,2,1,2", "--json")
    got = json.loads(text)
    assert [s["shape"] for s in got["steps"]] == [[2, 1, 1], [3, 1, 1], [3, 2, 1], [4, 2, 1], [4, 3, 1]]
    assert got["all_young"] is True


def test_verify_suites_pass():
    code, text = run("verify", "bijection", "--max-nu", "5")
    assert code == 0 and "summary:" in text and ", 0 failed" in text
    code, text = run("verify", "order-independence", "--max-mu", "3", "--max-nu", "5", "--json")
    report = json.loads(text)
    assert code == 0 and report["summary"]["fail"] == 0
    code, text = run("verify", "theorem36", "--max-entry", "2", "--max-size", "3")
    assert code == 0


def test_verify_all_json_is_a_list():
    code, text = run("verify", "all", "--max-nu", "4", "--max-mu", "3", "--max-size", "2", "--json")
    reports = json.loads(text)
    assert code == 0 and [r["scope"]["suite"] for r in reports] == \
        ["counts", "bijection", "order-independence", "theorem36"]


def test_verify_budget_overflow_prints_nothing(capsys):
    code, text = run("verify", "order-independence", "--max-mu", "6")
    assert code == 3 and text == ""
    code, text = run("verify", "all", "--max-nu", "9")
    assert code == 3 and text == ""


def test_verify_cap_env_var(monkeypatch):
    monkeypatch.setenv("LRPIC_CAP_NU", "3")
    with pytest.raises(BudgetExceeded):
        check_budgets(max_nu=4)
    code, _ = run("verify", "counts", "--max-nu", "4")
    assert code == 3
    code, _ = run("verify", "counts", "--max-nu", "4", "--cap-nu", "4")
    assert code == 0


def test_verify_failure_exit_status(monkeypatch):
    from lrpictures import verify

    monkeypatch.setattr(verify, "_counts_job", lambda job: [Check("count-identity", "x", False)])
    code, text = run("verify", "counts", "--max-nu", "2")
    assert code == 1 and "FAIL count-identity [x]" in text


def test_report_summary_matches_checks():
    report = run_bijection(max_nu=4)
    s = report.summary
    assert s["pass"] == sum(c.passed for c in report.checks)
    assert s["fail"] == sum(not c.passed for c in report.checks)
    assert s["total"] == len(report.checks) and report.ok
    empty = VerificationReport({"suite": "none"})
    assert empty.summary == {"pass": 0, "fail": 0, "total": 0} and empty.ok


def test_worker_pool_keeps_order():
    assert run_bijection(max_nu=5, workers=2).to_json() == run_bijection(max_nu=5).to_json()


def test_triples_enumeration():
    got = list(triples(2))
    assert ((), (1,), (1,)) in got and ((1,), (1,), (2,)) in got
    assert all(l.size + m.size == n.size for l, m, n in got)
    assert len(got) == len(set(got))


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "lrpictures", "verify", "bijection", "--max-nu", "4", "--json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["summary"]["fail"] == 0
