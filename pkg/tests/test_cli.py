import io
import subprocess
import sys

import pytest
import yaml

from pbwalg import catalog
from pbwalg.casimir import is_scalar_multiple, resolve_printed_casimir
from pbwalg.coeffring import ParamPoly
from pbwalg.freealg import NCPoly
from pbwalg.parsing import parse_algebra_file, parse_expression
from pbwalg.cli import main

DASK_POINT = {"alpha": 1, "beta": 2, "gamma": 3, "delta": 5, "epsilon": 7, "nu": 11, "xi": 13, "zeta": 17}
DASK_AT = ",".join(f"{k}={v}" for k, v in DASK_POINT.items())


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def structured(*argv):
    code, out, err = run("--format", "structured", *argv)
    return code, yaml.safe_load(out)


def test_check_pbw_with_assumption():
    code, out, _ = run("check", "--catalog", "form-1a-casimir")
    assert code == 0
    assert out.strip() == "PBW (assuming 1 + lambda != 0)"


def test_check_not_pbw_structured():
    code, doc = structured("check", "--catalog", "form-1a-casimir", "--printed", "--at", "lambda=3")
    assert code == 1
    assert doc["format_version"] == 1 and doc["command"] == "check"
    assert doc["status"] == "not_pbw"
    for key in ("witness_ambiguity", "witness_word", "witness_polynomial", "assumptions"):
        assert key in doc


def test_check_general_family_exits_one():
    code, out, _ = run("check", "--catalog", "general-quadratic")
    assert code == 1 and out.startswith("not PBW: C*B*A leaves")


def test_reduce_cba_on_general_quadratic():
    code, out, _ = run("reduce", "--catalog", "general-quadratic", "--expr", "C*B*A")
    assert code == 0
    R = catalog.get("general-quadratic").relations()
    nf = parse_expression(out.strip(), R.generators, R.params)
    a110, b101, c011 = (ParamPoly.symbol(n) for n in ("a110", "b101", "c011"))
    assert nf.coeff((0, 1, 2)) == (1 + c011) * (1 + b101) * (1 + a110)


def test_reduce_strategies_agree_on_pbw_entry():
    outs = {run("reduce", "--catalog", "form-1b", "--expr", "C^2*B*A^2", "--strategy", s)[1]
            for s in ("leftmost", "rightmost", "random:7")}
    assert len(outs) == 1


def test_casimir_degree_three_matches_recorded_up_to_scale():
    code, out, _ = run("casimir", "--catalog", "daskaloyannis", "--degree", "3", "--at", DASK_AT)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "dimension 1"
    R = catalog.get("daskaloyannis").relations().substitute(DASK_POINT)
    K = parse_expression(lines[1].split(" = ", 1)[1], R.generators)
    ref = resolve_printed_casimir("daskaloyannis").substitute(DASK_POINT)
    ref = ref - NCPoly.scalar(ref.coeff(()), R.generators)
    assert is_scalar_multiple(K, ref)


def test_casimir_empty_basis_structured():
    code, doc = structured("casimir", "--catalog", "form-1a-lambda-minus-one", "--degree", "2")
    assert code == 0 and doc["casimirs"] == [] and doc["dimension"] == 0
    assert "assumptions" in doc


def test_casimir_verify():
    e = catalog.get("form-1b")
    code, out, _ = run("casimir", "--catalog", "form-1b", "--verify", " ".join(e.casimir.split()))
    assert code == 0 and out.strip() == "Casimir"
    code, out, _ = run("casimir", "--catalog", "form-1b", "--verify", "A")
    assert out.startswith("not central: [K,")


def test_constraints_count():
    code, out, _ = run("constraints", "--catalog", "general-quadratic-1a")
    assert code == 0 and len(out.strip().split("\n")) == 14
    code, doc = structured("constraints", "--catalog", "general-quadratic-1a")
    assert doc["count"] == 14 and len(doc["constraints"]) == 14


def test_classify_daskaloyannis():
    code, out, _ = run("classify", "--catalog", "daskaloyannis")
    assert code == 0
    lines = out.split("\n")
    assert lines[0] == "form 1a" and lines[1] == "lambda = 0"


def test_transform_with_map_file(tmp_path):
    m = tmp_path / "map.txt"
    m.write_text("B = B + 2*A\nC = 3*C\n")
    code, out, _ = run("transform", "--catalog", "form-1b", "--map", str(m))
    assert code == 0
    R2 = parse_algebra_file(out)
    assert R2.generators == ("A", "B", "C")


def test_algebra_file_argument(tmp_path):
    f = tmp_path / "heis.alg"
    f.write_text("generators: A B C\nrel: [B,A] = C\n")
    assert run("check", str(f))[:2] == (0, "PBW\n")


def test_catalog_list_and_show():
    code, out, _ = run("catalog", "list")
    assert code == 0 and len(out.strip().split("\n")) == 15
    code, out, _ = run("catalog", "show", "form-2d")
    assert code == 0 and out.startswith("# form-2d: ")
    code, doc = structured("catalog", "show", "daskaloyannis")
    assert doc["id"] == "daskaloyannis" and doc["label"] == "1a"


@pytest.mark.parametrize("argv,fragment", [
    (("check",), "no algebra given"),
    (("check", "--catalog", "nope"), "unknown catalog entry"),
    (("check", "--catalog", "form-1a-casimir", "--at", "lambda=-1"), "requires 1 + lambda != 0"),
    (("check", "--catalog", "form-1b", "--at", "bogus=1"), "unknown parameter 'bogus'"),
    (("check", "--catalog", "form-1b", "--at", "alpha"), "name=value"),
    (("check", "/nonexistent/file.alg"), "cannot read"),
    (("casimir", "--catalog", "form-1b", "--degree", "0"), "--degree must be positive"),
    (("catalog", "show"), "needs an identifier"),
])
def test_usage_errors_exit_two(argv, fragment):
    code, _, err = run(*argv)
    assert code == 2 and fragment in err


def test_parse_error_exit_two(tmp_path):
    f = tmp_path / "bad.alg"
    f.write_text("generators: A B C\nrel: [A,B] = C\n")
    code, _, err = run("check", str(f))
    assert code == 2 and "line 2, col 5: bracket must be written [B,A]" in err


def test_argparse_failure_exit_two():
    assert run("nosuchcommand")[0] == 2


def test_divergent_reduction_exit_three():
    code, _, err = run("check", "--catalog", "general-cubic")
    assert code == 3 and "did not stabilize" in err


def test_console_script_module():
    p = subprocess.run([sys.executable, "-m", "pbwalg.cli", "catalog", "list"],
                       capture_output=True, text=True, timeout=120)
    assert p.returncode == 0 and "daskaloyannis" in p.stdout
