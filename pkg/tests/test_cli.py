import copy
import subprocess
import sys

import pytest

from nilpat import build_Am_matrix, is_recursive_star, parse_matrix, parse_pattern, star_pattern, tridiagonal_pattern
from nilpat.cli import main
from nilpat.constructions import T5P
from nilpat.descriptors import evaluate
from nilpat.errors import DescriptorError, MTooSmall
from nilpat.nj import recheck_certificate
from nilpat.patterns import render_pattern
from nilpat.verify import FIXTURES, run_checks


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


# -- descriptors ----------------------------------------------------------------

def test_descriptor_e1(z1):
    assert evaluate("am:m=2,block=starnil:d=1,-1") == build_Am_matrix([z1, z1])


def test_descriptor_builtins_and_nesting():
    assert evaluate("star:s=4") == star_pattern(4)
    assert evaluate("tridiag:n=5") == tridiagonal_pattern(5)
    nested = evaluate("am:m=4,block=am:m=3,block=Z3")
    assert nested.n == 4 * 10 + 1
    assert is_recursive_star(nested)
    assert evaluate("perm:p=3,2,1,4,5,block=T5") == T5P


def test_descriptor_errors(monkeypatch):
    with pytest.raises(MTooSmall):
        evaluate("cm:m=2,block=starnil:d=1,-1")
    with pytest.raises(DescriptorError):
        evaluate("blob:x=1")
    with pytest.raises(DescriptorError):
        evaluate("am:m=two,block=Z3")
    with pytest.raises(DescriptorError):
        evaluate("am:m=2,block=nosuchthing")
    monkeypatch.setenv("NILPAT_MAX_ORDER", "6")
    with pytest.raises(DescriptorError):
        evaluate("am:m=2,block=Z3")


# -- analyze --------------------------------------------------------------------

def test_analyze_t5(tmp_path, capsys):
    code, out, _ = run(["analyze", write(tmp_path, "t5.pat", render_pattern(tridiagonal_pattern(5)))], capsys)
    assert code == 0
    assert "balanced tree pattern, root = 3" in out


def test_analyze_z3(tmp_path, capsys):
    code, out, _ = run(["analyze", write(tmp_path, "z3.pat", "0 * *\n* * 0\n* 0 *\n")], capsys)
    assert code == 0
    assert "\nrecursive star pattern" in out


def test_analyze_nonsymmetric(tmp_path, capsys):
    code, out, _ = run(["analyze", write(tmp_path, "ns.pat", "0 *\n0 0\n")], capsys)
    assert code == 0
    assert "graph: n/a (not symmetric)" in out


def test_analyze_parse_error(tmp_path, capsys):
    code, _, err = run(["analyze", write(tmp_path, "bad.pat", "0 *\n* 0 0\n")], capsys)
    assert code == 1 and err.startswith("error:")


# -- construct ------------------------------------------------------------------

def test_construct_e1_matrix(tmp_path, capsys, z1):
    out_path = tmp_path / "n1.mat"
    code, out, _ = run(["construct", "am:m=2,block=starnil:d=1,-1", "--out", str(out_path)], capsys)
    assert code == 0 and "order 7" in out
    assert parse_matrix(out_path.read_text()) == build_Am_matrix([z1, z1])
    assert (tmp_path / "n1.pat").exists()


def test_construct_star_pattern(tmp_path, capsys):
    out_path = tmp_path / "z4.pat"
    code, out, _ = run(["construct", "star:s=4", "--out", str(out_path)], capsys)
    assert code == 0 and "order 4" in out
    assert parse_pattern(out_path.read_text()) == star_pattern(4)
    assert not list(tmp_path.glob("*.tmp"))


def test_construct_to_stdout(capsys):
    code, out, _ = run(["construct", "star:s=3"], capsys)
    assert code == 0
    assert out == "# order 3\n0 * *\n* * 0\n* 0 *\n"


def test_construct_cm2_matrix_fails(capsys):
    code, _, err = run(["construct", "cm:m=2,block=starnil:d=1,-1"], capsys)
    assert code == 1 and "m >= 3" in err


def test_construct_pattern_as_mat_fails(capsys):
    code, _, _ = run(["construct", "star:s=3", "--format", "mat"], capsys)
    assert code == 1


# -- index ----------------------------------------------------------------------

def test_index_command(tmp_path, capsys):
    code, out, _ = run(["index", write(tmp_path, "z.mat", FIXTURES["Z3"]["Z"])], capsys)
    assert code == 0 and "index: 3 (full index)" in out
    code, out, _ = run(["index", write(tmp_path, "i.mat", "1 0; 0 1")], capsys)
    assert code == 0 and "nilpotent: no" in out


def test_index_rejects_pattern_file(tmp_path, capsys):
    code, _, _ = run(["index", write(tmp_path, "p.pat", "0 *\n* 0\n")], capsys)
    assert code == 1


# -- nj -------------------------------------------------------------------------

@pytest.fixture
def e1_files(tmp_path, capsys):
    mat = tmp_path / "e1.mat"
    main(["construct", "am:m=2,block=starnil:d=1,-1", "--out", str(mat)])
    capsys.readouterr()
    return str(mat), str(tmp_path / "e1.pat")


def test_nj_e1_certifies(e1_files, tmp_path, capsys):
    mat, pat = e1_files
    cert = tmp_path / "e1.cert"
    code, out, _ = run(["nj", mat, pat, "--out", str(cert)], capsys)
    assert code == 0
    assert "index: 7" in out and "verdict: SAPCertified" in out and "det_jprime: 16" in out
    assert cert.read_text() == out
    assert recheck_certificate(cert.read_text())


def test_nj_with_vars(tmp_path, capsys):
    mat = write(tmp_path, "w.mat", FIXTURES["worked"]["N"])
    code, out, _ = run(["nj", mat, "--vars", "2,1,2,2,3,1"], capsys)
    assert code == 0 and "det_jprime: -2" in out
    assert "jprime:\n0 -1 0\n-1 -1 -1\n-1 -1/2 1\n" in out


def test_nj_search_cap_one_uses_vars_first(e1_files, capsys):
    mat, pat = e1_files
    code, _, _ = run(["nj", mat, pat, "--search", "1", "--vars", "2,1,3,2,4,2,3,3,4,4,6,5,6,6"], capsys)
    assert code == 0


def test_nj_non_full_index_search_is_inconclusive(tmp_path, capsys):
    mat = write(tmp_path, "b.mat", "0 1 1 0 0; -1/2 1 0 0 0; -1/2 0 -1 0 0; 0 0 0 0 1; 0 0 0 0 0")
    code, out, _ = run(["nj", mat, "--search", "100000"], capsys)
    assert code == 2 and "Inconclusive" in out


def test_nj_inconclusive_selection(tmp_path, capsys):
    mat = write(tmp_path, "t.mat", "1 1; -1 -1")
    code, out, _ = run(["nj", mat, "--vars", "1,2,2,1"], capsys)
    assert code == 2 and "verdict: Inconclusive" in out


def test_nj_non_conformant(tmp_path, capsys):
    mat = write(tmp_path, "w.mat", FIXTURES["worked"]["N"])
    pat = write(tmp_path, "z.pat", "* * *\n* * *\n* * *\n")
    code, _, err = run(["nj", mat, pat], capsys)
    assert code == 1 and "error:" in err


def test_nj_not_nilpotent(tmp_path, capsys):
    mat = write(tmp_path, "i.mat", "1 1; 1 1")
    code, _, err = run(["nj", mat], capsys)
    assert code == 1 and "N^2" in err


def test_nj_missing_file(capsys):
    code, _, _ = run(["nj", "/nonexistent/x.mat"], capsys)
    assert code == 1


# -- verify-paper -----------------------------------------------------------------

def test_verify_command_passes(capsys):
    code, out, _ = run(["verify-paper"], capsys)
    assert code == 0
    assert "FAIL" not in out
    assert out.strip().splitlines()[-1].endswith("checks passed")


def test_verify_command_detects_corrupted_fixture():
    fixtures = copy.deepcopy(FIXTURES)
    fixtures["Z4"]["Z"] = fixtures["Z4"]["Z"].replace("-16/5", "-16/7")
    results = {r.name: r for r in run_checks(fixtures)}
    assert not results["Z4: Z nilpotent of full index 4"].ok
    assert results["Z3: Z nilpotent of full index 3"].ok


def test_verify_command_is_deterministic():
    first = [r.line() for r in run_checks()]
    assert first == [r.line() for r in run_checks()]


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nilpat.cli", "construct", "tridiag:n=2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "# order 2\n* *\n* *\n"
