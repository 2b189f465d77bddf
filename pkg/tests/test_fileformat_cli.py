import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from hopfforge.cyclotomic import CycScalar
from hopfforge.fileformat import (
    AlgebraFile, ParseError, format_scalar, parse_scalar, write_hopf,
)
from hopfforge.hopf import check_hopf, group_algebra_cyclic
from hopfforge.linalg import Mat
from hopfforge.cli import main
from hopfforge.reports import Report

GOLDEN = Path(__file__).parent / "golden"


def rat(x):
    return CycScalar.from_rational(x)


def test_scalar_grammar_roundtrip():
    cases = ["0", "1", "-1", "2/3", "-5/7", "z", "-z", "z^3", "2*z^3 - 1",
             "1/2*z + 5", "-1/2*z^2 + 1/3*z - 2"]
    for text in cases:
        val = parse_scalar(text, 12)
        again = parse_scalar(format_scalar(val, 12), 12)
        assert val == again, text


def test_scalar_grammar_rejects_garbage():
    for text in ("", "z^", "q + 1", "1//2", "2*w"):
        with pytest.raises(ParseError):
            parse_scalar(text, 6)


def test_file_roundtrip_group_algebra(tmp_path):
    H = group_algebra_cyclic(6, conductor=6)
    p = tmp_path / "kc6.alg"
    write_hopf(H, p)
    f = AlgebraFile(p)
    H2 = f.to_hopf()
    assert H2.dim == 6
    assert H2.mult == H.mult and H2.comult == H.comult
    assert H2.antipode == H.antipode
    assert check_hopf(H2).ok
    # byte-exact reprint
    p2 = tmp_path / "kc6_again.alg"
    write_hopf(H2, p2)
    assert p.read_bytes() == p2.read_bytes()


def test_golden_files_reproducible(tmp_path):
    # cmd_example output is byte-identical across runs
    rc = main(["example", "b0", "--out", str(tmp_path)])
    assert rc == 0
    for name in ("b0.alg", "b0_base.alg"):
        assert (tmp_path / name).read_bytes() == (GOLDEN / name).read_bytes(), name
    rc = main(["example", "c4min", "--out", str(tmp_path)])
    assert rc == 0
    for name in ("c4min.alg", "c4min_base.alg"):
        assert (tmp_path / name).read_bytes() == (GOLDEN / name).read_bytes(), name


def test_golden_parse_print_bit_exact(tmp_path):
    # parse(print(X)) = X, and reprinting a parsed catalog file is
    # byte-identical, MAP sections included
    for path in sorted(GOLDEN.glob("*.alg")):
        f = AlgebraFile(path)
        if f.kind != "hopf":
            continue
        H = f.to_hopf()
        refs = {args[0]: args[1] for sec, args, _ in f.sections
                if sec == "MAP" and len(args) > 1}
        base_dim = AlgebraFile(path.parent / refs["sigma"]).dim if refs else H.dim

        def shape_of(name):
            return (H.dim, base_dim) if name == "sigma" else (base_dim, H.dim)

        maps = {name: (mat, ref) for name, (mat, ref) in f.maps(shape_of).items()}
        out = tmp_path / path.name
        write_hopf(H, out, kind=f.kind, maps=maps)
        assert out.read_bytes() == path.read_bytes(), path.name
        again = AlgebraFile(out).to_hopf()
        assert again.mult == H.mult and again.comult == H.comult


def test_cli_check_exit_codes(tmp_path):
    assert main(["check", str(GOLDEN / "b0.alg")]) == 0
    # corrupt a structure constant: check fails with exit 1
    text = (GOLDEN / "b0.alg").read_text().replace("1 6 7 -1", "1 6 7 1", 1)
    bad = tmp_path / "bad.alg"
    bad.write_text(text)
    assert main(["check", str(bad)]) == 1
    # unparseable file: exit 2
    ugly = tmp_path / "ugly.alg"
    ugly.write_text("# dim: 2\nSECTION MULT\n0 0 0 huh?\n")
    assert main(["check", str(ugly)]) == 2
    assert main(["check", str(tmp_path / "missing.alg")]) == 2


def test_cli_ore_pipeline(tmp_path):
    out = tmp_path / "rebuilt.alg"
    rc = main(["ore", "--base", str(GOLDEN / "b0_base.alg"), "--g", "g3",
               "--chi", "chi1", "--lambda", "0", "--out", str(out)])
    assert rc == 0
    rebuilt = AlgebraFile(out).to_hopf()
    golden = AlgebraFile(GOLDEN / "b0.alg").to_hopf()
    assert rebuilt.mult == golden.mult
    assert rebuilt.comult == golden.comult
    assert rebuilt.antipode == golden.antipode
    # wrong N is rejected
    rc = main(["ore", "--base", str(GOLDEN / "b0_base.alg"), "--g", "g3",
               "--chi", "chi1", "--lambda", "0", "--N", "3"])
    assert rc == 1
    # lambda gated to zero on this datum
    rc = main(["ore", "--base", str(GOLDEN / "b0_base.alg"), "--g", "g3",
               "--chi", "chi1", "--lambda", "1"])
    assert rc == 1


def test_cli_bosonize(tmp_path):
    out = tmp_path / "smash.alg"
    rc = main(["bosonize", str(GOLDEN / "qline6_r.alg"), str(GOLDEN / "qline6_xi.alg"),
               "--out", str(out)])
    assert rc == 0
    B = AlgebraFile(out).to_hopf()
    assert B.dim == 36


def test_cli_analyze(tmp_path, capsys):
    # write the xmas pair and analyze it through the CLI surface
    rc = main(["example", "xmas", "--out", str(tmp_path)])
    assert rc == 0
    capsys.readouterr()
    rc = main(["analyze", "--A", str(tmp_path / "xmas.alg"),
               "--H", str(tmp_path / "xmas_base.alg"),
               "--sigma", str(tmp_path / "xmas_sigma.alg"),
               "--pi", str(tmp_path / "xmas_pi.alg")])
    captured = capsys.readouterr()
    assert rc == 0
    kv = Report.parse_kv(captured.out)
    assert kv["thin"] == "True"
    assert kv["N"] == "6"
    assert kv["eq_a_colinear"] == "False"
    assert kv["eq_4_pi_algebra_map"] == "False"
    assert kv["dim_A1"] == "24"


def test_cli_example_xmas_report(tmp_path, capsys):
    rc = main(["example", "xmas", "--out", str(tmp_path)])
    captured = capsys.readouterr()
    assert rc == 0
    kv = Report.parse_kv(captured.out)
    assert kv["dim"] == "72"
    assert kv["pi_thin"] == "True"
    assert kv["pi_eq_a_colinear"] == "False"
    for name in ("xmas.alg", "xmas_base.alg", "xmas_pi.alg", "xmas_sigma.alg"):
        assert (tmp_path / name).exists()


def test_cli_entry_point_subprocess():
    proc = subprocess.run([sys.executable, "-m", "hopfforge.cli", "check",
                           str(GOLDEN / "c4min.alg")], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "PASS" in proc.stdout


def test_cli_unknown_example():
    assert main(["example", "nosuch"]) == 2
