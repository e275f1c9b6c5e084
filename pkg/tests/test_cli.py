import io

import pytest

from connforce.cli import main


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out=out, err=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


def gen(*args):
    code, out, _ = run(["gen", *map(str, args)])
    assert code == 0
    return out


def test_gen_path():
    assert gen("path", 3) == "3\n0 1\n1 2\n"


def test_fc_flower_snark_brute():
    code, out, _ = run(["fc", "-", "--method", "brute"], gen("flower_snark", 5))
    assert code == 0
    assert out == "Fc = 7\nmethod = brute\nbound = 7, equality = yes\n"


def test_fc_star():
    code, out, _ = run(["fc", "-"], gen("star", 4))
    assert (code, out) == (0, "Fc = 3\nmethod = tree\n")


def test_fc_path():
    code, out, _ = run(["fc", "-"], gen("path", 10))
    assert (code, out) == (0, "Fc = 1\nmethod = path\n")


def test_fc_clique_witness_and_trace():
    code, out, _ = run(["fc", "-", "--trace"], "4\n0 1\n1 2\n0 2\n0 3\n")
    assert code == 0
    lines = out.splitlines()
    assert lines[:2] == ["Fc = 2", "method = clique"]
    assert lines[2].startswith("witness = {")
    assert len(lines) == 5


def test_fc_structural_refuses_cycle():
    code, out, err = run(["fc", "-", "--method", "structural"], gen("cycle", 5))
    assert code == 1 and out == "" and err.startswith("connforce: ")


def test_fc_all():
    code, out, _ = run(["fc", "-", "--all"], gen("path", 4))
    assert out == "Fc = 1\nmethod = brute\nwitness = {0}\nwitness = {3}\n"


def test_f_witness():
    code, out, _ = run(["f", "-", "--witness"], gen("cycle", 4))
    assert code == 0 and out == "F = 2\nwitness = {0 1}\n"


def test_sets():
    code, out, _ = run(["sets", "-", "--connected", "--min"], gen("star", 4))
    assert out == "{0 1 2}\n{0 1 3}\n{0 2 3}\n"


def test_spread():
    code, out, _ = run(["spread", "-", "3", "--connected"], gen("pendant_cycle", 10))
    assert (code, out) == (0, "spread = -5\n")
    code, _, err = run(["spread", "-", "99"], gen("path", 3))
    assert code == 1 and "not in the graph" in err


def test_info():
    code, out, _ = run(["info", "-"], gen("star", 4))
    assert code == 0
    assert "R1 = {0}" in out and "curly_L = 2" in out and "leaf_number = 3" in out


def test_deterministic_output():
    text = gen("pendant_path", 3)
    assert run(["fc", "-", "--trace"], text) == run(["fc", "-", "--trace"], text)


def test_file_input(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text(gen("cycle", 5))
    assert run(["fc", str(p)])[1] == "Fc = 2\nmethod = brute\n"
    code, _, err = run(["fc", str(tmp_path / "missing.txt")])
    assert code == 1 and "cannot read" in err


@pytest.mark.parametrize(
    "argv, stdin, code",
    [
        (["fc", "-"], "garbage\n", 1),
        (["fc", "-"], "4\n0 1\n2 3\n", 1),
        (["gen", "flower_snark", "4"], "", 1),
        (["gen", "nope", "3"], "", 2),
        ([], "", 2),
        (["verify", "trees", "--threads", "0"], "", 2),
        (["sets", "-", "--min"], "", 2),
    ],
)
def test_exit_codes(argv, stdin, code):
    assert run(argv, stdin)[0] == code


def test_verify_snark_passes():
    code, out, _ = run(["verify", "snark"])
    assert code == 0
    assert out.splitlines()[-1].startswith("OK: ")


def test_explore_fc_n_minus_2():
    code, out, _ = run(["explore", "fc-n-2", "--max-n", "4"])
    assert code == 0 and out.startswith("n = 3: ")
