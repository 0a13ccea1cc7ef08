import subprocess
import sys

import pytest

from graphgroups import report, textfmt
from graphgroups.cli import main
from graphgroups.errors import VerificationError

from fixtures import RUNS, SAMPLES


def run_cli(tmp_path, *args):
    out = tmp_path / "out.txt"
    code = main([*args, "-o", str(out)])
    return code, (out.read_text() if out.exists() else "")


def fresh_report(sample, command):
    doc = textfmt.parse((SAMPLES / sample).read_text())
    return report.render(report.run(command, doc))


@pytest.mark.parametrize("sample,command", RUNS, ids=[f"{c}:{s}" for s, c in RUNS])
def test_report_verifies(tmp_path, sample, command):
    code, text = run_cli(tmp_path, command, str(SAMPLES / sample))
    assert code == 0
    path = tmp_path / "r.txt"
    path.write_text(text)
    assert main(["verify", str(path)]) == 0
    assert text == fresh_report(sample, command)  # deterministic output


def test_check_balanced_outputs(tmp_path):
    _, text = run_cli(tmp_path, "check-balanced", str(SAMPLES / "bs22.gog"))
    assert "verdict = balanced" in text and "potential a = 1" in text
    _, text = run_cli(tmp_path, "check-balanced", str(SAMPLES / "bs23.gog"))
    assert "verdict = unbalanced" in text
    assert "forward_product = 2" in text and "backward_product = 3" in text


def test_machine_format(tmp_path):
    code, text = run_cli(tmp_path, "central-quotient", str(SAMPLES / "trefoil.gog"), "--format", "machine")
    assert code == 0
    lines = text.splitlines()
    assert "certificate.n = 6" in lines
    assert "certificate.exponent.b = 9" in lines
    assert all(" = " in line for line in lines)


def test_base_flag(tmp_path):
    _, text = run_cli(tmp_path, "central-quotient", str(SAMPLES / "trefoil.gog"), "--base", "b")
    assert "base = b" in text


@pytest.mark.parametrize("args,code", [
    (["central-quotient", "bs23.gog"], 2),
    (["find-z-homs", "racg_k2.gp"], 1),
    (["kernel-factor", "raag_path.gp"], 2),
    (["enumerate", "bs23.pres", "--bound", "50"], 3),
    (["kill-vertex", "racg_k2.gp", "--vertex", "nope"], 1),
    (["pi1", "does-not-exist.gog"], 1),
])
def test_exit_codes(tmp_path, args, code):
    args = [args[0], str(SAMPLES / args[1]), *args[2:]]
    assert run_cli(tmp_path, *args)[0] == code


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.gog"
    bad.write_text("[graph-of-groups]\nvertex a group=Q\n")
    assert run_cli(tmp_path, "pi1", str(bad))[0] == 1


def test_incomplete_coset_action_is_success(tmp_path):
    code, text = run_cli(tmp_path, "coset-action", str(SAMPLES / "coset_d8.gp"))
    assert code == 0 and "complete = false" in text and "frontier" in text


def test_verify_rejects_edited_potential(tmp_path):
    text = fresh_report("bs22.gog", "check-balanced").replace("potential a = 1", "potential a = 2")
    path = tmp_path / "r.txt"
    path.write_text(text)
    assert main(["verify", str(path)]) == 4


SEMANTIC_TAMPERS = [
    ("bs23.gog", "check-balanced", "backward_product = 3", "backward_product = 4"),
    ("bs22.gog", "check-balanced", "verdict = balanced", "verdict = unbalanced"),
    ("trefoil.gog", "central-quotient", "exponent b = 9", "exponent b = 8"),
    ("trefoil.gog", "central-quotient", "edge_order e = 3", "edge_order e = 2"),
    ("bs23.gog", "find-z-homs", "verdict = fail", "verdict = pass"),
    ("figure1.gog", "decompose", "free_rank = 3", "free_rank = 2"),
    ("a4.pres", "enumerate", "row 2 = 3 4 3 1", "row 2 = 3 4 1 3"),
    ("a4.pres", "enumerate", "index = 4", "index = 5"),
    ("coset_d8.gp", "coset-action", "image 1 = 2", "image 1 = 3"),
    ("kill_star.gp", "kernel-factor", "factor 1 2 = 1 : 2", "factor 1 2 = 1 : 1"),
    ("gs_z3.gs", "gs", "product = g(1,0) g(1,1) t", "product = g(1,0) g(1,2) t"),
    ("racg_k2.gp", "normal-form", "= v\n", "= u\n"),
    ("bs23.gog", "pi1", "t_e z_a^2 t_e^-1 z_a^-3", "t_e z_a^3 t_e^-1 z_a^-2"),
]


@pytest.mark.parametrize("sample,command,old,new", SEMANTIC_TAMPERS,
                         ids=[f"{c}:{o}" for _, c, o, _ in SEMANTIC_TAMPERS])
def test_semantic_tampering_rejected_without_digest(sample, command, old, new):
    text = fresh_report(sample, command)
    assert old in text
    report.verify_report(text, check_digest=False)
    with pytest.raises(VerificationError):
        report.verify_report(text.replace(old, new, 1), check_digest=False)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "graphgroups", "check-balanced", str(SAMPLES / "bs23.gog")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "unbalanced" in proc.stdout
