"""Sample files and the commands that apply to each."""
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
SAMPLES = ROOT / "samples"

GOG_COMMANDS = ["check-balanced", "pi1", "find-z-homs", "decompose"]

# (sample, command) pairs that succeed and produce a verifiable report
RUNS = (
    [(f, c) for f in ("bs22.gog", "bs23.gog", "trefoil.gog", "figure1.gog") for c in GOG_COMMANDS]
    + [("bs22.gog", "central-quotient"), ("trefoil.gog", "central-quotient")]
    + [("racg_k2.gp", c) for c in ("graph-product", "normal-form")]
    + [("raag_path.gp", c) for c in ("graph-product", "normal-form", "kill-vertex")]
    + [("kill_star.gp", c) for c in ("graph-product", "normal-form", "kill-vertex", "kernel-factor")]
    + [("coset_d8.gp", c) for c in ("graph-product", "kill-vertex", "coset-action")]
    + [("gs_z3.gs", "gs"), ("a4.pres", "enumerate")]
)


def sample_paths():
    return sorted(SAMPLES.iterdir())
