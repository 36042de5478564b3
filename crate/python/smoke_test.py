#!/usr/bin/env python3
"""Smoke test for the Python bindings.

Builds nothing itself: expects `cargo build --release -p gwv-py` to have
produced target/release/libgwv.so, which is staged under an importable name.
Run from the repository root:

    cargo build --release -p gwv-py
    python3 python/smoke_test.py
"""

import json
import shutil
import sys
import sysconfig
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def stage_module() -> Path:
    ext = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    candidates = [
        ROOT / "target" / "release" / "libgwv.so",
        ROOT / "target" / "release" / "gwv.dll",
        ROOT / "target" / "release" / "libgwv.dylib",
    ]
    built = next((c for c in candidates if c.exists()), None)
    if built is None:
        sys.exit("build the extension first: cargo build --release -p gwv-py")
    stage = Path(tempfile.mkdtemp(prefix="gwv-py-"))
    shutil.copy2(built, stage / f"gwv{ext}")
    return stage


def main() -> None:
    sys.path.insert(0, str(stage_module()))
    import gwv

    # Golden rational curve counts.
    counts = [int(gwv.kontsevich_n(d)) for d in range(1, 6)]
    assert counts == [1, 1, 12, 620, 87304], counts
    print("rational curve counts:", counts)

    # Axioms pass on the line.
    p1 = gwv.Model.builtin("p1")
    assert p1.basis_size == 2 and p1.dimension == 1
    records = p1.validate()
    assert records and all(r["pass"] for r in records)
    print(f"p1 axioms: {len(records)} records, all pass")

    # Φ values and the genus-1 gap.
    assert p1.phi(0) == "0"
    assert p1.phi(1) == "-1/12"
    assert p1.gap(2) == "0"
    print("phi(1) =", p1.phi(1), " gap(2) =", p1.gap(2))

    # Negative control: a perturbed genus-1 potential must be caught.
    bad = p1.check(suite="applications", k_max=2, mutate_f1="q")
    assert any(not r["pass"] for r in bad)
    witness = next(r["witness"] for r in bad if not r["pass"] and "witness" in r)
    print("mutation witness:", json.dumps(witness))

    # Solve the plane for elliptic invariants.
    p2 = gwv.Model.builtin("p2", t_degree=11, novikov=3)
    solved = p2.solve(method="l1", max_q=3)
    table = dict(solved["invariants"])
    assert table == {1: "0", 2: "0", 3: "1"}, table
    print("elliptic invariants:", solved["invariants"])

    # Semisimplicity verdicts.
    _, invertible = p1.semisimplicity()
    assert invertible
    _, classical = gwv.Model.builtin("p1-classical", novikov=0).semisimplicity()
    assert not classical
    print("matrix verdicts: quantum line invertible, classical line singular")

    # Model files round-trip.
    with tempfile.TemporaryDirectory() as td:
        path = Path(td) / "p1.json"
        p1.save(path)
        again = gwv.Model.load(path)
        assert again.basis_size == 2 and again.has_genus1

    print("smoke test OK")


if __name__ == "__main__":
    main()
