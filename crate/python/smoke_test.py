#!/usr/bin/env python3
"""Smoke test for the Python bindings.

Builds the extension module with cargo if needed, imports it, and runs a
handful of end-to-end checks: chain enumeration, exact differential and
derivation values, kernel dimensions, the cohomology tables of both Virasoro
envelopes, and a current conformal algebra.
"""

import shutil
import subprocess
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
MODULE = "conformal_hochschild_py"


def build_and_import():
    lib = REPO / "target" / "release" / f"lib{MODULE}.so"
    if not lib.exists():
        print(f"building {MODULE} (release) ...")
        subprocess.run(
            ["cargo", "build", "--release", "-p", "conformal-hochschild-py"],
            cwd=REPO,
            check=True,
        )
    if not lib.exists():
        sys.exit(f"expected {lib} after the build")
    stage = Path(tempfile.mkdtemp(prefix="conformal-hochschild-"))
    shutil.copy2(lib, stage / f"{MODULE}.so")
    sys.path.insert(0, str(stage))
    return __import__(MODULE)


def expect(label, got, want):
    if got != want:
        sys.exit(f"FAIL {label}: got {got!r}, want {want!r}")
    print(f"PASS {label}")


def main():
    ch = build_and_import()

    expect(
        "U(3) chains of length 3, degree 4",
        ch.anick_chains("u3", 3, 4),
        [[2, 2, 0], [3, 1, 0]],
    )
    expect("chain predicate", ch.is_chain("u3", [2, 1, 0]), True)
    expect("chain predicate rejects [1|1]", ch.is_chain("u3", [1, 1]), False)

    expect(
        "normal form of v(2)v(1) in U(3)",
        ch.normal_form("u3", [2, 1]),
        [([2], Fraction(1)), ([1, 2], Fraction(1))],
    )

    expect(
        "differential of [3|2] (closed = paths)",
        ch.anick_diff("u3", [3, 2], method="both"),
        [([4], Fraction(-3, 2))],
    )
    expect(
        "differential of [3|1|0]",
        ch.anick_diff("u3", [3, 1, 0]),
        [([2, 1], Fraction(3)), ([3, 0], Fraction(-1))],
    )
    expect(
        "U(2) differential of [2|1|0]",
        ch.anick_diff("u2", [2, 1, 0]),
        [([1, 1], Fraction(2)), ([2, 0], Fraction(-1))],
    )
    expect(
        "U(2) derivation of [2|1|0] (fast = homotopy route)",
        ch.tilde_partial("u2", [2, 1, 0], method="both"),
        [([1, 1, 0], Fraction(2))],
    )
    expect(
        "homotopy of [2|0]",
        sorted(ch.g_map("u3", [2, 0])),
        sorted([([[2], [0]], Fraction(1)), ([[0], [2]], Fraction(-1))]),
    )

    expect("dim K_3 in degree 4", ch.kernel_dim("u3", 3, 4), 1)
    basis = ch.kernel_basis("u3", 2, 3)
    expect(
        "kernel basis at (2, 3) is e_3 = [3|0] - 3[2|1]",
        basis,
        [[([2, 1], Fraction(-3)), ([3, 0], Fraction(1))]],
    )

    table = ch.cohomology_table("u3", 3, 8, method="both")
    expect("U(3) totals (n <= 3, d <= 8)", table["totals"], {1: 0, 2: 1, 3: 1})
    cell = next(e for e in table["entries"] if e["n"] == 2 and e["d"] == 3)
    expect("the H^2 class sits in degree 3", cell["cohomology"], 1)

    table = ch.cohomology_table("u2", 3, 8)
    expect("U(2) totals vanish", table["totals"], {1: 0, 2: 0, 3: 0})

    table = ch.current_table("builtin:mat:2", 2, 2)
    expect("matrix current algebra vanishes", table["totals"], {1: 0, 2: 0})
    expect(
        "H^1 of the truncated polynomial current algebra",
        ch.current_dim("builtin:truncpoly:3", 1, 0),
        1,
    )
    expect(
        "ordinary first cohomology of the truncated polynomial algebra",
        ch.ordinary_hochschild_dim("builtin:truncpoly:3", 1),
        1,
    )
    rows = ch.theorem_check("builtin:mat:2", 2, 2)
    expect(
        "current-algebra comparison rows all pass",
        all((not applicable) or lhs == rhs for _, applicable, lhs, rhs in rows),
        True,
    )

    try:
        ch.anick_chains("u7", 2, 3)
        sys.exit("FAIL unknown family should raise ValueError")
    except ValueError:
        print("PASS unknown family raises ValueError")

    results = ch.selftest("current")
    failed = [name for name, passed, _ in results if not passed]
    expect("current selftest suite", failed, [])

    print("all smoke tests passed")


if __name__ == "__main__":
    main()
