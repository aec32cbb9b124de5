#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernel against the pure-Python twin.

Runs the same workloads through both backends, checks the results agree
exactly, and prints timings with speedups.  Usage:

    python benchmarks/compare_backends.py [--heavy]

--heavy adds a 24-dimensional torus-code case (about a minute of compiled
time, considerably more in pure Python).
"""

import argparse
import time

import numpy as np

from ortholat import _enumpy, catalog, exactmat, lattice, sequences, torus

try:
    from ortholat import _enumcy
except ImportError:
    _enumcy = None


def _torus_inputs(name: str, pert: str, w: int):
    entry = catalog.get(name)
    n = entry.dimension
    p = exactmat.zeros(n, n) if pert == "zero" else entry.good_perturbation
    member = sequences.primal_member(sequences.SequenceSpec(entry.dual_base, p), w)
    inv = exactmat.inverse(member.dual_matrix)
    scaled = [[float(inv[j][i]) for j in range(n)] for i in range(n)]
    reduced, _ = lattice.lll(lattice.LatticeBasis(matrix=scaled))
    rows = np.array(reduced.matrix, dtype=float)
    mu, rdiag = lattice.gso_float(rows)
    return mu, rdiag, rows


def _svp_inputs(name: str, w: int):
    entry = catalog.get(name)
    n = entry.dimension
    member = sequences.primal_member(
        sequences.SequenceSpec(entry.dual_base, entry.good_perturbation), w
    )
    reduced, _ = lattice.lll(lattice.LatticeBasis(matrix=member.primal_matrix))
    c_rows = [[int(x) for x in row] for row in reduced.matrix]
    mu_e, rdiag_e = lattice.gso_exact(c_rows)
    mu = np.array([[float(x) for x in row] for row in mu_e])
    rdiag = np.array([float(x) for x in rdiag_e])
    g = lattice.gram(lattice.LatticeBasis(matrix=c_rows))
    radius = float(min(g[i][i] for i in range(n))) * (1 + 1e-9)
    return mu, rdiag, radius


def _time(fn, args, reps):
    out = None
    t0 = time.perf_counter()
    for _ in range(reps):
        out = fn(*args)
    return out, (time.perf_counter() - t0) / reps


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--heavy", action="store_true",
                        help="add 24-dim cases with larger enumeration trees")
    args = parser.parse_args()

    if _enumcy is None:
        raise SystemExit("compiled kernel is not built; run pip install -e . first")

    # (label, kind, inputs, repetitions for stable timing)
    cases = [
        ("svp e8-2 good w=9 (dim 8)", "svp", _svp_inputs("e8-2", 9), 50),
        ("torus e8-1 good w=7 (dim 8)", "torus", _torus_inputs("e8-1", "good", 7), 20),
        ("torus e8-2 zero w=9 (dim 8)", "torus", _torus_inputs("e8-2", "zero", 9), 20),
        ("torus leech-1 good w=1 (dim 24)", "torus", _torus_inputs("leech-1", "good", 1), 1),
    ]
    if args.heavy:
        cases += [
            ("torus leech-1 good w=2 (dim 24)", "torus", _torus_inputs("leech-1", "good", 2), 1),
            ("torus leech-2 zero w=2 (dim 24)", "torus", _torus_inputs("leech-2", "zero", 2), 1),
        ]

    print(f"{'case':38s} {'pure (s)':>10s} {'compiled (s)':>13s} {'speedup':>9s}")
    for label, kind, inputs, reps in cases:
        if kind == "svp":
            mu, rdiag, radius = inputs
            pure, t_pure = _time(_enumpy.svp_enum, (mu, rdiag, radius), reps)
            fast, t_fast = _time(_enumcy.svp_enum, (mu, rdiag, radius), reps)
        else:
            mu, rdiag, rows = inputs
            pure, t_pure = _time(_enumpy.torus_min_enum, (mu, rdiag, rows, 4.0), reps)
            fast, t_fast = _time(_enumcy.torus_min_enum, (mu, rdiag, rows, 4.0), reps)
        if pure != fast:
            raise SystemExit(f"backend mismatch on {label}: {pure} vs {fast}")
        print(f"{label:38s} {t_pure:10.4f} {t_fast:13.4f} {t_pure / t_fast:8.1f}x")
    print("results identical across backends for every case")


if __name__ == "__main__":
    main()
