"""Backend equivalence: the compiled kernel must agree with the pure-Python
twin bit for bit (same ordering, same float operations)."""

import math
import random

import numpy as np
import pytest

from ortholat import _enumpy, catalog, exactmat as em, kernels, lattice, sequences as seq

try:
    from ortholat import _enumcy
except ImportError:
    _enumcy = None

needs_compiled = pytest.mark.skipif(_enumcy is None, reason="compiled kernel not built")


def random_gso(rng, n):
    while True:
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        if em.det(m) != 0:
            break
    rows = np.array(m, dtype=float)
    mu, rdiag = lattice.gso_float(rows)
    radius = float(min((rows * rows).sum(axis=1))) * (1 + 1e-9)
    return mu, rdiag, rows, radius


class TestPureKernel:
    def test_svp_unit_lattice(self):
        mu = np.eye(3)
        rdiag = np.ones(3)
        norm, coeffs, completed, _ = _enumpy.svp_enum(mu, rdiag, 1.0 + 1e-9)
        assert completed
        assert norm == 1.0
        assert sorted(map(abs, coeffs)) == [0, 0, 1]

    def test_collect_counts_unit_lattice(self):
        mu = np.eye(2)
        rdiag = np.ones(2)
        found, completed, _ = _enumpy.svp_enum_collect(mu, rdiag, 1.0 + 1e-9, limit=100)
        # only the top level is sign-restricted, so the x_top = 0 subtree
        # still contains +-(1, 0)
        assert completed
        assert sorted(x for _, x in found) == [[-1, 0], [0, 1], [1, 0]]
        assert all(n == 1.0 for n, _ in found)

    def test_budget_flags_incomplete(self):
        mu = np.eye(4)
        rdiag = np.ones(4)
        _, _, completed, nodes = _enumpy.svp_enum(mu, rdiag, 25.0, max_nodes=10)
        assert not completed
        assert nodes == 11


@needs_compiled
class TestBackendEquivalence:
    def test_svp_and_collect_agree(self):
        rng = random.Random(77)
        for _ in range(40):
            n = rng.randint(2, 6)
            mu, rdiag, rows, radius = random_gso(rng, n)
            a = _enumpy.svp_enum(mu, rdiag, radius)
            b = _enumcy.svp_enum(mu, rdiag, radius)
            assert a == b
            ca = _enumpy.svp_enum_collect(mu, rdiag, radius, limit=200000)
            cb = _enumcy.svp_enum_collect(mu, rdiag, radius, limit=200000)
            assert ca == cb

    def test_torus_kernel_agrees(self):
        entry = catalog.get("e8-1")
        spec = seq.SequenceSpec(entry.dual_base, entry.good_perturbation)
        for w in (2, 3):
            member = seq.primal_member(spec, w)
            inv = em.inverse(member.dual_matrix)
            scaled = [[float(inv[j][i]) for j in range(8)] for i in range(8)]
            reduced, _ = lattice.lll(lattice.LatticeBasis(matrix=scaled))
            rows = np.array(reduced.matrix, dtype=float)
            mu, rdiag = lattice.gso_float(rows)
            a = _enumpy.torus_min_enum(mu, rdiag, rows, 4.0)
            b = _enumcy.torus_min_enum(mu, rdiag, rows, 4.0)
            assert a == b

    def test_node_budget_agrees(self):
        rng = random.Random(5)
        mu, rdiag, rows, radius = random_gso(rng, 5)
        a = _enumpy.svp_enum(mu, rdiag, radius * 50, max_nodes=100)
        b = _enumcy.svp_enum(mu, rdiag, radius * 50, max_nodes=100)
        assert a == b
        assert not a[2]


class TestFacade:
    def test_backend_name(self):
        assert kernels.backend() in ("compiled", "python")

    def test_facade_dispatches(self):
        mu = np.eye(2)
        rdiag = np.ones(2)
        norm, coeffs, completed, _ = kernels.svp_enum(mu, rdiag, 1.5)
        assert completed and norm == 1.0

    def test_pure_env_override(self):
        import subprocess
        import sys

        out = subprocess.run(
            [sys.executable, "-c", "import ortholat.kernels as k; print(k.backend())"],
            capture_output=True,
            text=True,
            env={"ORTHOLAT_PURE": "1", "PATH": "/usr/bin:/bin"},
            cwd="/",
        )
        assert out.stdout.strip() == "python"
