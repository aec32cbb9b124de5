"""Pure-Python enumeration kernels.

Fallback twin of the compiled module ``_enumcy``: identical depth-first
search, identical zigzag ordering and float operations, so both backends
return bit-identical results.  The search is the classic sphere-bounded
coefficient enumeration over a Gram-Schmidt profile: levels run from the
last basis row down to the first, each level zigzags around its real-valued
center, and a partial-norm bound prunes whole subtrees.
"""

import math


def _prepare(mu, rdiag):
    mu_l = [list(map(float, row)) for row in mu]
    r_l = list(map(float, rdiag))
    return mu_l, r_l


def svp_enum(mu, rdiag, radius_sq, max_nodes=0):
    """Find a shortest nonzero coefficient vector within the radius.

    Returns (best_norm_sq, best_coeffs | None, completed, nodes).  The top
    level only explores nonnegative values: the lattice is symmetric under
    negation, so this halves the tree without losing any norm.
    """
    mu, rdiag = _prepare(mu, rdiag)
    n = len(rdiag)
    radius = float(radius_sq)
    x = [0] * n
    dx = [0] * n
    centers = [0.0] * n
    rho = [0.0] * (n + 1)
    sigma = [[0.0] * n for _ in range(n + 1)]
    best_norm = radius
    best = None
    nodes = 0
    k = n - 1
    while True:
        nodes += 1
        if max_nodes and nodes > max_nodes:
            return best_norm, best, False, nodes
        y = x[k] - centers[k]
        newdist = rho[k + 1] + y * y * rdiag[k]
        if newdist <= best_norm:
            if k > 0:
                srow, snext, murow = sigma[k], sigma[k + 1], mu[k]
                xk = x[k]
                for i in range(k):
                    srow[i] = snext[i] + xk * murow[i]
                rho[k] = newdist
                k -= 1
                c = -sigma[k + 1][k]
                centers[k] = c
                x[k] = math.floor(c + 0.5)
                step = c - x[k]
                dx[k] = 1 if step >= 0 else -1
                continue
            # leaf
            if newdist < best_norm and any(x):
                best_norm = newdist
                best = x.copy()
        else:
            k += 1
            if k == n:
                return best_norm, best, True, nodes
        if k == n - 1:
            x[k] += 1  # top level: nonnegative branch only
        else:
            x[k] += dx[k]
            dx[k] = -dx[k] - (1 if dx[k] > 0 else -1)


def svp_enum_collect(mu, rdiag, radius_sq, limit, max_nodes=0):
    """Collect every nonzero coefficient vector with norm <= radius_sq.

    Returns (list of (norm_sq, coeffs), completed, nodes); raises if the
    shell holds more than ``limit`` vectors.  Radius does not shrink.
    """
    mu, rdiag = _prepare(mu, rdiag)
    n = len(rdiag)
    radius = float(radius_sq)
    x = [0] * n
    dx = [0] * n
    centers = [0.0] * n
    rho = [0.0] * (n + 1)
    sigma = [[0.0] * n for _ in range(n + 1)]
    found = []
    nodes = 0
    k = n - 1
    while True:
        nodes += 1
        if max_nodes and nodes > max_nodes:
            return found, False, nodes
        y = x[k] - centers[k]
        newdist = rho[k + 1] + y * y * rdiag[k]
        if newdist <= radius:
            if k > 0:
                srow, snext, murow = sigma[k], sigma[k + 1], mu[k]
                xk = x[k]
                for i in range(k):
                    srow[i] = snext[i] + xk * murow[i]
                rho[k] = newdist
                k -= 1
                c = -sigma[k + 1][k]
                centers[k] = c
                x[k] = math.floor(c + 0.5)
                step = c - x[k]
                dx[k] = 1 if step >= 0 else -1
                continue
            if any(x):
                found.append((newdist, x.copy()))
                if len(found) > limit:
                    raise ValueError("enumeration shell exceeded the collection limit")
        else:
            k += 1
            if k == n:
                return found, True, nodes
        if k == n - 1:
            x[k] += 1
        else:
            x[k] += dx[k]
            dx[k] = -dx[k] - (1 if dx[k] > 0 else -1)


def torus_min_enum(mu, rdiag, rows, d2_init, zero_eps=1e-9, max_nodes=0):
    """Minimize the flat-torus distance over nonzero cosets.

    ``rows`` is the reduced generator of the det-scaled lattice (so integer
    translates are torus-trivial and fractional parts are the residues).
    A coset at squared distance d2 has a centered representative of squared
    norm at most (n/16) d2, which couples the norm bound to the best
    distance found so far.  Returns (best_d2, best_coeffs | None, completed,
    nodes); best_coeffs is None when nothing beat d2_init.
    """
    mu, rdiag = _prepare(mu, rdiag)
    rows = [list(map(float, row)) for row in rows]
    n = len(rdiag)
    ncols = len(rows[0])
    bound_factor = ncols / 16.0 * (1 + 1e-9)
    best_d2 = float(d2_init)
    radius = bound_factor * best_d2
    quarter = 4.0 / ncols
    pi = math.pi
    sin = math.sin
    floor = math.floor
    x = [0] * n
    dx = [0] * n
    centers = [0.0] * n
    rho = [0.0] * (n + 1)
    sigma = [[0.0] * n for _ in range(n + 1)]
    # vpart[k] = sum over levels >= k of x[level] * rows[level]
    vpart = [[0.0] * ncols for _ in range(n + 1)]
    best = None
    nodes = 0
    k = n - 1
    while True:
        nodes += 1
        if max_nodes and nodes > max_nodes:
            return best_d2, best, False, nodes
        y = x[k] - centers[k]
        newdist = rho[k + 1] + y * y * rdiag[k]
        if newdist <= radius:
            if k > 0:
                srow, snext, murow = sigma[k], sigma[k + 1], mu[k]
                vrow, vnext, brow = vpart[k], vpart[k + 1], rows[k]
                xk = x[k]
                for i in range(k):
                    srow[i] = snext[i] + xk * murow[i]
                for i in range(ncols):
                    vrow[i] = vnext[i] + xk * brow[i]
                rho[k] = newdist
                k -= 1
                c = -sigma[k + 1][k]
                centers[k] = c
                x[k] = floor(c + 0.5)
                step = c - x[k]
                dx[k] = 1 if step >= 0 else -1
                continue
            # leaf: torus distance of v = vpart[1] + x[0]*rows[0]
            vnext, brow = vpart[1], rows[0]
            x0 = x[0]
            acc = 0.0
            maxfrac = 0.0
            for i in range(ncols):
                vi = vnext[i] + x0 * brow[i]
                f = vi - floor(vi + 0.5)
                af = -f if f < 0 else f
                if af > maxfrac:
                    maxfrac = af
                s = sin(pi * f)
                acc += quarter * s * s
                if acc >= best_d2:
                    break
            if acc < best_d2 and maxfrac > zero_eps:
                best_d2 = acc
                best = x.copy()
                radius = bound_factor * best_d2
        else:
            k += 1
            if k == n:
                return best_d2, best, True, nodes
        if k == n - 1:
            x[k] += 1  # distance is symmetric under negation
        else:
            x[k] += dx[k]
            dx[k] = -dx[k] - (1 if dx[k] > 0 else -1)
