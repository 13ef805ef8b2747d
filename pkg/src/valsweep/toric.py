"""Integer lattice and cone computations.

Determinants, adjugates and Smith normal forms of integer matrices, plus
2D dual cones, Hilbert bases and the regularity test for the invariant
(semigroup) ring attached to a 2x2 exponent matrix.  Everything is exact;
matrices are numpy object arrays holding Python ints.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import gcd

import numpy as np


class ToricError(ValueError):
    pass


def as_int_matrix(a) -> np.ndarray:
    m = np.array(a, dtype=object)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ToricError(f"expected a square matrix, got shape {m.shape}")
    return m


def det_int(a) -> int:
    """Exact determinant by cofactor expansion (small n only)."""
    m = as_int_matrix(a)
    n = m.shape[0]
    if n == 1:
        return m[0, 0]
    total = 0
    sign = 1
    for k in range(n):
        minor = np.delete(np.delete(m, 0, axis=0), k, axis=1)
        total += sign * m[0, k] * det_int(minor)
        sign = -sign
    return total


def adjugate(a) -> np.ndarray:
    """adj(A) with A @ adj(A) = det(A) * I."""
    m = as_int_matrix(a)
    n = m.shape[0]
    if n == 1:
        return np.array([[1]], dtype=object)
    adj = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            minor = np.delete(np.delete(m, i, axis=0), j, axis=1)
            adj[j, i] = (-1) ** (i + j) * det_int(minor)
    return adj


@dataclass
class SmithForm:
    """U @ A @ V = D with U, V unimodular and D = diag(d_1 | d_2 | ...)."""

    u: np.ndarray
    d: np.ndarray
    v: np.ndarray

    def diagonal(self) -> list[int]:
        return [self.d[i, i] for i in range(self.d.shape[0])]

    def quotient_invariants(self) -> list[int]:
        """Cyclic factors of Z^n / A Z^n, dropping trivial ones."""
        return [x for x in self.diagonal() if x != 1]


def smith_normal_form(a) -> SmithForm:
    m = as_int_matrix(a).copy()
    n = m.shape[0]
    u = np.eye(n, dtype=object)
    v = np.eye(n, dtype=object)

    def swap_rows(i, j):
        m[[i, j]] = m[[j, i]]
        u[[i, j]] = u[[j, i]]

    def swap_cols(i, j):
        m[:, [i, j]] = m[:, [j, i]]
        v[:, [i, j]] = v[:, [j, i]]

    for k in range(n):
        while True:
            # move a nonzero pivot of least magnitude to (k, k)
            best = None
            for i in range(k, n):
                for j in range(k, n):
                    if m[i, j] != 0 and (best is None or abs(m[i, j]) < abs(m[best[0], best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(k, best[0])
            swap_cols(k, best[1])
            done = True
            for i in range(k + 1, n):
                q = m[i, k] // m[k, k]
                if q != 0:
                    m[i] -= q * m[k]
                    u[i] -= q * u[k]
                if m[i, k] != 0:
                    done = False
            for j in range(k + 1, n):
                q = m[k, j] // m[k, k]
                if q != 0:
                    m[:, j] -= q * m[:, k]
                    v[:, j] -= q * v[:, k]
                if m[k, j] != 0:
                    done = False
            if not done:
                continue
            # enforce divisibility: fold any non-multiple into column k
            offender = None
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    if m[i, j] % m[k, k] != 0:
                        offender = j
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            m[:, k] += m[:, offender]
            v[:, k] += v[:, offender]
        if m[k, k] < 0:
            m[k] = -m[k]
            u[k] = -u[k]
    form = SmithForm(u, m, v)
    assert np.array_equal(u @ as_int_matrix(a) @ v, m)
    assert abs(det_int(u)) == 1 and abs(det_int(v)) == 1
    diag = form.diagonal()
    for x, y in zip(diag, diag[1:]):
        assert y == 0 or (x != 0 and y % x == 0)
    return form


Vec2 = tuple[int, int]


def primitive(vec: Vec2) -> Vec2:
    g = gcd(vec[0], vec[1])
    if g == 0:
        raise ToricError("zero vector has no primitive representative")
    return (vec[0] // g, vec[1] // g)


def dual_cone_2d(rows: tuple[Vec2, Vec2]) -> tuple[Vec2, Vec2]:
    """Primitive ray generators of {m : <m, row_i> >= 0 for both rows}.

    Each returned ray pairs to zero against one row and strictly
    positively against the other.
    """
    r1, r2 = rows
    if r1[0] * r2[1] - r1[1] * r2[0] == 0:
        raise ToricError("rows are linearly dependent")

    def perp_ray(ortho_to: Vec2, positive_on: Vec2) -> Vec2:
        cand = primitive((-ortho_to[1], ortho_to[0]))
        pairing = cand[0] * positive_on[0] + cand[1] * positive_on[1]
        if pairing < 0:
            cand = (-cand[0], -cand[1])
        return cand

    return (perp_ray(r2, r1), perp_ray(r1, r2))


def _in_cone(point: Vec2, u1: Vec2, u2: Vec2) -> bool:
    """Membership in cone(u1, u2), decided by two cross-product signs."""
    d = u1[0] * u2[1] - u1[1] * u2[0]
    alpha = point[0] * u2[1] - point[1] * u2[0]
    beta = u1[0] * point[1] - u1[1] * point[0]
    if d < 0:
        alpha, beta = -alpha, -beta
    return alpha >= 0 and beta >= 0


def hirzebruch_jung_digits(a: int, b: int) -> list[int]:
    """Digits c_i of a/b = c_1 - 1/(c_2 - 1/(...)), for 0 < b <= a."""
    digits = []
    while b > 0:
        c = -(-a // b)  # ceil
        digits.append(c)
        a, b = b, c * b - a
    return digits


def _hj_generator_count(u1: Vec2, u2: Vec2) -> int:
    """Hilbert-basis size of cone(u1, u2) via the Hirzebruch-Jung expansion.

    Normalizes the cone to the form cone((0,1), (d,-k)) by a unimodular
    map; the basis is then the two rays plus the rays of the minimal
    resolution, one per digit of the HJ expansion of d/k.
    """
    d = abs(u1[0] * u2[1] - u1[1] * u2[0])
    if d == 1:
        return 2
    # unimodular M with M @ u1 = (0, 1): first row kills u1, second pairs to 1
    x, y = u1
    s, t = _bezout(x, y)
    m = ((-y, x), (s, t))
    w = (m[0][0] * u2[0] + m[0][1] * u2[1], m[1][0] * u2[0] + m[1][1] * u2[1])
    if w[0] < 0:
        # compose with (x, y) -> (-x, y), which fixes (0, 1)
        w = (-w[0], w[1])
    assert w[0] == d
    k = (-w[1]) % d
    assert gcd(d, k) == 1
    return len(hirzebruch_jung_digits(d, k)) + 2


def _bezout(x: int, y: int) -> tuple[int, int]:
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


@dataclass(frozen=True)
class SemigroupBasis:
    """Minimal generators of the lattice-point semigroup of a 2D cone."""

    generators: tuple[Vec2, ...]
    rays: tuple[Vec2, Vec2]

    def __len__(self) -> int:
        return len(self.generators)


@functools.lru_cache(maxsize=None)
def hilbert_basis_2d(rays: tuple[Vec2, Vec2]) -> SemigroupBasis:
    """Minimal generating set of cone(rays) ∩ Z^2.

    Brute-force enumeration of lattice points in the fundamental
    parallelogram followed by irreducibility filtering, cross-checked
    against the Hirzebruch-Jung generator count.
    """
    u1, u2 = primitive(rays[0]), primitive(rays[1])
    d = u1[0] * u2[1] - u1[1] * u2[0]
    if d == 0:
        raise ToricError("cone is not strictly convex (parallel rays)")
    dd = abs(d)
    candidates = {u1, u2}
    for a in range(dd + 1):
        for b in range(dd + 1):
            px = a * u1[0] + b * u2[0]
            py = a * u1[1] + b * u2[1]
            if px % dd == 0 and py % dd == 0 and (a, b) != (0, 0):
                candidates.add((px // dd, py // dd))
    basis = []
    for p in candidates:
        reducible = False
        for q in candidates:
            if q == p:
                continue
            diff = (p[0] - q[0], p[1] - q[1])
            if diff != (0, 0) and _in_cone(diff, u1, u2):
                reducible = True
                break
        if not reducible:
            basis.append(p)
    basis.sort()
    expected = _hj_generator_count(u1, u2)
    if len(basis) != expected:  # pragma: no cover - guards the enumeration
        raise AssertionError(
            f"Hilbert basis size {len(basis)} disagrees with HJ count {expected}")
    return SemigroupBasis(tuple(basis), (u1, u2))


def _extreme_rays(gens: tuple[Vec2, ...]) -> tuple[Vec2, Vec2]:
    """The pair of generators spanning the cone containing all the others."""
    for u1 in gens:
        for u2 in gens:
            if u1[0] * u2[1] - u1[1] * u2[0] == 0:
                continue
            if all(_in_cone(g, u1, u2) for g in gens):
                return u1, u2
    raise ToricError("generators do not span a strictly convex 2D cone")


def _ray_semigroup_contains(gens: tuple[Vec2, ...], point: Vec2) -> bool:
    prim = primitive(gens[0])
    if point[0] * prim[1] - point[1] * prim[0] != 0:
        return False
    scale = point[0] // prim[0] if prim[0] != 0 else point[1] // prim[1]
    if scale <= 0 or (prim[0] * scale, prim[1] * scale) != point:
        return False
    lengths = sorted({g[0] // prim[0] if prim[0] != 0 else g[1] // prim[1] for g in gens})
    if any(l <= 0 for l in lengths):
        return False
    reachable = {0}
    for n in range(1, scale + 1):
        if any(n - l in reachable for l in lengths):
            reachable.add(n)
    return scale in reachable


def semigroup_contains(gens: tuple[Vec2, ...], point: Vec2) -> bool:
    """Bounded search: is point a nonnegative integer combination of gens?

    The search is confined to the cone spanned by the generators and
    graded by a functional strictly positive there, so it terminates.
    """
    if point == (0, 0):
        return True
    if all(g[0] * gens[0][1] - g[1] * gens[0][0] == 0 for g in gens):
        # degenerate rank-1 case: combinations live on a half-line
        return _ray_semigroup_contains(gens, point)
    u1, u2 = _extreme_rays(gens)
    d1, d2 = dual_cone_2d((u1, u2))
    phi = (d1[0] + d2[0], d1[1] + d2[1])
    memo: dict[Vec2, bool] = {}

    def rec(p: Vec2) -> bool:
        if p == (0, 0):
            return True
        if p in memo:
            return memo[p]
        memo[p] = False
        for g in gens:
            diff = (p[0] - g[0], p[1] - g[1])
            if not _in_cone(diff, u1, u2):
                continue
            if phi[0] * diff[0] + phi[1] * diff[1] >= phi[0] * p[0] + phi[1] * p[1]:
                continue
            if rec(diff):
                memo[p] = True
                return True
        return memo[p]

    return rec(point)


@dataclass(frozen=True)
class RegularityVerdict:
    regular: bool
    embedding_dim: int
    det: int

    @property
    def label(self) -> str:
        return "Regular" if self.regular else "Singular"


def below_ring_regularity(a) -> RegularityVerdict:
    """Regularity of the ring attached to the dual cone of A's rows.

    Regular iff the primitive-row matrix has determinant +-1; the
    embedding dimension is the Hilbert-basis size of the dual semigroup.
    The two criteria must agree (r = 2 iff regular).
    """
    m = as_int_matrix(a)
    if m.shape != (2, 2):
        raise ToricError("expected a 2x2 matrix")
    d = det_int(m)
    if d == 0:
        raise ToricError("matrix is singular")
    rows = (primitive((m[0, 0], m[0, 1])), primitive((m[1, 0], m[1, 1])))
    prim_det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    rays = dual_cone_2d(rows)
    r = len(hilbert_basis_2d(rays))
    regular = abs(prim_det) == 1
    if regular != (r == 2):  # pragma: no cover - the two criteria are equivalent
        raise AssertionError("determinant and Hilbert-basis criteria disagree")
    return RegularityVerdict(regular, r, d)


@dataclass(frozen=True)
class PowerIdentityCertificate:
    """Witness that each adjugate row sends the parameters below onto a
    pure d-th power of a single parameter above."""

    det: int
    rows: tuple[tuple[int, ...], ...]


def adjugate_power_identity(a) -> PowerIdentityCertificate:
    """Certify adj(A) @ A = det(A) * I at the exponent level.

    Row i of the product is det(A) times the i-th unit vector: the
    monomial with exponents row_i(adj A) in the parameters below equals
    the det(A)-th power of the single parameter above indexed by i.
    """
    m = as_int_matrix(a)
    d = det_int(m)
    if d == 0:
        raise ToricError("matrix is singular")
    adj = adjugate(m)
    prod = adj @ m
    n = m.shape[0]
    rows = []
    for i in range(n):
        for j in range(n):
            expected = d if i == j else 0
            if prod[i, j] != expected:  # pragma: no cover - self-check path
                raise AssertionError(f"row {i} fails: entry {j} is {prod[i, j]}")
        rows.append(tuple(int(x) for x in adj[i]))
    return PowerIdentityCertificate(int(d), tuple(rows))
