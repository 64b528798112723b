"""GL_n over the rationals acting on n x n matrices by conjugation.

Cocharacters are t |-> g diag(t^a_1, ..., t^a_n) g^-1 with integer
exponents; limits, parabolic membership, Levi projections, Bruhat
factorization, exact Jordan-Chevalley decomposition, and rational
conjugacy certificates are all computed without ever leaving the
rationals.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import polys
from .polys import (
    Poly,
    degree,
    monic,
    poly,
    poly_compose_mod,
    poly_derivative,
    poly_divmod,
    poly_gcd,
    poly_invmod,
    poly_mod,
    poly_sub,
    rational_roots,
    squarefree_part,
)
from .ratlinalg import (
    QMat,
    QVec,
    is_zero_mat,
    kernel_basis,
    qdet,
    qidentity,
    qinverse,
    qmat,
    qmat_vec,
    qmul,
    qrank,
    qsub,
    qzeros,
    solve_right,
)

_WITNESS_SEED = 0x5EED


class NonSplitError(ValueError):
    """The semisimple part has irrational eigenvalues; no separating
    integer-exponent cocharacter exists over the rationals."""


@dataclass(frozen=True)
class GLnCocharacter:
    g: QMat
    exponents: tuple[int, ...]
    g_inv: QMat = field(init=False, compare=False)

    def __post_init__(self):
        gm = qmat(self.g)
        exps = tuple(int(e) for e in self.exponents)
        if len(gm) != len(exps):
            raise ValueError("exponent count must match the matrix size")
        if list(exps) != sorted(exps, reverse=True):
            # canonical form: sort the exponents and absorb the reordering
            # into g by a permutation (stable, so still deterministic)
            order = sorted(range(len(exps)), key=lambda j: (-exps[j], j))
            perm = tuple(
                tuple(Fraction(1) if i == order[j] else Fraction(0) for j in range(len(exps)))
                for i in range(len(exps))
            )
            gm = qmul(gm, perm)
            exps = tuple(exps[j] for j in order)
        object.__setattr__(self, "g", gm)
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "g_inv", qinverse(gm))

    @property
    def n(self) -> int:
        return len(self.exponents)


def central_cocharacter(n: int, weight: int = 0) -> GLnCocharacter:
    return GLnCocharacter(qidentity(n), (weight,) * n)


def _graded_filter(lam: GLnCocharacter, y: QMat, keep) -> QMat:
    e = lam.exponents
    return tuple(
        tuple(y[i][j] if keep(e[i] - e[j]) else Fraction(0) for j in range(lam.n))
        for i in range(lam.n)
    )


def limit_conj(lam: GLnCocharacter, x: QMat) -> QMat | None:
    """Limit of lam(t) X lam(t)^-1 as t -> 0, or None.

    In the lam-adapted basis the (i, j) entry scales by t^(a_i - a_j), so the
    limit exists iff all negative-weight entries vanish, and equals the
    block-diagonal (weight-zero) part conjugated back.
    """
    x = qmat(x)
    if len(x) != lam.n:
        raise ValueError("shape mismatch")
    y = qmul(qmul(lam.g_inv, x), lam.g)
    e = lam.exponents
    for i in range(lam.n):
        for j in range(lam.n):
            if e[i] < e[j] and y[i][j] != 0:
                return None
    z = _graded_filter(lam, y, lambda w: w == 0)
    return qmul(qmul(lam.g, z), lam.g_inv)


def in_parabolic(lam: GLnCocharacter, h: QMat) -> bool:
    """Membership in P(lam): block upper triangular in the exponent grading."""
    h = qmat(h)
    if qdet(h) == 0:
        raise ValueError("parabolic membership is only defined for invertible elements")
    y = qmul(qmul(lam.g_inv, h), lam.g)
    e = lam.exponents
    return all(
        y[i][j] == 0
        for i in range(lam.n)
        for j in range(lam.n)
        if e[i] < e[j]
    )


def levi_part(lam: GLnCocharacter, p: QMat) -> QMat:
    """The limit homomorphism on P(lam): block-diagonal part in the grading.

    It lands in the centralizer of lam's image; its kernel is exactly the
    unipotent radical of P(lam).
    """
    if not in_parabolic(lam, p):
        raise ValueError("element is outside the parabolic of this cocharacter")
    y = qmul(qmul(lam.g_inv, qmat(p)), lam.g)
    z = _graded_filter(lam, y, lambda w: w == 0)
    return qmul(qmul(lam.g, z), lam.g_inv)


def in_unipotent_radical(lam: GLnCocharacter, p: QMat) -> bool:
    return levi_part(lam, p) == qidentity(lam.n)


def bruhat(g: QMat) -> tuple[QMat, QMat, QMat]:
    """Factor an invertible matrix as p * w * u: p upper triangular, w a
    permutation, u upper unitriangular.

    Gaussian elimination scanning columns left to right, always pivoting on
    the lowest not-yet-used row with a nonzero entry; the result is unique
    given that rule.
    """
    g = qmat(g)
    n = len(g)
    if qdet(g) == 0:
        raise ValueError("Bruhat factorization needs an invertible matrix")
    a = [list(r) for r in g]
    p_inv = [list(r) for r in qidentity(n)]
    u_inv = [list(r) for r in qidentity(n)]
    used = [False] * n
    col_of_pivot_row: dict[int, int] = {}
    for j in range(n):
        r = max(i for i in range(n) if not used[i] and a[i][j] != 0)
        inv = 1 / a[r][j]
        a[r] = [x * inv for x in a[r]]
        p_inv[r] = [x * inv for x in p_inv[r]]
        # Entries above the pivot go into p (row operations); entries at
        # earlier pivot rows below it can only be removed on the u side.
        for i in range(r):
            if a[i][j] != 0:
                c = a[i][j]
                a[i] = [x - c * y for x, y in zip(a[i], a[r])]
                p_inv[i] = [x - c * y for x, y in zip(p_inv[i], p_inv[r])]
        for i in range(r + 1, n):
            if a[i][j] != 0:
                c = a[i][j]
                j2 = col_of_pivot_row[i]
                for k in range(n):
                    a[k][j] -= c * a[k][j2]
                    u_inv[k][j] -= c * u_inv[k][j2]
        used[r] = True
        col_of_pivot_row[r] = j
    w = qmat(a)
    p = qinverse(qmat(p_inv))
    u = qinverse(qmat(u_inv))
    assert qmul(qmul(p, w), u) == g
    return p, w, u


def charpoly(x: QMat) -> Poly:
    """Monic characteristic polynomial by the Faddeev-LeVerrier recursion."""
    x = qmat(x)
    n = len(x)
    coeffs = [Fraction(1)]  # leading first while building
    m = qidentity(n)
    for k in range(1, n + 1):
        am = qmul(x, m)
        c = -sum(am[i][i] for i in range(n)) / k
        coeffs.append(c)
        m = tuple(
            tuple(am[i][j] + (c if i == j else 0) for j in range(n)) for i in range(n)
        )
    return poly(list(reversed(coeffs)))


def _vec(x: QMat) -> QVec:
    return tuple(v for row in x for v in row)


def minpoly(x: QMat) -> Poly:
    """Monic minimal polynomial via the first linear dependency among powers."""
    x = qmat(x)
    n = len(x)
    powers = [qidentity(n)]
    for d in range(1, n + 1):
        powers.append(qmul(powers[-1], x))
        cols = tuple(zip(*[_vec(p) for p in powers]))
        ker = kernel_basis(qmat(cols))
        if ker:
            rel = ker[0]
            assert rel[d] != 0, "first dependency must involve the top power"
            return monic(poly(rel))
    raise AssertionError("a dependency must appear by the Cayley-Hamilton bound")


def is_semisimple_matrix(x: QMat) -> bool:
    """Squarefree minimal polynomial, the closed-orbit criterion in char 0."""
    m = minpoly(x)
    return degree(poly_gcd(m, poly_derivative(m))) == 0


def eval_poly_matrix(f: Poly, x: QMat) -> QMat:
    n = len(x)
    acc = qzeros(n, n)
    for c in reversed(f):
        acc = qmul(acc, x)
        if c:
            acc = tuple(
                tuple(acc[i][j] + (c if i == j else 0) for j in range(n))
                for i in range(n)
            )
    return acc


def jordan_chevalley(x: QMat) -> tuple[QMat, QMat, Poly]:
    """X = S + N with S semisimple, N nilpotent, both polynomials in X.

    Newton iteration on the squarefree part f of the minimal polynomial,
    performed in Q[t]/(minpoly): the eigenvalues are fixed points of the
    iteration, so f'(S_k) stays invertible and the nilpotent defect squares
    away each round.  Returns (S, N, p) with S = p(X).
    """
    x = qmat(x)
    n = len(x)
    m = minpoly(x)
    f = squarefree_part(m)
    fprime = poly_derivative(f)
    s_poly: Poly = polys.X
    for _ in range(n + 2):
        fs = poly_compose_mod(f, s_poly, m)
        if polys.is_zero(fs):
            break
        fps = poly_compose_mod(fprime, s_poly, m)
        inv = poly_invmod(fps, m)
        s_poly = poly_mod(poly_sub(s_poly, polys.poly_mul(fs, inv)), m)
    else:
        raise AssertionError("Newton iteration must converge within log2(n) steps")
    s = eval_poly_matrix(s_poly, x)
    nmat = qsub(x, s)
    return s, nmat, s_poly


def _poly_snf_diagonal(m: list[list[Poly]]) -> list[Poly]:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    size = min(rows, cols)
    t = 0
    while t < size:
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] and (piv is None or degree(m[i][j]) < degree(m[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        m[t], m[piv[0]] = m[piv[0]], m[t]
        for row in m:
            row[t], row[piv[1]] = row[piv[1]], row[t]
        while True:
            reduced = False
            for i in range(t + 1, rows):
                if m[i][t]:
                    q, _ = poly_divmod(m[i][t], m[t][t])
                    m[i] = [poly_sub(a, polys.poly_mul(q, b)) for a, b in zip(m[i], m[t])]
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
                        reduced = True
            if reduced:
                continue
            for j in range(t + 1, cols):
                if m[t][j]:
                    q, _ = poly_divmod(m[t][j], m[t][t])
                    for row in m:
                        row[j] = poly_sub(row[j], polys.poly_mul(q, row[t]))
                    if m[t][j]:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        reduced = True
            if reduced:
                continue
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if m[i][j] and poly_mod(m[i][j], m[t][t]):
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            m[t] = [polys.poly_add(a, b) for a, b in zip(m[t], m[bad])]
        t += 1
    return [monic(m[i][i]) for i in range(size)]


def invariant_factors(x: QMat) -> tuple[Poly, ...]:
    """Nonunit invariant factors of tI - X, in divisibility order.

    Two rational matrices are conjugate over Q exactly when these lists
    coincide (they classify the Frobenius normal form).
    """
    x = qmat(x)
    n = len(x)
    m = [
        [
            poly([-x[i][j]] + ([1] if i == j else []))
            for j in range(n)
        ]
        for i in range(n)
    ]
    diag = _poly_snf_diagonal(m)
    return tuple(f for f in diag if degree(f) >= 1)


def commutant_basis(x: QMat, y: QMat) -> list[QMat]:
    """Basis of the intertwiner space { M : M X = Y M }."""
    x, y = qmat(x), qmat(y)
    n = len(x)
    rows = []
    for i in range(n):
        for j in range(n):
            row = [Fraction(0)] * (n * n)
            for k in range(n):
                row[i * n + k] += x[k][j]
                row[k * n + j] -= y[i][k]
            rows.append(row)
    kern = kernel_basis(qmat(rows))
    return [tuple(tuple(v[i * n + j] for j in range(n)) for i in range(n)) for v in kern]


def _combination_iter(k: int, grid_top: int):
    for i in range(k):
        t = [0] * k
        t[i] = 1
        yield tuple(t)
    for i in range(2, k + 1):
        yield tuple([1] * i + [0] * (k - i))
    rng = random.Random(_WITNESS_SEED)
    for _ in range(50_000):
        yield tuple(rng.randint(-3, 3) for _ in range(k))
    # Exhaustive fallback: a degree-<= grid_top determinant cannot vanish on
    # the whole integer grid below, so this is guaranteed to terminate.
    yield from itertools.product(range(grid_top + 1), repeat=k)


def rational_conjugacy(x: QMat, y: QMat) -> QMat | None:
    """Invertible g with g X g^-1 = Y over Q, or None.

    Decision: identical invariant factor lists.  Witness: an invertible
    element of the intertwiner space, found deterministically and
    re-verified by multiplication.
    """
    x, y = qmat(x), qmat(y)
    if len(x) != len(y):
        raise ValueError("matrices must have equal size")
    if invariant_factors(x) != invariant_factors(y):
        return None
    basis = commutant_basis(x, y)
    assert basis, "conjugate matrices have nonzero intertwiners"
    n = len(x)
    for coeffs in _combination_iter(len(basis), n):
        g = qzeros(n, n)
        for c, b in zip(coeffs, basis):
            if c:
                g = tuple(
                    tuple(g[i][j] + c * b[i][j] for j in range(n)) for i in range(n)
                )
        if qdet(g) != 0:
            assert qmul(g, x) == qmul(y, g)
            return g
    raise AssertionError("an invertible intertwiner exists for conjugate matrices")


@dataclass
class GlnJkv:
    s: QMat
    n: QMat
    cocharacter: GLnCocharacter
    polynomial: Poly
    clauses: dict[str, bool]
    ok: bool


def _eigenbasis_cocharacter(s: QMat, nmat: QMat) -> GLnCocharacter:
    """Cocharacter commuting with s whose limit kills nmat.

    Columns are eigenvectors of s grouped by eigenvalue (ascending) and
    layered along the kernel flag of nmat inside each eigenspace, so nmat
    becomes strictly upper triangular; strictly decreasing exponents then
    give every nmat entry positive weight.
    """
    size = len(s)
    roots = rational_roots(minpoly(s))
    eigdim = 0
    columns: list[QVec] = []
    for mu in roots:
        shifted = qmat(
            tuple(
                tuple(s[i][j] - (mu if i == j else 0) for j in range(size))
                for i in range(size)
            )
        )
        basis = kernel_basis(shifted)
        if not basis:
            raise NonSplitError("claimed eigenvalue has no eigenvector")
        eigdim += len(basis)
        emat = qmat(tuple(zip(*basis)))  # columns span the eigenspace
        dim = len(basis)
        nb = qmat([qmat_vec(qmat(nmat), b) for b in basis])  # rows: n*b_i
        coords = []
        for row in nb:
            sol = solve_right(emat, row)
            assert sol is not None, "the nilpotent part preserves eigenspaces"
            coords.append(sol)
        m_small = qmat(tuple(zip(*coords)))  # matrix of nmat on the eigenspace
        chosen: list[QVec] = []
        power = qidentity(dim)
        j = 0
        while len(chosen) < dim:
            j += 1
            assert j <= dim, "the restricted nilpotent part must be nilpotent"
            power = qmul(power, m_small)
            for v in kernel_basis(power):
                if qrank(qmat(chosen + [v])) == len(chosen) + 1:
                    chosen.append(v)
        tmat = qmat(tuple(zip(*chosen)))
        block_cols = qmul(emat, tmat)
        for c in range(dim):
            columns.append(tuple(block_cols[r][c] for r in range(size)))
    if eigdim != size:
        raise NonSplitError("eigenspaces do not fill the space")
    g = qmat(tuple(zip(*columns)))
    exponents = tuple(range(size, 0, -1))
    return GLnCocharacter(g, exponents)


def jkv_gln(x: QMat) -> GlnJkv:
    """Classical Jordan-Chevalley decomposition with a limit certificate.

    Requires the semisimple part to split over Q (NonSplitError otherwise);
    rational_conjugacy and jordan_chevalley themselves have no such
    restriction.
    """
    x = qmat(x)
    size = len(x)
    s, nmat, p = jordan_chevalley(x)
    if is_zero_mat(nmat):
        lam = central_cocharacter(size)
    else:
        msp = minpoly(s)
        if len(rational_roots(msp)) != degree(msp):
            raise NonSplitError("unsupported: non-split semisimple part")
        lam = _eigenbasis_cocharacter(s, nmat)
    y = qmul(qmul(lam.g_inv, s), lam.g)
    e = lam.exponents
    clauses = {
        "commutes": all(
            y[i][j] == 0
            for i in range(size)
            for j in range(size)
            if e[i] != e[j]
        ),
        "limit": limit_conj(lam, x) == s,
        "s_semisimple": is_semisimple_matrix(s),
        "n_nilpotent": is_zero_mat(mat_power(nmat, size)),
        "n_limit_zero": limit_conj(lam, nmat) == qzeros(size, size),
        "centralizer": all(
            qmul(m, s) == qmul(s, m) for m in commutant_basis(x, x)
        ),
    }
    return GlnJkv(s, nmat, lam, p, clauses, all(clauses.values()))


def mat_power(x: QMat, k: int) -> QMat:
    out = qidentity(len(x))
    for _ in range(k):
        out = qmul(out, x)
    return out


@dataclass
class TheoremRow:
    cocharacter: GLnCocharacter
    exists: bool
    semisimple: bool
    witness: QMat | None


@dataclass
class GlnTheoremReport:
    reference: QMat | None
    rows: list[TheoremRow]
    ok: bool


def theorem_check_gln(x: QMat, samples: list[GLnCocharacter]) -> GlnTheoremReport:
    """All semisimple limits of x along the sampled cocharacters must be
    rationally conjugate to one reference semisimple limit."""
    x = qmat(x)
    try:
        reference = jkv_gln(x).s
    except NonSplitError:
        reference = None
    rows = []
    ok = True
    for lam in samples:
        val = limit_conj(lam, x)
        if val is None:
            rows.append(TheoremRow(lam, False, False, None))
            continue
        ss = is_semisimple_matrix(val)
        wit = None
        if ss:
            if reference is None:
                reference = val
            wit = rational_conjugacy(val, reference)
            if wit is None:
                ok = False
        rows.append(TheoremRow(lam, True, ss, wit))
    return GlnTheoremReport(reference, rows, ok)
