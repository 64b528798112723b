"""Independent brute-force oracles and seeded instance generators.

Oracles re-derive answers through machinery disjoint from the modules they
check (sharing only exact arithmetic).  Generators draw from a documented
Mersenne-Twister stream, so identical configs give identical instances.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .gln import GLnCocharacter
from .intlinalg import IntVec, pairing
from .polytope import WeightSet
from .ratlinalg import QMat, kernel_basis, qdet, qidentity, qinverse, qmat, qmul
from .torus import FiniteElement, FiniteGroup, RepVector, TorusRep

F = Fraction


@dataclass(frozen=True)
class FuzzConfig:
    seed: int = 42
    count: int = 100
    max_rank: int = 4
    max_points: int = 10
    coeff_bound: int = 5
    coord_bound: int = 9
    box: int = 3
    max_size: int = 4

    def __post_init__(self):
        for name in ("count", "max_rank", "max_points", "coeff_bound", "coord_bound", "box", "max_size"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")

    def rng(self) -> random.Random:
        return random.Random(self.seed)


# ---------------------------------------------------------------------------
# Oracles


def oracle_limit(lam: IntVec, v: RepVector) -> RepVector | None:
    """Re-derivation of the cocharacter limit: bucket the components by the
    symbolic exponent of t and read off the t -> 0 behavior."""
    if len(lam) != v.rank:
        raise ValueError("cocharacter rank mismatch")
    by_exponent: dict[int, dict] = {}
    for chi, coords in v.components.items():
        by_exponent.setdefault(pairing(lam, chi), {})[chi] = coords
    if any(e < 0 for e in by_exponent):
        return None
    return RepVector(v.rank, dict(by_exponent.get(0, {})))


def _positive_circuits(points):
    """(any circuit exists, union of circuit supports): a circuit is a
    support-minimal all-positive rational relation among the points."""
    m = len(points)
    union: set[int] = set()
    found = False
    for mask in range(1, 2**m):
        subset = [i for i in range(m) if mask >> i & 1]
        cols = qmat(tuple(zip(*[points[i] for i in subset])))
        kern = kernel_basis(cols)
        if len(kern) != 1:
            continue
        v = kern[0]
        if all(x > 0 for x in v) or all(x < 0 for x in v):
            found = True
            union.update(subset)
    return found, union


def oracle_relint(ws: WeightSet) -> bool:
    """Ground-truth relative-interior membership of the origin by solving the
    equality system on every candidate support subset (<= 6 points, rank <= 3)."""
    if len(ws.points) > 6 or ws.rank > 3:
        raise ValueError("oracle bounds exceeded: needs <= 6 points and rank <= 3")
    if not ws.points:
        return True
    pts = ws.sorted_points()
    found, union = _positive_circuits(pts)
    return found and union == set(range(len(pts)))


def oracle_in_hull(ws: WeightSet) -> bool:
    """Ground-truth hull membership of the origin, same bounds as oracle_relint."""
    if len(ws.points) > 6 or ws.rank > 3:
        raise ValueError("oracle bounds exceeded: needs <= 6 points and rank <= 3")
    if not ws.points:
        return False
    return _positive_circuits(ws.sorted_points())[0]


# ---------------------------------------------------------------------------
# Torus-model instance generation


def _random_fraction(rng: random.Random, bound: int) -> Fraction:
    return F(rng.randint(-bound, bound), rng.randint(1, bound))


def random_nonzero_fraction(rng: random.Random, bound: int) -> Fraction:
    return F(rng.choice([x for x in range(-bound, bound + 1) if x]), rng.randint(1, bound))


def _involution_matrix(rng: random.Random, rank: int):
    """Signed-permutation involution of the coordinate lattice."""
    idx = list(range(rank))
    rng.shuffle(idx)
    sigma = list(range(rank))
    signs = [1] * rank
    i = 0
    while i + 1 < len(idx):
        if rng.random() < 0.7:
            a, b = idx[i], idx[i + 1]
            sigma[a], sigma[b] = b, a
            s = rng.choice([1, -1])
            signs[a] = signs[b] = s
            i += 2
        else:
            signs[idx[i]] = rng.choice([1, -1])
            i += 1
    while i < len(idx):
        signs[idx[i]] = rng.choice([1, -1])
        i += 1
    mat = [[0] * rank for _ in range(rank)]
    for j in range(rank):
        mat[sigma[j]][j] = signs[j]
    return tuple(tuple(row) for row in mat)


def _apply_lattice(mat, chi):
    return tuple(sum(mat[i][j] * chi[j] for j in range(len(chi))) for i in range(len(chi)))


_INVOLUTORY_2D = (
    ((F(1), F(0)), (F(0), F(1))),
    ((F(-1), F(0)), (F(0), F(-1))),
    ((F(0), F(1)), (F(1), F(0))),
    ((F(1), F(0)), (F(0), F(-1))),
)


def _sample_finite_part(rng: random.Random, cfg: FuzzConfig, rank: int):
    """Order-2 group from a lattice involution, with cocycle-consistent blocks."""
    lattice = _involution_matrix(rng, rank)
    base = set()
    for _ in range(rng.randint(2, max(2, cfg.max_points // 2))):
        base.add(tuple(rng.randint(-cfg.coeff_bound, cfg.coeff_bound) for _ in range(rank)))
    weights = set()
    for chi in sorted(base):
        orbit = {chi, _apply_lattice(lattice, chi)}
        if len(weights | orbit) <= cfg.max_points:
            weights |= orbit
    weights = sorted(weights)
    dims = {}
    for chi in weights:
        partner = _apply_lattice(lattice, chi)
        if partner in dims:
            dims[chi] = dims[partner]
        else:
            dims[chi] = 1 if rng.random() < 0.8 else 2
    ident_blocks = {chi: qidentity(dims[chi]) for chi in weights}
    blocks = {}
    for chi in weights:
        if chi in blocks:
            continue
        partner = _apply_lattice(lattice, chi)
        d = dims[chi]
        if partner == chi:
            if d == 1:
                blocks[chi] = ((F(rng.choice([1, -1])),),)
            else:
                blocks[chi] = qmat(rng.choice(_INVOLUTORY_2D))
        else:
            if d == 1:
                c = rng.choice([F(1), F(2), F(1, 2), F(-1), F(3), F(-1, 3)])
                blocks[chi] = ((c,),)
                blocks[partner] = ((1 / c,),)
            else:
                while True:
                    m = qmat(
                        [[F(rng.randint(-2, 2)) for _ in range(d)] for _ in range(d)]
                    )
                    if qdet(m) != 0:
                        break
                blocks[chi] = m
                blocks[partner] = qinverse(m)
    ident = FiniteElement(
        tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank)),
        ident_blocks,
    )
    flip = FiniteElement(lattice, blocks)
    group = FiniteGroup((ident, flip), ((0, 1), (1, 0)))
    spaces = tuple((chi, dims[chi]) for chi in weights)
    return spaces, group


def sample_torus_instance(rng: random.Random, cfg: FuzzConfig):
    """A module (sometimes with an order-2 finite part) and a vector in it."""
    rank = rng.randint(1, cfg.max_rank)
    finite = None
    if rank >= 2 and rng.random() < 0.4:
        spaces, finite = _sample_finite_part(rng, cfg, rank)
    else:
        weights = set()
        for _ in range(rng.randint(3, cfg.max_points)):
            weights.add(tuple(rng.randint(-cfg.coeff_bound, cfg.coeff_bound) for _ in range(rank)))
        spaces = tuple(
            (chi, 1 if rng.random() < 0.85 else 2) for chi in sorted(weights)
        )
    rep = TorusRep(rank, spaces, finite)
    comps = {}
    for chi, d in rep.weight_spaces:
        if rng.random() < 0.6:
            comps[chi] = tuple(_random_fraction(rng, cfg.coord_bound) for _ in range(d))
    return rep, RepVector(rank, comps)


def sample_weight_set(rng: random.Random, max_rank: int = 3, max_points: int = 6):
    rank = rng.randint(1, max_rank)
    pts = set()
    for _ in range(rng.randint(1, max_points)):
        pts.add(tuple(rng.randint(-4, 4) for _ in range(rank)))
    return WeightSet(rank, tuple(sorted(pts)))


# ---------------------------------------------------------------------------
# Matrix-model instance generation


def _random_unimodular(rng: random.Random, n: int) -> QMat:
    m = [[F(1) if i == j else F(0) for j in range(n)] for i in range(n)]
    for _ in range(rng.randint(2 * n, 4 * n)):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        if c == 0:
            continue
        for k in range(n):
            m[i][k] += c * m[j][k]
    return qmat(m)


def sample_rational_spectrum_matrix(rng: random.Random, n: int, diagonalizable=False):
    """h * J * h^-1 from a random Jordan-form J and unimodular h.

    Returns (x, s_true, n_true): the construction is its own eigenvalue
    ground truth for the Jordan-Chevalley decomposition.
    """
    sizes = []
    left = n
    while left > 0:
        k = 1 if diagonalizable else rng.randint(1, left)
        sizes.append(k)
        left -= k
    j = [[F(0)] * n for _ in range(n)]
    d = [[F(0)] * n for _ in range(n)]
    pos = 0
    for k in sizes:
        ev = F(rng.randint(-5, 5))
        for t in range(k):
            j[pos + t][pos + t] = ev
            d[pos + t][pos + t] = ev
            if t + 1 < k:
                j[pos + t][pos + t + 1] = F(1)
        pos += k
    h = _random_unimodular(rng, n)
    hinv = qinverse(h)
    x = qmul(qmul(h, qmat(j)), hinv)
    s_true = qmul(qmul(h, qmat(d)), hinv)
    n_true = tuple(
        tuple(x[a][b] - s_true[a][b] for b in range(n)) for a in range(n)
    )
    return x, s_true, n_true


def sample_gln_matrix(rng: random.Random, n: int) -> QMat:
    return qmat([[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)])


def sample_invertible_matrix(rng: random.Random, n: int) -> QMat:
    while True:
        m = sample_gln_matrix(rng, n)
        if qdet(m) != 0:
            return m


def sample_gln_cocharacter(rng: random.Random, n: int) -> GLnCocharacter:
    g = _random_unimodular(rng, n)
    exps = sorted((rng.randint(-3, 3) for _ in range(n)), reverse=True)
    return GLnCocharacter(g, tuple(exps))


def sample_parabolic_element(rng: random.Random, lam: GLnCocharacter) -> QMat:
    """Invertible element of P(lam): block upper triangular in the lam basis."""
    n = lam.n
    e = lam.exponents
    while True:
        y = [
            [F(rng.randint(-2, 2)) if e[i] >= e[j] else F(0) for j in range(n)]
            for i in range(n)
        ]
        if qdet(qmat(y)) != 0:
            return qmul(qmul(lam.g, qmat(y)), lam.g_inv)


def sample_matrix_with_limit(rng: random.Random, lam: GLnCocharacter) -> QMat:
    """Matrix whose limit along lam exists: no negative-weight entries."""
    n = lam.n
    e = lam.exponents
    y = [
        [F(rng.randint(-4, 4)) if e[i] >= e[j] else F(0) for j in range(n)]
        for i in range(n)
    ]
    return qmul(qmul(lam.g, qmat(y)), lam.g_inv)
