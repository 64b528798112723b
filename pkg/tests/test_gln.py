from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jkvkit.gln import (
    GLnCocharacter,
    NonSplitError,
    bruhat,
    central_cocharacter,
    charpoly,
    commutant_basis,
    eval_poly_matrix,
    in_parabolic,
    in_unipotent_radical,
    invariant_factors,
    is_semisimple_matrix,
    jkv_gln,
    jordan_chevalley,
    levi_part,
    limit_conj,
    minpoly,
    rational_conjugacy,
    theorem_check_gln,
)
from jkvkit.polys import poly
from jkvkit.ratlinalg import is_zero_mat, qdet, qidentity, qinverse, qmat, qmul

F = Fraction


def m(rows):
    return qmat(rows)


def test_cocharacter_validation():
    # unsorted exponents are canonicalized by absorbing a permutation into g
    lam = GLnCocharacter(qidentity(2), (0, 1))
    assert lam.exponents == (1, 0)
    assert lam.g == m([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        GLnCocharacter(m([[1, 0], [2, 0]]), (1, 0))  # singular


def test_limit_conj_examples():
    lam = GLnCocharacter(qidentity(2), (1, 0))
    assert limit_conj(lam, m([[1, 1], [0, 1]])) == qidentity(2)
    lam2 = GLnCocharacter(qidentity(2), (1, -1))
    assert limit_conj(lam2, m([[0, 1], [0, 0]])) == m([[0, 0], [0, 0]])
    lam3 = central_cocharacter(2, 5)
    x = m([[3, 4], [5, 6]])
    assert limit_conj(lam3, x) == x
    # nonexistence: nonzero entry of negative weight
    assert limit_conj(lam, m([[1, 0], [1, 1]])) is None


def test_in_parabolic_examples():
    lam = GLnCocharacter(qidentity(2), (1, 0))
    assert in_parabolic(lam, qidentity(2))
    assert in_parabolic(lam, m([[1, 5], [0, 2]]))
    assert not in_parabolic(lam, m([[1, 0], [5, 2]]))
    with pytest.raises(ValueError):
        in_parabolic(lam, m([[1, 1], [1, 1]]))


def test_levi_part_examples():
    lam = GLnCocharacter(qidentity(2), (1, 0))
    assert levi_part(lam, m([[2, 7], [0, 3]])) == m([[2, 0], [0, 3]])
    assert in_unipotent_radical(lam, m([[1, 9], [0, 1]]))
    with pytest.raises(ValueError):
        levi_part(lam, m([[1, 0], [5, 2]]))


def test_levi_part_is_homomorphism():
    lam = GLnCocharacter(m([[1, 1], [0, 1]]), (2, -1))
    p1 = qmul(qmul(lam.g, m([[2, 5], [0, 1]])), lam.g_inv)
    p2 = qmul(qmul(lam.g, m([[1, -3], [0, 4]])), lam.g_inv)
    assert levi_part(lam, qmul(p1, p2)) == qmul(levi_part(lam, p1), levi_part(lam, p2))


def test_bruhat_examples():
    g = m([[2, 1], [0, 3]])
    p, w, u = bruhat(g)
    assert (p, w, u) == (g, qidentity(2), qidentity(2))
    g = m([[0, 1], [1, 0]])
    p, w, u = bruhat(g)
    assert p == qidentity(2) and w == g and u == qidentity(2)
    g = m([[1, 0], [1, 1]])
    p, w, u = bruhat(g)
    assert p == m([[-1, 1], [0, 1]])
    assert w == m([[0, 1], [1, 0]])
    assert u == m([[1, 1], [0, 1]])
    assert qmul(qmul(p, w), u) == g


@settings(max_examples=100, deadline=None)
@given(
    st.integers(1, 5).flatmap(
        lambda n: st.lists(st.integers(-5, 5), min_size=n * n, max_size=n * n)
    )
)
def test_bruhat_soundness_random(entries):
    import math

    from hypothesis import assume

    n = math.isqrt(len(entries))
    g = m([entries[i * n : (i + 1) * n] for i in range(n)])
    assume(qdet(g) != 0)
    p, w, u = bruhat(g)
    assert qmul(qmul(p, w), u) == g
    for i in range(n):
        for j in range(i):
            assert p[i][j] == 0
            assert u[i][j] == 0
        assert u[i][i] == 1
    perm = [row.index(F(1)) for row in w]
    assert sorted(perm) == list(range(n))
    assert all(x in (0, 1) for row in w for x in row)


def test_charpoly_and_minpoly():
    x = m([[2, 1], [0, 2]])
    assert charpoly(x) == poly([4, -4, 1])
    assert minpoly(x) == poly([4, -4, 1])
    d = m([[2, 0], [0, 2]])
    assert minpoly(d) == poly([-2, 1])
    assert charpoly(d) == poly([4, -4, 1])


def test_is_semisimple_matrix_examples():
    assert is_semisimple_matrix(m([[1, 0], [0, 2]]))
    assert not is_semisimple_matrix(m([[0, 1], [0, 0]]))
    assert is_semisimple_matrix(m([[0, 1], [-1, 0]]))  # irrational spectrum, still semisimple


def test_jordan_chevalley_examples():
    x = m([[1, 0], [0, 2]])
    s, n, p = jordan_chevalley(x)
    assert s == x and is_zero_mat(n)
    x = m([[2, 1], [0, 2]])
    s, n, p = jordan_chevalley(x)
    assert s == m([[2, 0], [0, 2]])
    assert n == m([[0, 1], [0, 0]])
    assert eval_poly_matrix(p, x) == s
    x = m([[0, 1], [-1, 0]])
    s, n, p = jordan_chevalley(x)
    assert s == x and is_zero_mat(n)


def test_jordan_chevalley_properties_nontrivial():
    h = m([[1, 2, 0], [0, 1, 1], [1, 0, 1]])
    j = m([[3, 1, 0], [0, 3, 0], [0, 0, -1]])
    x = qmul(qmul(h, j), qinverse(h))
    s, n, p = jordan_chevalley(x)
    s_true = qmul(qmul(h, m([[3, 0, 0], [0, 3, 0], [0, 0, -1]])), qinverse(h))
    assert s == s_true
    assert qmul(s, n) == qmul(n, s)
    assert is_zero_mat(qmul(qmul(n, n), n))
    assert is_semisimple_matrix(s)
    assert eval_poly_matrix(p, x) == s
    # conjugation equivariance
    c = m([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    s2, n2, _ = jordan_chevalley(qmul(qmul(c, x), qinverse(c)))
    assert s2 == qmul(qmul(c, s), qinverse(c))
    assert n2 == qmul(qmul(c, n), qinverse(c))


def test_invariant_factors_classify():
    x = m([[0, 1], [0, 0]])
    y = m([[0, 2], [0, 0]])
    assert invariant_factors(x) == invariant_factors(y)
    z = m([[0, 0], [0, 0]])
    assert invariant_factors(x) != invariant_factors(z)
    # invariant factors multiply to the characteristic polynomial
    import math

    from jkvkit.polys import poly_mul

    h = m([[1, 3], [1, 4]])
    w = qmul(qmul(h, m([[5, 0], [0, 5]])), qinverse(h))
    facs = invariant_factors(w)
    prod = poly([1])
    for f in facs:
        prod = poly_mul(prod, f)
    assert prod == charpoly(w)


def test_rational_conjugacy_examples():
    x = m([[0, 1], [0, 0]])
    assert rational_conjugacy(x, x) is not None
    y = m([[0, 2], [0, 0]])
    g = rational_conjugacy(x, y)
    assert g is not None
    assert qmul(qmul(g, x), qinverse(g)) == y
    assert rational_conjugacy(m([[0, 0], [0, 0]]), x) is None
    # conjugate over Q despite irrational eigenvalues
    a = m([[0, 2], [1, 0]])
    b = m([[0, 1], [2, 0]])
    g = rational_conjugacy(a, b)
    assert g is not None and qmul(g, a) == qmul(b, g)


def test_jkv_gln_examples():
    x = m([[0, 1], [0, 0]])
    cert = jkv_gln(x)
    assert is_zero_mat(cert.s) and cert.n == x and cert.ok
    assert limit_conj(cert.cocharacter, x) == cert.s

    x = m([[2, 1], [0, 2]])
    cert = jkv_gln(x)
    assert cert.s == m([[2, 0], [0, 2]]) and cert.ok

    x = m([[1, 0], [0, 5]])
    cert = jkv_gln(x)
    assert cert.s == x and cert.cocharacter.exponents == (0, 0) and cert.ok


def test_jkv_gln_non_split():
    # semisimple part has eigenvalues 1 +- sqrt(2) and a nilpotent block on top
    x = m(
        [
            [1, 2, 1, 0],
            [1, 1, 0, 1],
            [0, 0, 1, 2],
            [0, 0, 1, 1],
        ]
    )
    s, n, _ = jordan_chevalley(x)
    if is_zero_mat(n):
        pytest.skip("construction failed to produce a nilpotent part")
    with pytest.raises(NonSplitError):
        jkv_gln(x)


def test_theorem_check_gln_example():
    x = m([[1, 1], [0, 1]])
    lams = [
        GLnCocharacter(qidentity(2), (1, 0)),
        GLnCocharacter(qidentity(2), (0, -1)),
        central_cocharacter(2),
    ]
    report = theorem_check_gln(x, lams)
    assert report.ok
    rows = {r.cocharacter.exponents: r for r in report.rows}
    assert rows[(1, 0)].semisimple and rows[(1, 0)].witness is not None
    assert rows[(0, -1)].semisimple
    assert rows[(0, 0)].exists and not rows[(0, 0)].semisimple


def test_commutant_contains_polynomials():
    x = m([[1, 2], [3, 4]])
    basis = commutant_basis(x, x)
    assert any(qdet(b) != 0 for b in basis)
    for b in basis:
        assert qmul(b, x) == qmul(x, b)
