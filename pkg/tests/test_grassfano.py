import random
from fractions import Fraction

from heisencheck import golden
from heisencheck.grassfano import (
    KLEIN_PF_SIGN,
    PF_SEXTIC_SIGN,
    PluckerVector,
    golden_sextic,
    jacobian_quadrics,
    jacobian_system,
    klein_cubic,
    klein_from_hyperplanes,
    plucker_from_span,
    rank_stratum,
    span_from_plucker,
    theta_plucker_d11,
    v14_relation_residues,
    v14_relations_hold,
)
from heisencheck.heisenberg import s_matrix
from heisencheck.linalg import rank_fraction
from heisencheck.mpoly import SparsePoly, divide_exact
from heisencheck.pfaffian import rank2_plucker_matrix

X5 = [f"x{k}" for k in range(1, 6)]


def test_plucker_from_unit_span():
    rows = [[Fraction(1), 0, 0, 0, 0, 0], [0, Fraction(1), 0, 0, 0, 0]]
    p = plucker_from_span(rows)
    assert p[1, 2] == 1
    assert all(p[i, j] == 0 for i, j in p.pairs() if (i, j) != (1, 2))


def test_plucker_degenerate_span_is_zero():
    row = [Fraction(1), Fraction(2), 0, 0, 0, 0]
    p = plucker_from_span([row, row])
    assert all(p[i, j] == 0 for i, j in p.pairs())


def test_random_spans_satisfy_three_term_relations():
    rng = random.Random(23)
    for _ in range(100):
        rows = [[Fraction(rng.randint(-9, 9)) for _ in range(6)] for _ in range(2)]
        p = plucker_from_span(rows)
        assert p.is_decomposable()
        if any(v for v in p.coords.values()):
            back = span_from_plucker(p)
            stacked = [list(map(Fraction, r)) for r in rows + back]
            assert rank_fraction(stacked) == 2


def test_rank_strata():
    zero = [[Fraction(0)] * 6 for _ in range(6)]
    assert rank_stratum(zero) == 0
    rng = random.Random(77)
    a = [Fraction(rng.randint(-5, 5)) for _ in range(6)]
    b = [Fraction(rng.randint(-5, 5)) for _ in range(6)]
    single = rank2_plucker_matrix(a, b)
    assert rank_stratum(single) == 1
    c = [Fraction(rng.randint(-5, 5)) for _ in range(6)]
    d = [Fraction(rng.randint(-5, 5)) for _ in range(6)]
    double = [
        [single.entry(i, j) + rank2_plucker_matrix(c, d).entry(i, j) for j in range(6)]
        for i in range(6)
    ]
    assert rank_stratum(double) == 2


def test_sextic_is_pfaffian_up_to_recorded_sign():
    assert s_matrix(11).pfaffian() == golden_sextic().scale(PF_SEXTIC_SIGN)
    assert PF_SEXTIC_SIGN in (1, -1)
    assert len(golden_sextic().terms) == 15


def test_five_linear_relations_are_identities():
    assert v14_relations_hold() == "identity"
    assert all(r.is_zero() for r in v14_relation_residues())


def test_three_term_combination_divisible_by_sextic():
    # the (1,2,3,4) combination of kernel-map coordinates is f6 times the
    # complementary 2x2 sub-Pfaffian
    p = theta_plucker_d11()
    s = s_matrix(11)
    combo = p[1, 2] * p[3, 4] - p[1, 3] * p[2, 4] + p[1, 4] * p[2, 3]
    q = divide_exact(combo, golden_sextic())
    assert q is not None
    assert q == s.sub_pfaffian({0, 1, 2, 3}).scale(PF_SEXTIC_SIGN)


def test_all_quartic_coordinates():
    p = theta_plucker_d11()
    for key, poly in p.coords.items():
        if poly:
            assert poly.is_homogeneous() and poly.degree() == 4


def test_klein_matrix_and_cubic():
    M, B = klein_from_hyperplanes()
    expected = golden.load_matrix("klein_matrix.txt", [f"x{i}" for i in range(5)])
    assert M.rows() == expected
    assert M.entry(0, 1) == SparsePoly.variable(5, 0)
    assert M.entry(1, 5) == SparsePoly.variable(5, 2).scale(-1)
    assert B == klein_cubic().scale(KLEIN_PF_SIGN)


def test_klein_cubic_cyclic_invariance():
    K = klein_cubic()
    shifted = K.permute_variables([1, 2, 3, 4, 0])
    assert shifted == K


def test_klein_adjugate_display():
    M, _ = klein_from_hyperplanes()
    adj = M.adjugate()
    expected = golden.load_matrix("klein_adjugate.txt", [f"x{i}" for i in range(5)])
    assert adj.rows() == expected
    x = lambda i: SparsePoly.variable(5, i)
    assert adj.entry(0, 1) == x(0) * x(1)
    assert adj.entry(1, 2) == x(3) * x(3) + x(0) * x(4)
    assert adj.entry(2, 4) == x(0) * x(0) + x(1) * x(2)


def test_jacobian_system_matches_quadrics():
    matches = jacobian_system()
    assert sorted(idx for idx, _, _ in matches) == list(range(5))
    for _, scalar, _ in matches:
        assert scalar != 0


def test_euler_relation_and_partials():
    K = klein_cubic()
    euler = SparsePoly.zero(5)
    for i in range(5):
        euler = euler + SparsePoly.variable(5, i) * K.derivative(i)
    assert euler == K.scale(3)
    # d/dx1 of the cubic is x0^2 + 2 x1 x2
    assert K.derivative(1) == SparsePoly.monomial(5, [0, 0]) + SparsePoly.monomial(5, [1, 2], 2)


def test_jacobian_ideal_degreewise_equals_partials():
    K = klein_cubic()
    partials = [K.derivative(i) for i in range(5)]
    system = jacobian_quadrics()
    from heisencheck.mpoly import graded_monomials

    basis = {m: k for k, m in enumerate(graded_monomials(5, 2))}

    def rows(polys):
        out = []
        for f in polys:
            row = [Fraction(0)] * len(basis)
            for e, c in f.terms.items():
                row[basis[e]] = Fraction(c)
            out.append(row)
        return out

    r_part = rank_fraction(rows(partials))
    r_sys = rank_fraction(rows(system))
    r_both = rank_fraction(rows(partials + system))
    assert r_part == r_sys == r_both == 5


def test_plucker_vector_validation():
    import pytest

    with pytest.raises(ValueError):
        PluckerVector(3, {(0, 1): 1})
    p = PluckerVector(3, {(1, 2): Fraction(3)})
    assert p[2, 1] == -3


def test_sextic_evaluations():
    f6 = golden_sextic()
    # every term involves at least two distinct variables
    point = [Fraction(1), Fraction(0), Fraction(0), Fraction(0), Fraction(0)]
    assert f6.evaluate(point) == 0
    assert klein_cubic().evaluate(point) == 0
    x1 = SparsePoly.variable(5, 0)
    assert divide_exact(f6 * x1, f6) == x1


def test_kernel_map_at_several_rank4_points():
    # at points of the sextic hypersurface away from the curve, the
    # evaluated kernel-map matrix drops to rank 2
    from heisencheck.ffscan import canonical_points, rank_at_point
    from heisencheck.linalg import rank_gauss_mod

    q = 23
    p = theta_plucker_d11()
    pts = canonical_points(5, q)
    found = 0
    for row in pts[:: 831]:
        point = [int(c) for c in row]
        if rank_at_point(11, q, point) != 4:
            continue
        pmat = [
            [p[i, j].evaluate_mod(point, q) if i < j
             else ((-p[j, i].evaluate_mod(point, q)) % q if i > j else 0)
             for j in range(1, 7)]
            for i in range(1, 7)
        ]
        assert rank_gauss_mod(pmat, q) == 2
        found += 1
        if found >= 5:
            break
    assert found >= 3
