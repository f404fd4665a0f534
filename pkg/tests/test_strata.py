from fractions import Fraction

import pytest

from k3walls import (
    DegreeCase,
    DomainError,
    MukaiVector,
    StabilityParams,
    StabilityType,
    SurfaceParams,
    Verdict,
    balanced_nonempty,
    ell_decompose,
    ell_value,
    enumerate_types,
    rho,
    rho_k,
    square,
    stratum_dimension,
    validate_type,
    wall_sequence,
)
from k3walls.strata import degree_case_for, residual_vector

P52 = SurfaceParams(5, 2)
V53 = MukaiVector(0, 1, 0, -1)  # genus 5, degree 3


def mk(*pairs):
    return StabilityType(tuple(pairs))


def balanced_from(r, ell):
    dec = ell_decompose(r, ell)
    pairs = ([(dec.e + 1, dec.m1)] if dec.m1 else []) + [(dec.e, dec.m2)]
    return mk(*pairs)


def test_type_validation():
    with pytest.raises(DomainError, match="ill-formed"):
        mk((0, 2), (1, 1))
    with pytest.raises(DomainError, match="ill-formed"):
        mk((1, 0))
    with pytest.raises(DomainError, match="ill-formed"):
        mk((-1, 1))


def test_validate_type_examples():
    t = mk((1, 1), (0, 1))
    assert validate_type(t, 1) is True
    assert validate_type(t, 1, refined=True) is False
    assert validate_type(StabilityType(), -1) is True
    assert validate_type(StabilityType(), 0) is False
    assert validate_type(mk((0, 1)), 1) is False  # cannot carry two sections


def test_enumerate_types_examples():
    items = enumerate_types(P52, V53, 1).items
    assert [t.to_list() for t in items] == [[[0, 2]], [[1, 1]], [[1, 1], [0, 1]]]
    assert [t.to_list() for t in enumerate_types(P52, V53, 0).items] == [[[0, 1]]]
    refined = enumerate_types(P52, V53, 1, refined=True).items
    assert [t.to_list() for t in refined] == [[[0, 2]], [[1, 1]]]
    empty = enumerate_types(P52, V53, -1).items
    assert len(empty) == 1 and empty[0].p == 0


def test_enumerate_types_canonical_order():
    items = enumerate_types(P52, V53, 3).items
    keys = [t.sort_key() for t in items]
    assert keys == sorted(keys)


def test_enumerate_types_shape_check():
    with pytest.raises(DomainError):
        enumerate_types(P52, MukaiVector(0, 2, 0, -1), 1)
    with pytest.raises(DomainError):
        enumerate_types(P52, MukaiVector(0, 1, 1, -1), 1)


def test_stratum_dimension_examples():
    assert stratum_dimension(P52, V53, mk((0, 2))) == 4
    assert stratum_dimension(P52, V53, mk((1, 1))) == 6
    assert stratum_dimension(P52, V53, mk((1, 1), (0, 1))) == 2


def test_stratum_dimension_identity():
    for g in range(3, 12):
        for k in range(2, 6):
            params = SurfaceParams(g, k)
            for d in range(0, g):
                v = MukaiVector(0, 1, 0, 1 + d - g)
                for r in range(0, 5):
                    for ell in range(max(0, r + 1 - k), r + 1):
                        t = balanced_from(r, ell)
                        assert stratum_dimension(params, v, t) == g + rho(g, r - ell, d) - ell * k


def test_stratum_dimension_general_identity_and_bound():
    for d in (2, 3, 4):
        v = MukaiVector(0, 1, 0, 1 + d - 5)
        for r in range(0, 4):
            for t in enumerate_types(P52, v, r).items:
                ell = ell_value(t, r)
                bound = 5 + rho(5, r - ell, d) - ell * 2
                dim = stratum_dimension(P52, v, t)
                assert dim <= bound
                if t.weighted_sections() == r + 1:
                    assert dim == bound


def test_balanced_nonempty_examples():
    res = balanced_nonempty(P52, V53, [(2, 0), (1, 1)])
    assert res.verdict is Verdict.NON_EMPTY and res.square == 0
    res = balanced_nonempty(P52, V53, [(3, 0), (2, 1)])
    assert res.verdict is Verdict.EMPTY_BY_NECESSITY and res.square == -4
    # square dominates the multiplicity bound: with m1+m2 = 3 > k+r0 = 2 the
    # residual square is -24, so the verdict is still forced emptiness
    res = balanced_nonempty(P52, V53, [(1, 2), (0, 1)])
    assert res.verdict is Verdict.EMPTY_BY_NECESSITY and res.square == -24


def test_balanced_nonempty_unknown():
    # square fine, multiplicity bound violated: genuinely undecided
    params = SurfaceParams(20, 2)
    v = MukaiVector(0, 1, 0, -1)  # degree 18
    res = balanced_nonempty(params, v, [(1, 0), (0, 3)])
    assert res.verdict is Verdict.UNKNOWN
    assert res.square >= -2


def test_balanced_nonempty_genus_minus_one():
    params = SurfaceParams(10, 3)
    v = MukaiVector(0, 1, 0, 0)  # rank 0, ch2 = 0
    assert degree_case_for(v) is DegreeCase.GENUS_MINUS_ONE
    res = balanced_nonempty(params, v, [(1, 0), (0, 2)], DegreeCase.GENUS_MINUS_ONE)
    assert res.verdict is Verdict.NON_EMPTY  # m1+m2 = 2 < k = 3
    res = balanced_nonempty(params, v, [(1, 0), (0, 3)], DegreeCase.GENUS_MINUS_ONE)
    assert res.square == 0
    assert res.verdict is Verdict.UNKNOWN  # m1+m2 = 3 is not strictly below k


def test_balanced_nonempty_errors():
    with pytest.raises(DomainError, match="non-balanced"):
        balanced_nonempty(P52, V53, [(3, 1), (1, 1)])
    with pytest.raises(DomainError):
        balanced_nonempty(P52, MukaiVector(1, 1, 0, 0), [(1, 0), (0, 1)])


def test_verdict_matches_square_filter():
    for g in range(3, 9):
        for k in range(2, 5):
            params = SurfaceParams(g, k)
            for d in range(1, g):
                v = MukaiVector(0, 1, 0, 1 + d - g)
                for r in range(0, 4):
                    kept = set(enumerate_types(params, v, r, square_filtered=True).items)
                    for t in enumerate_types(params, v, r).items:
                        if len(t.pairs) > 2 or (
                            len(t.pairs) == 2 and t.pairs[0][0] != t.pairs[1][0] + 1
                        ):
                            continue
                        res = balanced_nonempty(params, v, t, degree_case_for(v))
                        assert (t not in kept) == (res.verdict is Verdict.EMPTY_BY_NECESSITY)


def test_nonexistence_propagation():
    for g in range(3, 9):
        for k in range(2, 6):
            params = SurfaceParams(g, k)
            for d in range(1, g):
                for r in range(0, 4):
                    value, _ = rho_k(g, k, r, d)
                    if value >= 0:
                        continue
                    v = MukaiVector(0, 1, 0, 1 + d - g)
                    for t in enumerate_types(params, v, r).items:
                        ell = ell_value(t, r)
                        assert rho(g, r - ell, d) - ell * k < 0


def test_wall_sequence_examples():
    sp = StabilityParams(SurfaceParams(3, 2), Fraction(1, 10))
    v = MukaiVector(0, 1, 0, -1)
    walls = wall_sequence(sp, v, mk((1, 1)))
    assert [w.w for w in walls] == [Fraction(25, 132)]
    walls = wall_sequence(sp, v, mk((0, 1)))
    assert walls[0].kind == "origin_ray" and walls[0].w == 0
    walls = wall_sequence(sp, v, mk((1, 1), (0, 1)))
    assert [w.w for w in walls] == [Fraction(25, 132), Fraction(0)]
    assert residual_vector(sp.surface, v, mk((1, 1))) == MukaiVector(-1, 1, -1, -2)


def test_wall_sequence_non_monotone():
    sp = StabilityParams(SurfaceParams(3, 2), Fraction(9, 10))
    with pytest.raises(DomainError, match="non-monotone"):
        wall_sequence(sp, MukaiVector(0, 1, 0, -1), mk((2, 2), (1, 1)))


def test_wall_sequence_shape_errors():
    sp = StabilityParams(SurfaceParams(3, 2), Fraction(1, 10))
    with pytest.raises(DomainError):
        wall_sequence(sp, MukaiVector(0, 1, 0, 1), mk((1, 1)))
    with pytest.raises(DomainError):
        wall_sequence(sp, MukaiVector(0, 2, 0, -1), mk((1, 1)))


def test_residual_square_meaning():
    # residual square of the full type equals the balanced witness square
    t = mk((1, 1), (0, 1))
    res = balanced_nonempty(P52, V53, t)
    assert res.square == square(P52, residual_vector(P52, V53, t))
