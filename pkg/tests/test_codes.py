"""The cyclic code of the k = 6 set: dimension, BCH run, trace test."""

import pytest

from hyperrank import codes, diffset, gf2field as gf, residue, segre
from hyperrank.errors import CapacityError, DomainError

TRACE_COSETS = {
    3: (3,),
    5: (1, 5, 7),
    7: (3, 5, 9, 19, 29),
    9: (1, 5, 7, 9, 19, 25, 37, 77, 117),
}
DIMENSIONS = {3: 4, 5: 16, 7: 36, 9: 82, 11: 166, 13: 326}
BCH_RUNS = {3: 0, 5: 2, 7: 10, 9: 42, 11: 170}


def test_theta_poly():
    ds = diffset.segre_set(5)
    theta = codes.theta_poly(ds)
    assert theta.bit_count() == ds.size
    assert gf.poly_degree(theta) < ds.n
    assert codes.theta_poly(ds.elements, 5) == theta
    with pytest.raises(DomainError):
        codes.theta_poly((1, 2, 4))  # d is required for raw iterables


def test_code_info_d9():
    info = codes.code_info(9)
    assert (info.d, info.n) == (9, 511)
    assert info.dimension == 82
    assert gf.poly_degree(info.generator) == 511 - 82
    assert len(info.nonzero_exponents) == info.dimension
    assert 0 in info.nonzero_exponents


def test_dimension_formula():
    for d, dim in DIMENSIONS.items():
        info = codes.code_info(d)
        assert info.dimension == dim == 1 + segre.b6(d)
        assert gf.poly_degree(info.generator) + info.dimension == info.n


def test_nonzeros_close_under_doubling():
    info = codes.code_info(7)
    nonzero = set(info.nonzero_exponents)
    assert {2 * u % info.n for u in nonzero} == nonzero


def test_generator_divides_x_n_minus_1():
    for d in (3, 5, 7, 9):
        info = codes.code_info(d)
        assert gf.poly_mod((1 << info.n) | 1, info.generator) == 0


def test_bch_runs():
    for d, run in BCH_RUNS.items():
        assert codes.bch_run(d) == run
    # the run counts consecutive exponents missing from the nonzeros
    info = codes.code_info(9)
    nonzero = set(info.nonzero_exponents)
    assert all(u not in nonzero for u in range(1, 43))
    assert 43 in nonzero


def test_trace_criterion_exponents():
    for d, want in TRACE_COSETS.items():
        assert codes.trace_criterion_exponents(d) == want
    # each exponent is the minimum of its own doubling coset
    n = 511
    for u in codes.trace_criterion_exponents(9):
        assert residue.coset_min(u, n) == u
    # and they are exactly the cosets of 5a over the solution set
    sols = segre.segre_solutions(9)
    assert set(codes.trace_criterion_exponents(9)) == {residue.coset_min(5 * a % n, n) for a in sols}


def test_sextic_solvable_matches_exhaustive_count_d9():
    spec = codes.make_code_field(9)
    for beta in range(1, 512):
        roots = codes.sextic_root_count(spec, beta)
        assert roots in (0, 2)
        assert codes.sextic_solvable(spec, beta) == (roots == 2)
    assert sum(codes.sextic_solvable(spec, b) for b in range(1, 512)) == 255


def test_sextic_solvable_matches_exhaustive_count_d7():
    spec = codes.make_code_field(7)
    for beta in range(1, 128):
        assert codes.sextic_solvable(spec, beta) == (codes.sextic_root_count(spec, beta) > 0)


def test_quadratic_criterion_is_the_trace():
    for d in (5, 9):
        spec = codes.make_code_field(d)
        for beta in range(1, 1 << d):
            roots = codes.quadratic_root_count(spec, beta)
            assert roots in (0, 2)
            assert (roots == 2) == (gf.trace(spec, beta) == 0)


def test_domain_and_capacity():
    with pytest.raises(DomainError):
        codes.code_info(8)
    with pytest.raises(CapacityError):
        codes.code_info(codes.MAX_CODE_DEGREE + 1)
    spec = codes.make_code_field(9)
    with pytest.raises(DomainError):
        codes.sextic_solvable(spec, 0)
    with pytest.raises(DomainError):
        codes.sextic_solvable(spec, 1 << 9)
    # solvability needs nonzero beta, but root counting covers beta = 0
    assert codes.sextic_root_count(spec, 0) == 2
    with pytest.raises(DomainError):
        codes.sextic_root_count(spec, 1 << 9)
    big = gf.make_field(18)
    with pytest.raises(CapacityError):
        codes.sextic_root_count(big, 1)
