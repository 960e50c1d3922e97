import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freecumulants import oracle
from freecumulants.cumulants import (
    InconsistencyError,
    IntervalGrouping,
    bracket_cumulant,
    cumulant_moebius,
    cumulant_of_products,
    cumulants_from_moments,
    k_pi_eval,
    k_sigma_from_cumulants,
    k_sigma_from_moments,
    k_sigma_generalized,
    moment_first_block,
    moment_nc_sum,
    moments_from_cumulants,
    phi_pi_eval,
    product_distribution,
    tau_hat,
)
from freecumulants.partitions import LatticeError, NcPartition, enumerate_nc, parse_partition
from freecumulants.verify import compositions, random_cumulants, random_moments
from freecumulants.words import CumulantTable, Letter, MomentFunctional

P = parse_partition
a1, a2, a3, b, c = (Letter(x) for x in ("a1", "a2", "a3", "b", "c"))


@pytest.fixture
def phi3(rng):
    return random_moments(rng, ["a1", "a2", "a3"], 3)


def test_low_order_expansions(phi3):
    k = cumulants_from_moments(phi3)
    f = phi3.__getitem__
    assert k[(a1,)] == f((a1,))
    assert k[(a1, a2)] == f((a1, a2)) - f((a1,)) * f((a2,))
    assert k[(a1, a2, a3)] == (
        f((a1, a2, a3)) - f((a1,)) * f((a2, a3)) - f((a1, a2)) * f((a3,))
        - f((a1, a3)) * f((a2,)) + 2 * f((a1,)) * f((a2,)) * f((a3,))
    )


def test_k_pi_and_phi_pi(phi3):
    k = cumulants_from_moments(phi3)
    w = (a1, a2, a3)
    assert k_pi_eval(NcPartition.zero(3), w, k) == k[(a1,)] * k[(a2,)] * k[(a3,)]
    assert k_pi_eval(NcPartition.one(3), w, k) == k[w]
    assert k_pi_eval(P("{(1),(2,3)}"), w, k) == k[(a1,)] * k[(a2, a3)]
    assert phi_pi_eval(P("{(1,3),(2)}"), w, phi3) == phi3[(a1, a3)] * phi3[(a2,)]
    assert phi_pi_eval(NcPartition.one(3), w, phi3) == phi3[w]
    with pytest.raises(LatticeError):
        k_pi_eval(NcPartition.one(2), w, k)


def test_moments_from_trivial_cumulants():
    a = Letter("a")
    zero = moments_from_cumulants(CumulantTable(5, ["a"], default=0))
    assert all(v == 0 for _, v in zero.items())
    only_mean = moments_from_cumulants(CumulantTable(5, ["a"], {(a,): 1}, star=False, default=0))
    assert [only_mean[(a,) * n] for n in range(1, 6)] == [1] * 5


def test_semicircle_moments_are_catalan():
    a = Letter("a")
    k = CumulantTable(10, ["a"], {(a, a): 1}, star=False, default=0)
    phi = moments_from_cumulants(k)
    assert [phi[(a,) * n] for n in range(1, 11)] == [0, 1, 0, 2, 0, 5, 0, 14, 0, 42]


def test_two_moment_routes_and_two_cumulant_routes_agree(rng):
    phi = random_moments(rng, ["a", "b"], 5, star=True)
    k = cumulants_from_moments(phi).materialize()
    for w, v in k.items():
        assert cumulant_moebius(phi, w) == v
        assert oracle.oracle_cumulant(phi, w) == v
    kt = random_cumulants(rng, ["a", "b"], 5)
    for w, _ in moments_from_cumulants(kt).items():
        assert moment_first_block(kt, w) == moment_nc_sum(kt, w) == oracle.oracle_moment(kt, w)


def test_double_round_trip(rng):
    phi = random_moments(rng, ["a"], 6, star=True)
    back = moments_from_cumulants(cumulants_from_moments(phi))
    assert all(back[w] == v for w, v in phi.items())
    k = random_cumulants(rng, ["a", "b"], 4, star=True)
    again = cumulants_from_moments(moments_from_cumulants(k))
    assert all(again[w] == v for w, v in k.items())


def test_beyond_check_order_is_still_consistent(rng):
    # order 9 exceeds the default double-check bound of 8 for the longest words
    a = Letter("a")
    k = CumulantTable(9, ["a"], {(a,) * n: n - 4 for n in range(1, 10)}, star=False)
    phi = moments_from_cumulants(k, check_up_to=0)
    assert phi[(a,) * 9] == moment_nc_sum(k, (a,) * 9)
    assert cumulants_from_moments(phi, check_up_to=0)[(a,) * 9] == 5


def test_inconsistency_is_reported():
    class Liar(MomentFunctional):
        calls = 0

        def __getitem__(self, w):
            # answer the two engine routes differently for the length-2 word
            if len(w) == 2:
                Liar.calls += 1
                return Fraction(Liar.calls)
            return super().__getitem__(w)

    a = Letter("a")
    phi = Liar(2, ["a"], star=False, default=0)
    with pytest.raises(InconsistencyError):
        cumulants_from_moments(phi)[(a, a)]


def test_interval_grouping():
    g = IntervalGrouping(6, [2, 5, 6])
    assert g.m == 3
    assert g.groups() == [(1, 2), (3, 4, 5), (6,)]
    assert IntervalGrouping.from_lengths([2, 3, 1]) == g
    assert g.split(tuple("abcdef")) == [("a", "b"), ("c", "d", "e"), ("f",)]
    with pytest.raises(LatticeError):
        IntervalGrouping(4, [1, 3])


def test_tau_hat():
    g = IntervalGrouping(6, [2, 5, 6])
    assert tau_hat(P("{(1,2),(3)}"), g) == P("{(1,2,3,4,5),(6)}")
    assert tau_hat(NcPartition.one(3), g) == NcPartition.one(6)
    assert tau_hat(NcPartition.zero(3), g) == g.sigma
    for tau in enumerate_nc(3):
        assert (tau_hat(tau, g) == NcPartition.one(6)) == (tau == NcPartition.one(3))
    with pytest.raises(LatticeError):
        tau_hat(NcPartition.one(2), g)


def test_products_worked_example(phi3):
    k = cumulants_from_moments(phi3)
    v = cumulant_of_products(NcPartition.one(2), IntervalGrouping(3, [2, 3]), (a1, a2, a3), k)
    assert v == k[(a1, a2, a3)] + k[(a1,)] * k[(a2, a3)] + k[(a1, a3)] * k[(a2,)]
    assert v == phi3[(a1, a2, a3)] - phi3[(a1, a2)] * phi3[(a3,)]


def test_products_trivial_grouping_is_k_pi(rng):
    phi = random_moments(rng, ["a", "b"], 5)
    k = cumulants_from_moments(phi)
    w = (Letter("a"), Letter("b"), Letter("b"), Letter("a"), Letter("b"))
    g = IntervalGrouping(5, [1, 2, 3, 4, 5])
    for tau in enumerate_nc(5):
        assert cumulant_of_products(tau, g, w, k) == k_pi_eval(tau, w, k)


def test_products_against_product_variables(rng):
    phi = random_moments(rng, ["a", "b"], 5)
    k = cumulants_from_moments(phi)
    for n in range(1, 6):
        w = tuple(rng.choice([Letter("a"), Letter("b")]) for _ in range(n))
        for g in compositions(n):
            psi, A = product_distribution(phi, g, w)
            kA = cumulants_from_moments(psi)
            for tau in enumerate_nc(g.m):
                assert cumulant_of_products(tau, g, w, k) == k_pi_eval(tau, A, kA)


def test_k_sigma_example(rng):
    phi = random_moments(rng, ["a1", "a2", "b", "c"], 4)
    f = phi.__getitem__
    w = (a1, b, a2, c)
    want = (f((a1, b, a2, c)) - f((a1, b, a2)) * f((c,)) - f((a1, a2, c)) * f((b,))
            + f((a1, a2)) * f((b,)) * f((c,)))
    assert k_sigma_generalized(P("{(1,3),(2),(4)}"), w, phi) == want


def test_k_sigma_special_cases(rng):
    phi = random_moments(rng, ["a", "b"], 5)
    k = cumulants_from_moments(phi)
    w = (Letter("a"), Letter("b"), Letter("a"), Letter("a"), Letter("b"))
    assert k_sigma_generalized(NcPartition.zero(5), w, phi, k) == k[w]
    g = IntervalGrouping(5, [2, 3, 5])
    assert k_sigma_generalized(g.sigma, w, phi, k) == cumulant_of_products(NcPartition.one(3), g, w, k)
    # sigma = 1_n keeps only pi = 1_n on the moment side
    assert k_sigma_generalized(NcPartition.one(5), w, phi, k) == phi[w]


def test_bracket_cumulants(rng):
    phi = random_moments(rng, ["b", "b1", "c"], 5)
    k = cumulants_from_moments(phi)
    b1 = Letter("b1")
    assert bracket_cumulant((c,), [(b1,)], (b,), k) == phi[(c, b1, b)] - phi[(c, b)] * phi[(b1,)]
    assert bracket_cumulant((c,), [], (b,), k) == phi[(c, b)]
    w = (c, b1, b, b1, b)
    sigma = P("{(1,5),(2),(3),(4)}")
    assert bracket_cumulant((c,), [(b1,), (b,), (b1,)], (b,), k) == k_sigma_from_moments(sigma, w, phi)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 5))
def test_k_sigma_two_forms_property(seed, n):
    r = random.Random(seed)
    phi = random_moments(r, ["a", "b"], n)
    k = cumulants_from_moments(phi)
    w = tuple(r.choice([Letter("a"), Letter("b")]) for _ in range(n))
    sigma = r.choice(enumerate_nc(n))
    assert k_sigma_from_moments(sigma, w, phi) == k_sigma_from_cumulants(sigma, w, k)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3), st.integers(1, 6))
def test_round_trip_property(seed, size, order):
    r = random.Random(seed)
    alphabet = ["x", "y", "z"][:size]
    phi = random_moments(r, alphabet, order if size == 1 else min(order, 4))
    back = moments_from_cumulants(cumulants_from_moments(phi))
    assert all(back[w] == v for w, v in phi.items())
