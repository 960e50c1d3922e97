"""Randomized exact verification suites, shared by the CLI and the scripts.

Each suite takes ``(max_n, rng)`` and returns a list of :class:`Check`.
Sizes are clipped so that ``max_n = 5`` runs in seconds.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import oracle
from .cumulants import (
    IntervalGrouping,
    cumulant_of_products,
    cumulants_from_moments,
    k_pi_eval,
    k_sigma_from_cumulants,
    k_sigma_from_moments,
    moments_from_cumulants,
    product_distribution,
)
from .free import (
    RDiagonalSpec,
    check_freeness_moment_form,
    free_mult_cumulants,
    free_product,
    free_product_cumulants,
    haar_unitary,
    is_r_diagonal,
    rdiag_aastar_cumulants,
    rdiag_cumulant_table,
    rdiag_product_cumulants,
    r_diagonal_from_spec,
    sandwich_cumulants,
    sandwich_kreweras_form,
    verify_power_rdiag,
    verify_ux_invariance,
)
from .partitions import (
    NcPartition,
    enumerate_nc,
    join,
    kreweras,
    leq,
    meet,
    moebius,
    parse_partition,
)
from .words import (
    CumulantTable,
    Letter,
    MomentFunctional,
    all_words,
    induced_functional,
)

__all__ = [
    "Check",
    "SUITES",
    "random_rational",
    "random_moments",
    "random_cumulants",
    "random_cyclic_cumulants",
    "random_spec",
    "compositions",
    "run_suites",
]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


def random_rational(rng: random.Random, size: int = 5) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, 3))


def random_moments(rng, alphabet, order, star=False) -> MomentFunctional:
    values = {w: random_rational(rng) for w in all_words(alphabet, order, star=star)}
    return MomentFunctional(order, alphabet, values, star=star)


def random_cumulants(rng, alphabet, order, star=False) -> CumulantTable:
    values = {w: random_rational(rng) for w in all_words(alphabet, order, star=star)}
    return CumulantTable(order, alphabet, values, star=star)


def random_cyclic_cumulants(rng, alphabet, order) -> CumulantTable:
    """Cumulants invariant under cyclic rotation; their moments are tracial."""
    values: dict = {}
    for w in all_words(alphabet, order, star=False):
        if w not in values:
            v = random_rational(rng)
            for i in range(len(w)):
                values[w[i:] + w[:i]] = v
    return CumulantTable(order, alphabet, values, star=False)


def random_spec(rng, order: int) -> RDiagonalSpec:
    half = order // 2
    return RDiagonalSpec(
        order, [random_rational(rng) for _ in range(half)], [random_rational(rng) for _ in range(half)]
    )


def compositions(n: int):
    """All groupings of n letters, as IntervalGrouping."""
    for mask in range(1 << (n - 1)):
        bps = [i for i in range(1, n) if mask >> (i - 1) & 1] + [n]
        yield IntervalGrouping(n, bps)


# -- suites -----------------------------------------------------------------


def suite_lattice(max_n: int, rng) -> list[Check]:
    out = []
    p = parse_partition
    out.append(Check(
        "refinement example",
        leq(
            p("{(1,3),(2),(4,5),(6,8),(7)}", noncrossing=False),
            p("{(1,3,7),(2),(4,5,6,8)}", noncrossing=False),
        ),
    ))
    out.append(Check(
        "Kreweras example",
        kreweras(p("{(1,2,7),(3),(4,6),(5),(8)}")) == p("{(1),(2,3,6),(4,5),(7,8)}"),
    ))
    out.append(Check(
        "connecting-join example",
        join(p("{(1,8),(2,3),(4,5,7),(6)}"), p("{(1,2,3,4),(5),(6),(7),(8)}"))
        == p("{(1,2,3,4,5,7,8),(6)}"),
    ))
    n = min(max_n, 5)
    nc = enumerate_nc(n)
    ok = all(join(a, b) == oracle.oracle_join(a, b) and meet(a, b) == oracle.oracle_meet(a, b)
             for a in nc for b in nc)
    out.append(Check(f"join/meet = brute-force LUB/GLB on NC({n})", ok))
    ok = all(kreweras(a) == oracle.oracle_kreweras(a) for a in nc)
    out.append(Check(f"Kreweras = maximality scan on NC({n})", ok))
    ok = all(leq(s, t) == leq(kreweras(t), kreweras(s)) for s in nc for t in nc)
    out.append(Check(f"K is order-reversing on NC({n})", ok))
    return out


def suite_counting(max_n: int, rng) -> list[Check]:
    out = []
    for n in range(1, min(max_n, 9) + 1):
        got, want = len(enumerate_nc(n)), len(oracle.oracle_nc(n))
        out.append(Check(f"|NC({n})| = {got}", got == want, f"oracle {want}"))
    return out


def suite_moebius(max_n: int, rng) -> list[Check]:
    n = min(max_n, 5)
    nc = enumerate_nc(n)
    ok = True
    for a in nc:
        for b in nc:
            if leq(a, b) and a != b:
                iv = [t for t in nc if leq(a, t) and leq(t, b)]
                ok &= sum(moebius(t, b) for t in iv) == 0 and sum(moebius(a, t) for t in iv) == 0
    return [
        Check(f"zeta-inversion on all intervals of NC({n})", ok),
        Check("mu(0_3, 1_3) = 2", moebius(NcPartition.zero(3), NcPartition.one(3)) == 2),
    ]


def suite_transforms(max_n: int, rng) -> list[Check]:
    out = []
    order = min(max_n, 5)
    a1, a2, a3 = Letter("a1"), Letter("a2"), Letter("a3")
    ok3 = True
    ok_rt = True
    for _ in range(5):
        phi = random_moments(rng, ["a1", "a2", "a3"], 3)
        k = cumulants_from_moments(phi)
        f = phi.__getitem__
        ok3 &= k[(a1,)] == f((a1,))
        ok3 &= k[(a1, a2)] == f((a1, a2)) - f((a1,)) * f((a2,))
        ok3 &= k[(a1, a2, a3)] == (
            f((a1, a2, a3)) - f((a1,)) * f((a2, a3)) - f((a1, a2)) * f((a3,))
            - f((a1, a3)) * f((a2,)) + 2 * f((a1,)) * f((a2,)) * f((a3,))
        )
        psi = random_moments(rng, ["a", "b"], order)
        back = moments_from_cumulants(cumulants_from_moments(psi))
        ok_rt &= all(back[w] == v for w, v in psi.items())
    out.append(Check("printed k_1, k_2, k_3 expansions", ok3))
    out.append(Check(f"moments -> cumulants -> moments, order {order}", ok_rt))
    return out


def suite_products(max_n: int, rng) -> list[Check]:
    n_max = min(max_n, 5)
    phi = random_moments(rng, ["a", "b"], n_max)
    k = cumulants_from_moments(phi)
    ok = True
    count = 0
    for n in range(1, n_max + 1):
        w = tuple(rng.choice([Letter("a"), Letter("b")]) for _ in range(n))
        for g in compositions(n):
            psi, A = product_distribution(phi, g, w)
            kA = cumulants_from_moments(psi)
            for tau in enumerate_nc(g.m):
                ok &= cumulant_of_products(tau, g, w, k) == k_pi_eval(tau, A, kA)
                count += 1
    a1, a2, a3 = Letter("a1"), Letter("a2"), Letter("a3")
    phi3 = random_moments(rng, ["a1", "a2", "a3"], 3)
    k3 = cumulants_from_moments(phi3)
    v = cumulant_of_products(NcPartition.one(2), IntervalGrouping(3, [2, 3]), (a1, a2, a3), k3)
    ex = (v == k3[(a1, a2, a3)] + k3[(a1,)] * k3[(a2, a3)] + k3[(a1, a3)] * k3[(a2,)]
          and v == phi3[(a1, a2, a3)] - phi3[(a1, a2)] * phi3[(a3,)])
    return [
        Check(f"products formula vs product-variable cumulants ({count} cases, n <= {n_max})", ok),
        Check("k_2(a1 a2, a3) worked example", ex),
    ]


def suite_ksigma(max_n: int, rng) -> list[Check]:
    n_max = min(max_n, 5)
    ok = True
    for n in range(1, n_max + 1):
        phi = random_moments(rng, ["a", "b"], n)
        k = cumulants_from_moments(phi)
        w = tuple(rng.choice([Letter("a"), Letter("b")]) for _ in range(n))
        for s in enumerate_nc(n):
            ok &= k_sigma_from_moments(s, w, phi) == k_sigma_from_cumulants(s, w, k)
    phi = random_moments(rng, ["a1", "a2", "b", "c"], 4)
    a1, b, a2, c = (Letter(x) for x in ("a1", "b", "a2", "c"))
    f = phi.__getitem__
    want = (f((a1, b, a2, c)) - f((a1, b, a2)) * f((c,)) - f((a1, a2, c)) * f((b,))
            + f((a1, a2)) * f((b,)) * f((c,)))
    got = k_sigma_from_moments(parse_partition("{(1,3),(2),(4)}"), (a1, b, a2, c), phi)
    return [
        Check(f"moment form = join form for all sigma, n <= {n_max}", ok),
        Check("k^{(1,3),(2),(4)} expansion", got == want),
    ]


def suite_closed_forms(max_n: int, rng) -> list[Check]:
    out = []
    n_max = min(max_n, 4)
    # products of free families
    ka = random_cumulants(rng, ["a"], 2 * n_max)
    kb = random_cumulants(rng, ["b"], 2 * n_max)
    joint = free_product_cumulants([ka, kb], 2 * n_max)
    ok = True
    for n in range(1, n_max + 1):
        wa, wb = (Letter("a"),) * n, (Letter("b"),) * n
        g = IntervalGrouping.from_lengths([2] * n)
        w = tuple(x for pair in zip(wa, wb) for x in pair)
        ok &= free_mult_cumulants(wa, wb, ka, kb) == cumulant_of_products(NcPartition.one(n), g, w, joint)
    out.append(Check(f"product of free variables (n <= {n_max})", ok))

    n3 = min(n_max, 3)
    ka = random_cumulants(rng, ["a"], 3 * n3)
    kbc = random_cumulants(rng, ["b", "c"], 3 * n3)
    joint = free_product_cumulants([ka, kbc], 3 * n3)
    b, c, a = Letter("b"), Letter("c"), Letter("a")
    ok = True
    for n in range(1, n3 + 1):
        g = IntervalGrouping.from_lengths([3] * n)
        ok &= sandwich_cumulants((a,) * n, (b,), (c,), joint) == cumulant_of_products(
            NcPartition.one(n), g, (b, a, c) * n, joint
        )
    out.append(Check(f"sandwich b a_i c (n <= {n3}, non-tracial)", ok))
    tk = free_product_cumulants(
        [random_cyclic_cumulants(rng, ["a"], 3 * n3), random_cyclic_cumulants(rng, ["b", "c"], 3 * n3)],
        3 * n3,
    )
    ok = all(
        sandwich_cumulants((a,) * n, (b,), (c,), tk) == sandwich_kreweras_form((a,) * n, (b,), (c,), tk)
        for n in range(1, n3 + 1)
    )
    out.append(Check("sandwich = Kreweras form with cb in the tracial case", ok))

    sa, sb = random_spec(rng, 2 * n_max), random_spec(rng, 2 * n_max)
    k_a = rdiag_cumulant_table(sa, "a")
    a, s = Letter("a"), Letter("a", True)
    ok = all(
        rdiag_aastar_cumulants(sa, n)
        == cumulant_of_products(NcPartition.one(n), IntervalGrouping.from_lengths([2] * n), (a, s) * n, k_a)
        for n in range(1, n_max + 1)
    )
    out.append(Check(f"k_n(aa*, ..., aa*) closed form (n <= {n_max})", ok))
    k_b = rdiag_cumulant_table(sb, "b")
    joint = free_product_cumulants([k_a, k_b], 4 * n3)
    b, bs = Letter("b"), Letter("b", True)
    ok = all(
        rdiag_product_cumulants(sa, sb, n)
        == cumulant_of_products(
            NcPartition.one(2 * n), IntervalGrouping.from_lengths([2] * (2 * n)), (a, b, bs, s) * n, joint
        )
        for n in range(1, n3 + 1)
    )
    out.append(Check(f"alternating cumulants of ab (n <= {n3}, alpha != beta)", ok))
    return out


def suite_freeness(max_n: int, rng) -> list[Check]:
    order = min(max_n, 5)
    m1 = random_moments(rng, ["a1", "a2"], order)
    m2 = random_moments(rng, ["b"], order)
    phi = free_product([m1, m2], order)
    ok = check_freeness_moment_form(phi, {"a1": 0, "a2": 0, "b": 1})
    a1, a2, b = Letter("a1"), Letter("a2"), Letter("b")
    rule = phi[(a1, b, a2)] == phi[(a1, a2)] * phi[(b,)]
    corr = CumulantTable(order, ["a", "b"], {(Letter("a"), Letter("b")): 1}, star=False, default=0)
    bad = not check_freeness_moment_form(moments_from_cumulants(corr), {"a": 0, "b": 1})
    return [
        Check(f"free product passes the centered-moment test (order {order})", ok),
        Check("phi(a1 b a2) = phi(a1 a2) phi(b)", rule),
        Check("correlated pair fails the centered-moment test", bad),
    ]


def suite_rdiag(max_n: int, rng) -> list[Check]:
    order = min(max_n + (max_n % 2), 6)
    x = r_diagonal_from_spec(random_spec(rng, order), "x")
    bad = moments_from_cumulants(
        CumulantTable(order, ["x"], {(Letter("x"), Letter("x")): 1}, default=0)
    )
    out = [
        Check("Haar unitary is R-diagonal (order 8)", is_r_diagonal(haar_unitary(8))),
        Check(f"R-diagonal x: (ux, x*u*) ~ (x, x*) (order {order})", verify_ux_invariance(x)),
        Check("non-R-diagonal x: distributions differ", not verify_ux_invariance(bad)),
    ]
    y = random_moments(rng, ["y"], order // 2, star=True)
    a = r_diagonal_from_spec(random_spec(rng, order), "a")
    joint = free_product([a, y], order)
    ay = induced_functional(joint, {"p": (Letter("a"), Letter("y"))}, order // 2)
    out.append(Check(f"a R-diagonal, y arbitrary and free: ay is R-diagonal (order {order // 2})", is_r_diagonal(ay)))
    spec = random_spec(rng, order)
    phi = r_diagonal_from_spec(spec, "a")
    star = induced_functional(phi, {"a": (Letter("a", True),)}, order)
    out.append(Check("swapping alpha and beta gives the distribution of a*",
                     all(star[w] == v for w, v in r_diagonal_from_spec(spec.swapped(), "a").items())))
    out.append(Check("a^2 R-diagonal with the distribution of a1 a2 (order 8)",
                     verify_power_rdiag(random_spec(rng, 8), 2, 8)))
    return out


SUITES: dict[str, Callable[[int, random.Random], list[Check]]] = {
    "lattice": suite_lattice,
    "counting": suite_counting,
    "moebius": suite_moebius,
    "transforms": suite_transforms,
    "products": suite_products,
    "ksigma": suite_ksigma,
    "freeness": suite_freeness,
    "closed-forms": suite_closed_forms,
    "rdiag": suite_rdiag,
}


def run_suites(names, max_n: int = 5, seed: int = 0) -> list[tuple[str, Check]]:
    out = []
    for name in names:
        rng = random.Random(f"{seed}:{name}")
        for check in SUITES[name](max_n, rng):
            out.append((name, check))
    return out
