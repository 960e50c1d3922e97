"""Definitional brute-force versions of the lattice and cumulant operations.

Used to cross-check the engine in tests. Nothing here calls the engine's
algorithms; only the partition and letter types are shared. Everything is
exponential and capped at small n.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .partitions import SetPartition

__all__ = [
    "OracleCapError",
    "oracle_all_partitions",
    "oracle_is_noncrossing",
    "oracle_leq",
    "oracle_nc",
    "oracle_join",
    "oracle_meet",
    "oracle_kreweras",
    "oracle_moebius",
    "oracle_moment",
    "oracle_cumulant",
]

MAX_PARTITIONS_N = 9
MAX_JOIN_N = 8
MAX_KREWERAS_N = 8


class OracleCapError(ValueError):
    pass


def _cap(n: int, limit: int) -> None:
    if n > limit:
        raise OracleCapError(f"n={n} is above the oracle cap {limit}")


def _partitions(elems: list[int]) -> list[list[list[int]]]:
    # place the first element in each block of a partition of the rest, or alone
    if not elems:
        return [[]]
    first, rest = elems[0], elems[1:]
    out = []
    for p in _partitions(rest):
        out.append([[first]] + p)
        for i in range(len(p)):
            out.append(p[:i] + [[first] + p[i]] + p[i + 1 :])
    return out


@lru_cache(maxsize=None)
def _all(n: int) -> tuple[SetPartition, ...]:
    return tuple(SetPartition(n, p) for p in _partitions(list(range(1, n + 1))))


def oracle_all_partitions(n: int) -> list[SetPartition]:
    """All Bell(n) set partitions of {1..n}."""
    _cap(n, MAX_PARTITIONS_N)
    return list(_all(n))


def _crossing(blocks) -> bool:
    where = {x: i for i, b in enumerate(blocks) for x in b}
    elems = sorted(where)
    for p1, q1, p2, q2 in combinations(elems, 4):
        if where[p1] == where[p2] and where[q1] == where[q2] and where[p1] != where[q1]:
            return True
    return False


def oracle_is_noncrossing(p: SetPartition) -> bool:
    """Literal search for p1 < q1 < p2 < q2 with p1 ~ p2 not~ q1 ~ q2."""
    return not _crossing(p.blocks)


def oracle_leq(sigma: SetPartition, pi: SetPartition) -> bool:
    """Every block of sigma is contained in some block of pi."""
    return all(any(set(s) <= set(b) for b in pi.blocks) for s in sigma.blocks)


@lru_cache(maxsize=None)
def _nc(n: int) -> tuple[SetPartition, ...]:
    return tuple(p for p in _all(n) if oracle_is_noncrossing(p))


def oracle_nc(n: int) -> list[SetPartition]:
    _cap(n, MAX_PARTITIONS_N)
    return list(_nc(n))


def oracle_join(pi: SetPartition, sigma: SetPartition) -> SetPartition:
    """The upper bound in NC(n) lying below every other upper bound."""
    _cap(pi.n, MAX_JOIN_N)
    ubs = [t for t in _nc(pi.n) if oracle_leq(pi, t) and oracle_leq(sigma, t)]
    least = [t for t in ubs if all(oracle_leq(t, u) for u in ubs)]
    assert len(least) == 1
    return least[0]


def oracle_meet(pi: SetPartition, sigma: SetPartition) -> SetPartition:
    """The lower bound in NC(n) lying above every other lower bound."""
    _cap(pi.n, MAX_JOIN_N)
    lbs = [t for t in _nc(pi.n) if oracle_leq(t, pi) and oracle_leq(t, sigma)]
    greatest = [t for t in lbs if all(oracle_leq(u, t) for u in lbs)]
    assert len(greatest) == 1
    return greatest[0]


def interleaved_union(pi: SetPartition, sigma: SetPartition) -> list[list[int]]:
    """pi on 1, 2, ... and sigma on 1bar, 2bar, ... placed as 1 1bar 2 2bar ... n nbar."""
    return [[2 * x - 1 for x in b] for b in pi.blocks] + [[2 * x for x in b] for b in sigma.blocks]


def oracle_kreweras(pi: SetPartition) -> SetPartition:
    """Largest sigma in NC(n) whose interleaved union with pi is non-crossing."""
    _cap(pi.n, MAX_KREWERAS_N)
    ok = [s for s in _nc(pi.n) if not _crossing(interleaved_union(pi, s))]
    biggest = [s for s in ok if all(oracle_leq(t, s) for t in ok)]
    assert len(biggest) == 1
    return biggest[0]


def oracle_moebius(pi: SetPartition, sigma: SetPartition) -> int:
    """mu(pi, sigma) = -sum over pi < t <= sigma of mu(t, sigma), recursing from the top."""
    _cap(pi.n, MAX_JOIN_N)
    if not oracle_leq(pi, sigma):
        raise ValueError("pi is not below sigma")
    return _mu_down(pi, sigma)


@lru_cache(maxsize=None)
def _mu_down(pi: SetPartition, sigma: SetPartition) -> int:
    if pi == sigma:
        return 1
    return -sum(
        _mu_down(t, sigma)
        for t in _nc(pi.n)
        if t != pi and oracle_leq(pi, t) and oracle_leq(t, sigma)
    )


def _k_pi(p: SetPartition, w, value) -> Fraction:
    out = Fraction(1)
    for b in p.blocks:
        out *= value(tuple(w[i - 1] for i in b))
    return out


def oracle_moment(k, w) -> Fraction:
    """phi(w) as the plain sum over NC(n) of k_pi[w]; ``k`` is any word -> value lookup."""
    _cap(len(w), MAX_PARTITIONS_N)
    return sum((_k_pi(p, w, k.__getitem__) for p in _nc(len(w))), Fraction(0))


def oracle_cumulant(phi, w) -> Fraction:
    """k_n(w) from the moment-cumulant relation, solving order by order."""
    _cap(len(w), MAX_PARTITIONS_N)
    memo: dict = {}

    def k(sub):
        if sub not in memo:
            n = len(sub)
            top = SetPartition(n, [range(1, n + 1)])
            memo[sub] = phi[sub] - sum(
                (_k_pi(p, sub, k) for p in _nc(n) if p != top), Fraction(0)
            )
        return memo[sub]

    return k(tuple(w))
