"""Moment <-> free cumulant calculus and cumulants with products as entries.

Every transform is available through two independent formulas; the public
constructors evaluate both for words up to ``check_up_to`` letters and
raise :class:`InconsistencyError` if they ever disagree.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .partitions import (
    LatticeError,
    NcPartition,
    SetPartition,
    interval_partition,
    iter_nc,
    join,
    kreweras,
    leq,
    moebius_to_top,
)
from .words import (
    CumulantTable,
    Letter,
    MomentFunctional,
    Word,
    WordError,
    format_word,
    induced_functional,
)

__all__ = [
    "InconsistencyError",
    "IntervalGrouping",
    "k_pi_eval",
    "phi_pi_eval",
    "cumulant_recursive",
    "cumulant_moebius",
    "moment_nc_sum",
    "moment_first_block",
    "cumulants_from_moments",
    "moments_from_cumulants",
    "tau_hat",
    "cumulant_of_products",
    "k_sigma_from_cumulants",
    "k_sigma_from_moments",
    "k_sigma_generalized",
    "bracket_sigma",
    "bracket_cumulant",
    "product_distribution",
]

#: words up to this length are computed by both routes and compared
DEFAULT_CHECK_UP_TO = 8

ZERO = Fraction(0)
ONE = Fraction(1)


class InconsistencyError(ArithmeticError):
    """Two routes that must agree exactly produced different values."""


def _check_len(pi: SetPartition, w: Word) -> None:
    if len(w) != pi.n:
        raise LatticeError(f"word of length {len(w)} does not match partition of {pi.n}")


def _block_product(pi: SetPartition, w: Word, lookup: Callable[[Word], Fraction]) -> Fraction:
    out = ONE
    for b in pi.blocks:
        v = lookup(tuple(w[i - 1] for i in b))
        if not v:
            return ZERO
        out *= v
    return out


def k_pi_eval(pi: SetPartition, w: Word, k: CumulantTable) -> Fraction:
    """k_pi[w]: product over blocks of pi of the cumulant of the block's subword."""
    _check_len(pi, w)
    return _block_product(pi, w, k.__getitem__)


def phi_pi_eval(pi: SetPartition, w: Word, phi: MomentFunctional) -> Fraction:
    """phi_pi[w]: product over blocks of pi of the moment of the block's subword."""
    _check_len(pi, w)
    return _block_product(pi, w, phi.__getitem__)


class _BlockCache:
    """Values of block subwords of one fixed word, looked up by block."""

    __slots__ = ("w", "lookup", "memo")

    def __init__(self, w: Word, lookup: Callable[[Word], Fraction]):
        self.w = w
        self.lookup = lookup
        self.memo: dict[tuple[int, ...], Fraction] = {}

    def product(self, pi: SetPartition) -> Fraction:
        memo = self.memo
        out = ONE
        for b in pi.blocks:
            v = memo.get(b)
            if v is None:
                v = memo[b] = self.lookup(tuple(self.w[i - 1] for i in b))
            if not v:
                return ZERO
            out *= v
        return out


# -- moments -> cumulants ---------------------------------------------------


def cumulant_recursive(phi: MomentFunctional, w: Word, k: Callable[[Word], Fraction]) -> Fraction:
    """k_n(w) = phi(w) - sum over pi != 1_n of k_pi[w], lower orders taken from ``k``."""
    n = len(w)
    cache = _BlockCache(w, k)
    total = phi[w]
    for pi in iter_nc(n):
        if len(pi.blocks) > 1:
            total -= cache.product(pi)
    return total


@lru_cache(maxsize=None)
def _moebius_weights(n: int) -> tuple[tuple[NcPartition, int], ...]:
    return tuple((pi, moebius_to_top(pi)) for pi in iter_nc(n))


def cumulant_moebius(phi: MomentFunctional, w: Word) -> Fraction:
    """k_n(w) = sum over pi in NC(n) of mu(pi, 1_n) phi_pi[w]."""
    cache = _BlockCache(w, phi.__getitem__)
    total = ZERO
    for pi, mu in _moebius_weights(len(w)):
        total += mu * cache.product(pi)
    return total


def cumulants_from_moments(
    phi: MomentFunctional, check_up_to: int = DEFAULT_CHECK_UP_TO
) -> CumulantTable:
    """Free cumulants of phi up to its order (evaluated on demand)."""
    table: CumulantTable

    def fn(w: Word) -> Fraction:
        v = cumulant_recursive(phi, w, table.__getitem__)
        if len(w) <= check_up_to:
            other = cumulant_moebius(phi, w)
            if other != v:
                raise InconsistencyError(
                    f"cumulant of {format_word(w)!r}: recursion {v} != Moebius form {other}"
                )
        return v

    table = CumulantTable(phi.order, phi.alphabet, star=phi.star, source=fn)
    return table


# -- cumulants -> moments ---------------------------------------------------


def moment_nc_sum(k: CumulantTable, w: Word) -> Fraction:
    """phi(w) = sum over pi in NC(n) of k_pi[w]."""
    cache = _BlockCache(w, k.__getitem__)
    total = ZERO
    for pi in iter_nc(len(w)):
        total += cache.product(pi)
    return total


def moment_first_block(k: CumulantTable, w: Word) -> Fraction:
    """phi(w) by splitting off the block that contains the first letter.

    phi(x_i ... x_{j-1}) = sum over V = {i = v_1 < ... < v_s} of
    k_s(x_V) * prod of the moments of the gaps between consecutive v's
    and after v_s. Intervals are memoized, so cost is O(n^2 2^n).
    """
    n = len(w)
    memo: dict[tuple[int, int], Fraction] = {}

    def interval(i: int, j: int) -> Fraction:
        if i >= j:
            return ONE
        key = (i, j)
        if key in memo:
            return memo[key]
        total = ZERO
        # grow the block containing i one element at a time
        stack: list[tuple[tuple[int, ...], Fraction]] = [((i,), ONE)]
        while stack:
            block, gaps = stack.pop()
            last = block[-1]
            kv = k[tuple(w[p] for p in block)]
            if kv:
                total += kv * gaps * interval(last + 1, j)
            for nxt in range(last + 1, j):
                g = interval(last + 1, nxt)
                if g:
                    stack.append((block + (nxt,), gaps * g))
        memo[key] = total
        return total

    return interval(0, n)


def moments_from_cumulants(k: CumulantTable, check_up_to: int = DEFAULT_CHECK_UP_TO) -> MomentFunctional:
    """The unital functional whose free cumulants are ``k`` (evaluated on demand)."""

    def fn(w: Word) -> Fraction:
        v = moment_first_block(k, w)
        if len(w) <= check_up_to:
            other = moment_nc_sum(k, w)
            if other != v:
                raise InconsistencyError(
                    f"moment of {format_word(w)!r}: first-block recursion {v} != NC sum {other}"
                )
        return v

    return MomentFunctional(k.order, k.alphabet, star=k.star, source=fn)


# -- products as arguments --------------------------------------------------


@dataclass(frozen=True)
class IntervalGrouping:
    """Breakpoints 1 <= i_1 < ... < i_m = n cutting a_1...a_n into products A_j."""

    n: int
    breakpoints: tuple[int, ...]

    def __init__(self, n: int, breakpoints: Iterable[int]):
        bps = tuple(breakpoints)
        interval_partition(n, bps)  # validates
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "breakpoints", bps)

    @classmethod
    def from_lengths(cls, lengths: Sequence[int]) -> IntervalGrouping:
        bps, acc = [], 0
        for s in lengths:
            acc += s
            bps.append(acc)
        return cls(acc, bps)

    @property
    def m(self) -> int:
        return len(self.breakpoints)

    @property
    def sigma(self) -> NcPartition:
        return interval_partition(self.n, self.breakpoints)

    def groups(self) -> list[tuple[int, ...]]:
        return list(self.sigma.blocks)

    def split(self, w: Word) -> list[Word]:
        if len(w) != self.n:
            raise LatticeError(f"word of length {len(w)} does not match grouping of {self.n}")
        return [tuple(w[i - 1] for i in g) for g in self.groups()]


def tau_hat(tau: SetPartition, g: IntervalGrouping) -> NcPartition:
    """Inflate a partition of the m products to one of the n letters."""
    if tau.n != g.m:
        raise LatticeError(f"partition of {tau.n} products but the grouping has {g.m}")
    groups = g.groups()
    blocks = [tuple(x for j in b for x in groups[j - 1]) for b in tau.blocks]
    return NcPartition(g.n, blocks)


def _join_filtered_sum(
    w: Word, sigma: SetPartition, target: SetPartition, k: CumulantTable
) -> Fraction:
    cache = _BlockCache(w, k.__getitem__)
    total = ZERO
    for pi in iter_nc(len(w)):
        v = cache.product(pi)
        if v and join(pi, sigma) == target:
            total += v
    return total


def cumulant_of_products(
    tau: SetPartition, g: IntervalGrouping, w: Word, k: CumulantTable
) -> Fraction:
    """k_tau[A_1, ..., A_m] for A_j the products of ``w`` cut by ``g``.

    Sum of k_pi[w] over pi in NC(n) with pi v sigma = tau_hat, sigma the
    interval partition of g. Only partitions with a nonzero k_pi are joined.
    """
    if len(w) != g.n:
        raise LatticeError(f"word of length {len(w)} does not match grouping of {g.n}")
    return _join_filtered_sum(w, g.sigma, tau_hat(tau, g), k)


def k_sigma_from_cumulants(sigma: SetPartition, w: Word, k: CumulantTable) -> Fraction:
    """sum of k_pi[w] over pi in NC(n) with pi v sigma = 1_n."""
    _check_len(sigma, w)
    return _join_filtered_sum(w, sigma, NcPartition.one(sigma.n), k)


def k_sigma_from_moments(sigma: SetPartition, w: Word, phi: MomentFunctional) -> Fraction:
    """sum over pi >= sigma of mu(pi, 1_n) phi_pi[w]."""
    _check_len(sigma, w)
    cache = _BlockCache(w, phi.__getitem__)
    total = ZERO
    for pi, mu in _moebius_weights(sigma.n):
        if leq(sigma, pi):
            total += mu * cache.product(pi)
    return total


def k_sigma_generalized(
    sigma: SetPartition,
    w: Word,
    phi: MomentFunctional,
    k: CumulantTable | None = None,
) -> Fraction:
    """k^sigma(w) from moments, asserted equal to the join-condition sum over cumulants."""
    v = k_sigma_from_moments(sigma, w, phi)
    other = k_sigma_from_cumulants(sigma, w, k if k is not None else cumulants_from_moments(phi))
    if v != other:
        raise InconsistencyError(f"k^sigma for sigma={sigma}: moment form {v} != cumulant form {other}")
    return v


def bracket_sigma(c: Word, middles: Sequence[Word], b: Word) -> NcPartition:
    """Partition of the letters of c, middles..., b with c and b in one block."""
    if not c or not b or any(not x for x in middles):
        raise WordError("bracket arguments must be nonempty words")
    blocks = []
    pos = len(c)
    outer = list(range(1, pos + 1))
    for mid in middles:
        blocks.append(tuple(range(pos + 1, pos + len(mid) + 1)))
        pos += len(mid)
    outer.extend(range(pos + 1, pos + len(b) + 1))
    blocks.append(tuple(outer))
    return NcPartition(pos + len(b), blocks)


def bracket_cumulant(c: Word, middles: Sequence[Word], b: Word, k: CumulantTable) -> Fraction:
    """k_m(-|c, b_1, ..., b_{m-1}, b|-) with c and b the split first argument.

    Every argument may itself be a product (a word); the value is the sum
    of k_pi over the letters with pi v sigma = 1, where sigma groups each
    middle argument and puts c together with b.
    """
    sigma = bracket_sigma(c, middles, b)
    w = tuple(c) + tuple(x for mid in middles for x in mid) + tuple(b)
    return k_sigma_from_cumulants(sigma, w, k)


def product_distribution(phi: MomentFunctional, g: IntervalGrouping, w: Word, order: int | None = None):
    """The products A_1..A_m of ``w`` as fresh variables and their joint distribution.

    Returns ``(psi, A)`` where psi is the induced (non-starred) functional
    on variables ``A1..Am`` and A is the word A1 A2 ... Am.
    """
    parts = g.split(w)
    names = [f"A{j}" for j in range(1, g.m + 1)]
    psi = induced_functional(phi, dict(zip(names, parts)), order or g.m, star=False)
    return psi, tuple(Letter(v) for v in names)
