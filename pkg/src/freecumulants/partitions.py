"""Set partitions and the lattice NC(n) of non-crossing partitions.

Partitions are immutable and always stored in canonical form: elements
increase inside each block and blocks are ordered by their minimum.
The textual form is ``{(1,2,7),(3),(4,6),(5),(8)}``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "MAX_ENUMERATION_SIZE",
    "LatticeError",
    "SetPartition",
    "NcPartition",
    "is_noncrossing",
    "iter_nc",
    "enumerate_nc",
    "nc_count",
    "leq",
    "join",
    "meet",
    "kreweras",
    "moebius",
    "moebius_to_top",
    "interval_partition",
    "parse_partition",
    "format_partition",
    "catalan",
]

#: largest n accepted by :func:`enumerate_nc` (|NC(16)| = 35,357,670)
MAX_ENUMERATION_SIZE = 16

# whole lists are kept in memory up to this size; larger n are streamed
_CACHE_LIMIT = 10


class LatticeError(ValueError):
    """Invalid partition, mismatched ground sets, or an illegal lattice query."""


Block = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class SetPartition:
    """A partition of ``{1, ..., n}`` into nonempty blocks."""

    n: int
    blocks: tuple[Block, ...]

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        if n < 0:
            raise LatticeError(f"ground set size must be nonnegative, got {n}")
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0] if b else 0))
        seen: set[int] = set()
        for b in canon:
            if not b:
                raise LatticeError("blocks must be nonempty")
            for x in b:
                if not 1 <= x <= n:
                    raise LatticeError(f"element {x} outside 1..{n}")
                if x in seen:
                    raise LatticeError(f"element {x} appears in two blocks")
                seen.add(x)
        if len(seen) != n:
            missing = sorted(set(range(1, n + 1)) - seen)
            raise LatticeError(f"elements {missing} are not covered")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", canon)

    @classmethod
    def from_labels(cls, labels: Sequence[int]):
        """Build from a labelling ``labels[i-1]`` = block tag of element i."""
        groups: dict[int, list[int]] = {}
        for i, tag in enumerate(labels, start=1):
            groups.setdefault(tag, []).append(i)
        return cls(len(labels), groups.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self.n == other.n and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash((self.n, self.blocks))

    def __len__(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({format_partition(self)!r})"

    def labels(self) -> tuple[int, ...]:
        """Restricted-growth string: ``labels()[i-1]`` is the index of i's block."""
        out = [0] * self.n
        for j, b in enumerate(self.blocks):
            for x in b:
                out[x - 1] = j
        return tuple(out)

    def block_of(self, x: int) -> Block:
        for b in self.blocks:
            if x in b:
                return b
        raise LatticeError(f"element {x} outside 1..{self.n}")

    def same_block(self, p: int, q: int) -> bool:
        lab = self.labels()
        return lab[p - 1] == lab[q - 1]


class NcPartition(SetPartition):
    """A non-crossing partition; construction fails on any crossing."""

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        super().__init__(n, blocks)
        if not is_noncrossing(self):
            raise LatticeError(f"{format_partition(self)} is crossing")

    @classmethod
    def one(cls, n: int) -> NcPartition:
        """The single-block partition 1_n."""
        return _trusted(n, (tuple(range(1, n + 1)),) if n else ())

    @classmethod
    def zero(cls, n: int) -> NcPartition:
        """The partition 0_n into singletons."""
        return _trusted(n, tuple((i,) for i in range(1, n + 1)))


def _trusted(n: int, blocks: tuple[Block, ...]) -> NcPartition:
    # skips validation; blocks must already be canonical and non-crossing
    p = object.__new__(NcPartition)
    object.__setattr__(p, "n", n)
    object.__setattr__(p, "blocks", blocks)
    return p


def _blocks_from_labels(labels: Sequence[int]) -> tuple[Block, ...]:
    groups: dict[int, list[int]] = {}
    for i, tag in enumerate(labels, start=1):
        groups.setdefault(tag, []).append(i)
    # dict order is first-appearance order, i.e. ordered by block minimum
    return tuple(tuple(g) for g in groups.values())


def is_noncrossing(p: SetPartition) -> bool:
    """True iff no p1 < q1 < p2 < q2 with p1 ~ p2, q1 ~ q2 in different blocks.

    Single left-to-right pass with a stack of blocks that are still open;
    revisiting a block that is not on top of the stack means a crossing.
    """
    lab = p.labels()
    last: dict[int, int] = {}
    for i, b in enumerate(lab):
        last[b] = i
    stack: list[int] = []
    for i, b in enumerate(lab):
        if stack and stack[-1] == b:
            pass
        elif b in stack:
            return False
        else:
            stack.append(b)
        if last[b] == i:
            stack.pop()
    return True


def _nc_label_strings(n: int) -> Iterator[tuple[int, ...]]:
    # Each element joins a block still open on the stack (closing every block
    # above it) or opens a new one; trying open blocks in label order and the
    # new block last yields restricted-growth strings in lexicographic order.
    labels = [0] * n

    def rec(i: int, stack: tuple[int, ...], nblocks: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(labels)
            return
        for depth, b in enumerate(stack):
            labels[i] = b
            yield from rec(i + 1, stack[: depth + 1], nblocks)
        labels[i] = nblocks
        yield from rec(i + 1, stack + (nblocks,), nblocks + 1)

    if n == 0:
        yield ()
        return
    yield from rec(0, (), 0)


def iter_nc(n: int) -> Iterator[NcPartition]:
    """Stream NC(n) in lexicographic order of restricted-growth strings."""
    if n < 0 or n > MAX_ENUMERATION_SIZE:
        raise LatticeError(f"n={n} outside 0..{MAX_ENUMERATION_SIZE}")
    if n <= _CACHE_LIMIT:
        yield from _nc_cached(n)
        return
    for lab in _nc_label_strings(n):
        yield _trusted(n, _blocks_from_labels(lab))


@lru_cache(maxsize=None)
def _nc_cached(n: int) -> tuple[NcPartition, ...]:
    return tuple(_trusted(n, _blocks_from_labels(lab)) for lab in _nc_label_strings(n))


def enumerate_nc(n: int) -> list[NcPartition]:
    """All of NC(n), each once, in lexicographic restricted-growth order.

    ``enumerate_nc(0)`` is ``[{}]``, the single empty partition.
    """
    return list(iter_nc(n))


def catalan(n: int) -> int:
    c = 1
    for k in range(n):
        c = c * 2 * (2 * k + 1) // (k + 2)
    return c


def nc_count(n: int) -> int:
    """|NC(n)|, the n-th Catalan number."""
    return catalan(n)


def _check_same_n(a: SetPartition, b: SetPartition) -> None:
    if a.n != b.n:
        raise LatticeError(f"ground sets differ: n={a.n} vs n={b.n}")


def leq(sigma: SetPartition, pi: SetPartition) -> bool:
    """True iff sigma refines pi (every block of sigma lies in a block of pi)."""
    _check_same_n(sigma, pi)
    lab = pi.labels()
    return all(len({lab[x - 1] for x in b}) == 1 for b in sigma.blocks)


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> int:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return rx
        # keep the smaller index as root so roots stay block minima
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return rx


def _nc_closure(n: int, uf: _UnionFind) -> tuple[Block, ...]:
    """Coarsen the partition held in ``uf`` to the finest non-crossing one above it."""
    last = [0] * n
    for i in range(n):
        last[uf.find(i)] = i
    stack: list[int] = []
    for i in range(n):
        r = uf.find(i)
        if r == i:
            if last[r] > i:
                stack.append(r)
            continue
        # r is open and below the top: every open block above it crosses r
        while stack[-1] != r:
            other = stack.pop()
            hi = max(last[r], last[other])
            r = uf.union(r, other)
            last[r] = hi
        if last[r] == i:
            stack.pop()
    return _blocks_from_labels([uf.find(i) for i in range(n)])


def join(pi: SetPartition, sigma: SetPartition) -> NcPartition:
    """Least upper bound in NC(n).

    Blocks of both arguments are merged by union-find, then crossing blocks
    are merged until the result is non-crossing.
    """
    _check_same_n(pi, sigma)
    n = pi.n
    uf = _UnionFind(n)
    for p in (pi, sigma):
        for b in p.blocks:
            for x in b[1:]:
                uf.union(b[0] - 1, x - 1)
    return _trusted(n, _nc_closure(n, uf))


def meet(pi: SetPartition, sigma: SetPartition) -> NcPartition:
    """Greatest lower bound: the nonempty blockwise intersections."""
    _check_same_n(pi, sigma)
    lp, ls = pi.labels(), sigma.labels()
    return _trusted(pi.n, _blocks_from_labels(list(zip(lp, ls))))


def kreweras(pi: SetPartition) -> NcPartition:
    """Kreweras complement K(pi).

    Blocks of K(pi) are the cycles of ``pi^{-1} o c`` where pi acts by sending
    each element to the next one in its block (cyclically) and c is the long
    cycle ``i -> i+1 mod n``.
    """
    n = pi.n
    prev = [0] * (n + 1)
    for b in pi.blocks:
        for j, x in enumerate(b):
            prev[x] = b[j - 1]
    perm = [0] * (n + 1)
    for i in range(1, n + 1):
        perm[i] = prev[i % n + 1]
    seen = [False] * (n + 1)
    blocks = []
    for i in range(1, n + 1):
        if seen[i]:
            continue
        cycle = []
        j = i
        while not seen[j]:
            seen[j] = True
            cycle.append(j)
            j = perm[j]
        blocks.append(tuple(sorted(cycle)))
    return _trusted(n, tuple(blocks))


def _rank_key(p: SetPartition) -> int:
    # refinement is strictly monotone in block count
    return -len(p.blocks)


@lru_cache(maxsize=4096)
def _moebius_row(pi: NcPartition, sigma: NcPartition) -> dict[NcPartition, int]:
    interval = sorted(
        (t for t in iter_nc(pi.n) if leq(pi, t) and leq(t, sigma)), key=_rank_key
    )
    mu: dict[NcPartition, int] = {}
    for t in interval:
        if t == pi:
            mu[t] = 1
        else:
            mu[t] = -sum(v for s, v in mu.items() if s != t and leq(s, t))
    return mu


def moebius(pi: NcPartition, sigma: NcPartition) -> int:
    """Moebius function of the interval [pi, sigma] in NC(n).

    Computed from the defining recursion mu(pi, pi) = 1 and
    sum_{pi <= t <= sigma} mu(pi, t) = 0. Raises unless pi <= sigma.
    """
    if not leq(pi, sigma):
        raise LatticeError(f"{pi} is not below {sigma}")
    return _moebius_row(_as_nc(pi), _as_nc(sigma))[_as_nc(sigma)]


def moebius_to_top(pi: SetPartition) -> int:
    """mu(pi, 1_n) via the block sizes of K(pi).

    Uses mu(pi, 1_n) = prod over blocks V of K(pi) of (-1)^(|V|-1) C_{|V|-1};
    agrees with :func:`moebius` and is what the cumulant engine calls.
    """
    out = 1
    for b in kreweras(pi).blocks:
        s = len(b) - 1
        out *= (-1) ** s * catalan(s)
    return out


def _as_nc(p: SetPartition) -> NcPartition:
    if isinstance(p, NcPartition):
        return p
    return NcPartition(p.n, p.blocks)


def interval_partition(n: int, breakpoints: Sequence[int]) -> NcPartition:
    """Interval partition with blocks (i_{j-1}+1, ..., i_j) for breakpoints i_1 < ... < i_m = n."""
    bps = list(breakpoints)
    if n == 0 and not bps:
        return NcPartition.zero(0)
    if not bps or bps[-1] != n:
        raise LatticeError(f"breakpoints {bps} must end at n={n}")
    prev = 0
    blocks = []
    for i in bps:
        if i <= prev:
            raise LatticeError(f"breakpoints {bps} are not strictly increasing from 1")
        blocks.append(tuple(range(prev + 1, i + 1)))
        prev = i
    return _trusted(n, tuple(blocks))


_BLOCK_RE = re.compile(r"\(([^()]*)\)")


def parse_partition(text: str, n: int | None = None, noncrossing: bool = True) -> SetPartition:
    """Parse ``{(1,2,7),(3),(4,6),(5),(8)}``; whitespace is ignored.

    ``n`` defaults to the largest element. An explicit ``n`` adds the
    elements not mentioned as singletons, so ``{(1,3)}`` with n=4 is
    ``{(1,3),(2),(4)}``. Returns an :class:`NcPartition` unless
    ``noncrossing`` is false.
    """
    s = "".join(text.split())
    if not (s.startswith("{") and s.endswith("}")):
        raise LatticeError(f"malformed partition {text!r}")
    body = s[1:-1]
    blocks = []
    pos = 0
    while pos < len(body):
        m = _BLOCK_RE.match(body, pos)
        if m is None:
            raise LatticeError(f"malformed partition {text!r}")
        try:
            blocks.append(tuple(int(x) for x in m.group(1).split(",")))
        except ValueError:
            raise LatticeError(f"malformed block ({m.group(1)}) in {text!r}") from None
        pos = m.end()
        if pos < len(body):
            if body[pos] != ",":
                raise LatticeError(f"malformed partition {text!r}")
            pos += 1
            if pos == len(body):
                raise LatticeError(f"trailing comma in {text!r}")
    if n is None:
        n = max((max(b) for b in blocks), default=0)
    else:
        seen = {x for b in blocks for x in b}
        blocks.extend((x,) for x in range(1, n + 1) if x not in seen)
    cls = NcPartition if noncrossing else SetPartition
    return cls(n, blocks)


def format_partition(p: SetPartition) -> str:
    return "{" + ",".join("(" + ",".join(map(str, b)) + ")" for b in p.blocks) + "}"
