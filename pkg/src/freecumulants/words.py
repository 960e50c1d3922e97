"""Words over a starred alphabet and truncated moment / cumulant tables.

A word is a tuple of :class:`Letter`. Tables map every word of length
1..order over their alphabet to an exact :class:`~fractions.Fraction`.
Tables are either given extensionally or backed by a function that is
evaluated on demand and memoized; both behave identically to callers.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Letter",
    "Word",
    "WordError",
    "TruncationError",
    "MomentFunctional",
    "CumulantTable",
    "parse_word",
    "format_word",
    "adjoint_word",
    "all_words",
    "to_rational",
    "evaluate",
    "same_distribution",
    "substitute",
    "induced_functional",
]


class WordError(ValueError):
    """Malformed word or a letter outside the declared alphabet."""


class TruncationError(WordError):
    """A word is longer than the truncation order of the table it is looked up in."""


@dataclass(frozen=True, order=True)
class Letter:
    var: str
    starred: bool = False

    def __str__(self) -> str:
        return self.var + ("*" if self.starred else "")

    def adjoint(self) -> Letter:
        return Letter(self.var, not self.starred)


Word = tuple[Letter, ...]


def _is_identifier(s: str) -> bool:
    return bool(s) and s.replace("_", "a").isalnum() and not s[0].isdigit()


def parse_word(text: str, alphabet: Iterable[str] | None = None) -> Word:
    """Parse whitespace-separated letters such as ``"a a* a"``.

    With ``alphabet`` given, unknown identifiers are rejected.
    """
    allowed = None if alphabet is None else set(alphabet)
    out = []
    for tok in text.split():
        starred = tok.endswith("*")
        name = tok[:-1] if starred else tok
        if not _is_identifier(name):
            raise WordError(f"malformed letter {tok!r}")
        if allowed is not None and name not in allowed:
            raise WordError(f"unknown variable {name!r} (alphabet {sorted(allowed)})")
        out.append(Letter(name, starred))
    return tuple(out)


def format_word(w: Iterable[Letter]) -> str:
    return " ".join(str(x) for x in w)


def adjoint_word(w: Word) -> Word:
    """(x_1 ... x_n)* = x_n* ... x_1*."""
    return tuple(x.adjoint() for x in reversed(w))


def _letters(alphabet: Sequence[str], star: bool) -> list[Letter]:
    out = []
    for v in alphabet:
        out.append(Letter(v))
        if star:
            out.append(Letter(v, True))
    return out


def all_words(
    alphabet: Sequence[str], max_len: int, min_len: int = 1, star: bool = True
) -> Iterator[Word]:
    """Words by increasing length, then lexicographically in alphabet order (x before x*)."""
    letters = _letters(alphabet, star)
    for n in range(min_len, max_len + 1):
        yield from itertools.product(letters, repeat=n)


def to_rational(value) -> Fraction:
    """Exact rational from an int, Fraction, or ``"p/q"`` / decimal-integer string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        s = value.strip()
        num, _, den = s.partition("/")
        try:
            if den:
                return Fraction(int(num), int(den))
            return Fraction(int(num))
        except (ValueError, ZeroDivisionError):
            raise WordError(f"not an exact rational: {value!r}") from None
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


class _WordTable:
    """Common machinery of moment and cumulant tables."""

    kind = "values"

    def __init__(
        self,
        order: int,
        alphabet: Iterable[str],
        values: Mapping[Word, object] | None = None,
        *,
        star: bool = True,
        default=None,
        source: Callable[[Word], Fraction] | None = None,
    ):
        if order < 1:
            raise WordError(f"truncation order must be positive, got {order}")
        self.order = order
        self.alphabet = tuple(dict.fromkeys(alphabet))
        if not all(_is_identifier(v) for v in self.alphabet):
            raise WordError(f"bad variable names in {self.alphabet}")
        self.star = star
        self._source = source
        self._values: dict[Word, Fraction] = {}
        for w, v in (values or {}).items():
            self._check_word(w)
            if not w:
                raise WordError("the empty word is not a table key")
            self._values[w] = to_rational(v)
        if source is None:
            fill = None if default is None else to_rational(default)
            for w in self.words():
                if w not in self._values:
                    if fill is None:
                        raise WordError(
                            f"{self.kind} table has no value for {format_word(w)!r}"
                            " and no default was given"
                        )
                    self._values[w] = fill

    def _check_word(self, w: Word) -> None:
        if len(w) > self.order:
            raise TruncationError(
                f"word {format_word(w)!r} of length {len(w)} exceeds truncation order {self.order}"
            )
        for x in w:
            if x.var not in self.alphabet:
                raise WordError(f"variable {x.var!r} not in alphabet {list(self.alphabet)}")
            if x.starred and not self.star:
                raise WordError(f"starred letter {x} in a table without adjoints")

    def __getitem__(self, w: Word) -> Fraction:
        try:
            return self._values[w]
        except KeyError:
            pass
        self._check_word(w)
        if not w:
            return self._empty()
        if self._source is None:
            raise WordError(f"no value for {format_word(w)!r}")
        v = to_rational(self._source(w))
        self._values[w] = v
        return v

    def _empty(self) -> Fraction:
        raise WordError(f"{self.kind} of the empty word are undefined")

    def words(self) -> Iterator[Word]:
        return all_words(self.alphabet, self.order, star=self.star)

    def items(self) -> Iterator[tuple[Word, Fraction]]:
        for w in self.words():
            yield w, self[w]

    def materialize(self):
        """Evaluate every entry now; returns self."""
        for _ in self.items():
            pass
        return self

    @property
    def is_lazy(self) -> bool:
        return self._source is not None

    def _derived(self, order, alphabet, star, fn):
        return type(self)(order, alphabet, star=star, source=fn)

    def truncate(self, order: int):
        """The same table restricted to words of length <= order."""
        if order > self.order:
            raise TruncationError(f"cannot extend order {self.order} to {order}")
        return self._derived(order, self.alphabet, self.star, self.__getitem__)

    def restrict(self, variables: Iterable[str]):
        """Sub-table on the words over ``variables`` only."""
        vs = tuple(variables)
        for v in vs:
            if v not in self.alphabet:
                raise WordError(f"variable {v!r} not in alphabet")
        return self._derived(self.order, vs, self.star, self.__getitem__)

    def relabel(self, mapping: Mapping[str, str]):
        """Rename variables; ``mapping`` must be a bijection onto new names."""
        new = tuple(mapping.get(v, v) for v in self.alphabet)
        if len(set(new)) != len(new):
            raise WordError(f"relabelling {dict(mapping)} is not injective")
        back = {mapping.get(v, v): v for v in self.alphabet}

        def fn(w: Word) -> Fraction:
            return self[tuple(Letter(back[x.var], x.starred) for x in w)]

        return self._derived(self.order, new, self.star, fn)

    def __repr__(self) -> str:
        return (
            f"{type(self).__name__}(order={self.order}, alphabet={list(self.alphabet)},"
            f" star={self.star}{', lazy' if self.is_lazy else ''})"
        )


class MomentFunctional(_WordTable):
    """Truncated unital linear functional: phi(empty word) = 1."""

    kind = "moments"

    def _empty(self) -> Fraction:
        return Fraction(1)

    def evaluate(self, w: Word) -> Fraction:
        return self[w]


class CumulantTable(_WordTable):
    """Truncated family of free cumulants k_n(x_1, ..., x_n), n <= order."""

    kind = "cumulants"


def evaluate(phi: MomentFunctional, w: Word) -> Fraction:
    """phi(w); the empty word gives 1, words beyond the order raise TruncationError."""
    return phi[w]


def same_distribution(
    phi1: MomentFunctional, phi2: MomentFunctional, relabel: Mapping[str, str] | None = None
) -> bool:
    """All moments up to the common order agree after renaming phi1's variables."""
    if phi1.order != phi2.order:
        raise TruncationError(f"orders differ: {phi1.order} vs {phi2.order}")
    mapping = dict(relabel or {v: v for v in phi1.alphabet})
    if set(mapping) != set(phi1.alphabet):
        raise WordError("relabelling must be defined on the whole first alphabet")
    if len(set(mapping.values())) != len(mapping) or set(mapping.values()) != set(phi2.alphabet):
        raise WordError("relabelling must be a bijection between the alphabets")
    for w, v in phi1.items():
        if phi2[tuple(Letter(mapping[x.var], x.starred) for x in w)] != v:
            return False
    return True


def substitute(w: Word, substitution: Mapping[str, Word]) -> Word:
    """Expand each letter x into substitution[x] (and x* into its adjoint)."""
    out: list[Letter] = []
    for x in w:
        sub = substitution[x.var]
        out.extend(adjoint_word(sub) if x.starred else sub)
    return tuple(out)


def induced_functional(
    phi: MomentFunctional,
    substitution: Mapping[str, Word | str],
    order: int,
    star: bool = True,
) -> MomentFunctional:
    """Joint distribution of derived variables given as words in phi's letters.

    ``induced_functional(phi, {"y": "u x"}, 6)`` is the *-distribution of
    y = ux up to order 6, evaluated lazily by expanding words.
    """
    sub = {
        k: parse_word(v, phi.alphabet) if isinstance(v, str) else tuple(v)
        for k, v in substitution.items()
    }
    for k, v in sub.items():
        if not v:
            raise WordError(f"substitution for {k!r} is empty")

    def fn(w: Word) -> Fraction:
        return phi[substitute(w, sub)]

    return MomentFunctional(order, sub.keys(), star=star, source=fn)
