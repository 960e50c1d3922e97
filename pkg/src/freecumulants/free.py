"""Free products, Haar unitaries and R-diagonal elements.

Freeness is built in through cumulants (mixed cumulants vanish) and
checked through moments (alternating products of centered elements have
zero expectation). Derived variables such as ux, ab or a^r are handled
extensionally by expanding their words into the base letters.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby
from typing import Mapping, Sequence

from .cumulants import (
    IntervalGrouping,
    bracket_cumulant,
    cumulant_of_products,
    cumulants_from_moments,
    k_pi_eval,
    moments_from_cumulants,
)
from .partitions import LatticeError, NcPartition, iter_nc, kreweras
from .words import (
    CumulantTable,
    Letter,
    MomentFunctional,
    TruncationError,
    Word,
    WordError,
    all_words,
    induced_functional,
    same_distribution,
    substitute,
    to_rational,
)

__all__ = [
    "SpecError",
    "SpecTruncationError",
    "RDiagonalSpec",
    "free_product_cumulants",
    "free_product",
    "check_freeness_moment_form",
    "haar_unitary",
    "is_alternating",
    "is_r_diagonal",
    "rdiag_cumulant_table",
    "r_diagonal_from_spec",
    "spec_from_cumulants",
    "free_mult_cumulants",
    "sandwich_cumulants",
    "sandwich_kreweras_form",
    "rdiag_aastar_cumulants",
    "rdiag_product_cumulants",
    "verify_ux_invariance",
    "power_cumulants",
    "verify_power_rdiag",
]

ZERO = Fraction(0)
ONE = Fraction(1)


class SpecError(ValueError):
    """Malformed R-diagonal spec."""


class SpecTruncationError(SpecError, TruncationError):
    """alpha_n, beta_n or a cumulant requested beyond the spec's order."""


@dataclass(frozen=True)
class RDiagonalSpec:
    """Alternating cumulants of an R-diagonal element a.

    ``alpha[n-1]`` is k_2n(a, a*, ..., a, a*) and ``beta[n-1]`` is
    k_2n(a*, a, ..., a*, a), for 2n <= order.
    """

    order: int
    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]

    def __init__(self, order: int, alpha: Sequence, beta: Sequence):
        if order < 1:
            raise SpecError(f"order must be positive, got {order}")
        al = tuple(to_rational(x) for x in alpha)
        be = tuple(to_rational(x) for x in beta)
        if len(al) != order // 2 or len(be) != order // 2:
            raise SpecError(
                f"order {order} needs {order // 2} alpha and beta values,"
                f" got {len(al)} and {len(be)}"
            )
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "alpha", al)
        object.__setattr__(self, "beta", be)

    def a(self, n: int) -> Fraction:
        """alpha_n (1-based)."""
        if not 1 <= n <= len(self.alpha):
            raise SpecTruncationError(f"alpha_{n} is beyond the spec's order {self.order}")
        return self.alpha[n - 1]

    def b(self, n: int) -> Fraction:
        """beta_n (1-based)."""
        if not 1 <= n <= len(self.beta):
            raise SpecTruncationError(f"beta_{n} is beyond the spec's order {self.order}")
        return self.beta[n - 1]

    def swapped(self) -> RDiagonalSpec:
        """Spec of a* (alpha and beta exchanged)."""
        return RDiagonalSpec(self.order, self.beta, self.alpha)


# -- freeness ---------------------------------------------------------------


def free_product_cumulants(tables: Sequence[CumulantTable], order: int | None = None) -> CumulantTable:
    """Joint cumulants: marginal ones on single-family words, 0 on mixed words."""
    if not tables:
        raise WordError("free product of no factors")
    owner: dict[str, int] = {}
    for i, t in enumerate(tables):
        for v in t.alphabet:
            if v in owner:
                raise WordError(f"variable {v!r} appears in two factors")
            owner[v] = i
    stars = {t.star for t in tables}
    if len(stars) != 1:
        raise WordError("cannot mix starred and non-starred factors")
    order = order or min(t.order for t in tables)

    def fn(w: Word) -> Fraction:
        fams = {owner[x.var] for x in w}
        if len(fams) > 1:
            return ZERO
        return tables[fams.pop()][w]

    return CumulantTable(order, list(owner), star=stars.pop(), source=fn)


def free_product(marginals: Sequence[MomentFunctional], order: int | None = None) -> MomentFunctional:
    """Joint functional making the marginals' variable sets free.

    ``order`` defaults to the smallest marginal order. A larger order is
    allowed; a word then fails with :class:`TruncationError` only if it
    needs a single-family cumulant beyond that family's own order.
    """
    if len(marginals) == 1 and order in (None, marginals[0].order):
        return marginals[0]
    k = free_product_cumulants([cumulants_from_moments(m) for m in marginals], order)
    return moments_from_cumulants(k)


def _runs(w: Word, fam: Mapping[str, int]) -> list[Word]:
    return [tuple(g) for _, g in groupby(w, key=lambda x: fam[x.var])]


def check_freeness_moment_form(
    phi: MomentFunctional, fam: Mapping[str, int], order: int | None = None
) -> bool:
    """Centered alternating products have zero expectation, up to total length ``order``.

    A word splits uniquely into maximal runs from one family; each run w_i
    is replaced by w_i - phi(w_i) 1 and the product is expanded.
    """
    order = order or phi.order
    if set(fam) != set(phi.alphabet):
        raise WordError("family assignment must cover exactly the alphabet")
    for w in all_words(phi.alphabet, order, min_len=2, star=phi.star):
        runs = _runs(w, fam)
        if len(runs) < 2:
            continue
        means = [phi[r] for r in runs]
        total = ZERO
        for mask in range(1 << len(runs)):
            coeff = ONE
            kept: list[Letter] = []
            for i, r in enumerate(runs):
                if mask >> i & 1:
                    kept.extend(r)
                else:
                    coeff *= -means[i]
                    if not coeff:
                        break
            if coeff:
                total += coeff * phi[tuple(kept)]
        if total:
            return False
    return True


def haar_unitary(order: int, var: str = "u") -> MomentFunctional:
    """phi(w) = 1 if w reduces to 1 under u u* = u* u = 1, else 0."""

    def fn(w: Word) -> Fraction:
        balance = sum(-1 if x.starred else 1 for x in w)
        return ONE if balance == 0 else ZERO

    return MomentFunctional(order, [var], source=fn)


# -- R-diagonal elements -----------------------------------------------------


def is_alternating(w: Word, var: str | None = None) -> bool:
    """Even length and strictly alternating stars, all letters one variable."""
    if not w:
        return False
    var = var or w[0].var
    if any(x.var != var for x in w):
        raise WordError(f"letters other than {var} and {var}* in {w}")
    if len(w) % 2:
        return False
    return all(w[i].starred != w[i + 1].starred for i in range(len(w) - 1))


def is_r_diagonal(phi: MomentFunctional, var: str | None = None) -> bool:
    """All non-alternating *-cumulants of ``var`` vanish up to phi's order."""
    var = var or phi.alphabet[0]
    if var not in phi.alphabet:
        raise WordError(f"{var!r} not in alphabet")
    if not phi.star:
        raise WordError("R-diagonality needs an alphabet with adjoints")
    k = cumulants_from_moments(phi.restrict([var]))
    return all(k[w] == 0 for w in k.words() if not is_alternating(w, var))


def rdiag_cumulant_table(spec: RDiagonalSpec, var: str = "a") -> CumulantTable:
    """Cumulant table with alpha/beta on alternating words and zeros elsewhere."""

    def fn(w: Word) -> Fraction:
        if not is_alternating(w, var):
            return ZERO
        n = len(w) // 2
        return spec.b(n) if w[0].starred else spec.a(n)

    return CumulantTable(spec.order, [var], source=fn)


def r_diagonal_from_spec(spec: RDiagonalSpec, var: str = "a") -> MomentFunctional:
    return moments_from_cumulants(rdiag_cumulant_table(spec, var))


def spec_from_cumulants(k: CumulantTable, var: str | None = None) -> RDiagonalSpec:
    """Read alpha_n, beta_n off a cumulant table."""
    var = var or k.alphabet[0]
    a, s = Letter(var), Letter(var, True)
    half = k.order // 2
    alpha = [k[(a, s) * n] for n in range(1, half + 1)]
    beta = [k[(s, a) * n] for n in range(1, half + 1)]
    return RDiagonalSpec(k.order, alpha, beta)


# -- closed forms for products of free variables -----------------------------


def _same_len(*ws: Sequence) -> int:
    n = len(ws[0])
    if any(len(w) != n for w in ws):
        raise LatticeError("arguments must have the same length")
    return n


def free_mult_cumulants(w_a: Word, w_b: Word, k_a: CumulantTable, k_b: CumulantTable) -> Fraction:
    """k_n(a_1 b_1, ..., a_n b_n) = sum over pi of k_pi[a] k_K(pi)[b], {a_i} free from {b_i}."""
    n = _same_len(w_a, w_b)
    total = ZERO
    for pi in iter_nc(n):
        v = k_pi_eval(pi, w_a, k_a)
        if v:
            total += v * k_pi_eval(kreweras(pi), w_b, k_b)
    return total


def _product_cumulant(arg: Word, s: int, k: CumulantTable) -> Fraction:
    # k_s(arg, ..., arg) with each argument the product spelled by ``arg``
    g = IntervalGrouping.from_lengths([len(arg)] * s)
    return cumulant_of_products(NcPartition.one(s), g, tuple(arg) * s, k)


def sandwich_cumulants(w_a: Word, b: Word, c: Word, k_joint: CumulantTable) -> Fraction:
    """k_n(b a_1 c, ..., b a_n c) for {a_i} free from {b, c}.

    Sum over pi in NC(n) of k_pi[a] times, for K(pi) = {V_1, ..., V_r} with
    V_r the block containing n, k_|V_r|(bc, ..., bc) and the bracket
    cumulants k_|V_i|(-|c, bc, ..., bc, b|-) of the other blocks.
    """
    n = len(w_a)
    if n == 0:
        raise LatticeError("need at least one argument")
    bc = tuple(b) + tuple(c)
    total = ZERO
    for pi in iter_nc(n):
        v = k_pi_eval(pi, w_a, k_joint)
        if not v:
            continue
        for blk in kreweras(pi).blocks:
            s = len(blk)
            if n in blk:
                v *= _product_cumulant(bc, s, k_joint)
            else:
                v *= bracket_cumulant(tuple(c), [bc] * (s - 1), tuple(b), k_joint)
            if not v:
                break
        total += v
    return total


def sandwich_kreweras_form(w_a: Word, b: Word, c: Word, k_joint: CumulantTable) -> Fraction:
    """sum over pi of k_pi[a] k_K(pi)[cb, ..., cb]; equals the sandwich cumulant for traces."""
    n = len(w_a)
    cb = tuple(c) + tuple(b)
    total = ZERO
    for pi in iter_nc(n):
        v = k_pi_eval(pi, w_a, k_joint)
        if not v:
            continue
        for blk in kreweras(pi).blocks:
            v *= _product_cumulant(cb, len(blk), k_joint)
        total += v
    return total


def rdiag_aastar_cumulants(spec: RDiagonalSpec, n: int) -> Fraction:
    """k_n(aa*, ..., aa*): alpha on the block containing 1, beta on all others."""
    if n < 1 or 2 * n > spec.order:
        raise SpecTruncationError(f"k_{n}(aa*, ...) needs order >= {2 * n}, spec has {spec.order}")
    total = ZERO
    for pi in iter_nc(n):
        first, *rest = pi.blocks
        v = spec.a(len(first))
        for blk in rest:
            v *= spec.b(len(blk))
        total += v
    return total


def rdiag_product_cumulants(spec_a: RDiagonalSpec, spec_b: RDiagonalSpec, n: int) -> Fraction:
    """k_2n(ab, b*a*, ..., ab, b*a*) for free R-diagonal a and b.

    Sum over pi in NC(2n) whose blocks lie entirely on odd or entirely on
    even positions: alpha of a on the block containing 1, beta of a on the
    other odd blocks, alpha of b on the even blocks.
    """
    if n < 1 or 2 * n > spec_a.order or 2 * n > spec_b.order:
        raise SpecTruncationError(f"k_{2 * n}(ab, b*a*, ...) exceeds the specs' orders")
    total = ZERO
    for pi in iter_nc(2 * n):
        v = ONE
        for blk in pi.blocks:
            parity = blk[0] % 2
            if any(x % 2 != parity for x in blk):
                v = ZERO
                break
            if parity == 0:
                v *= spec_b.a(len(blk))
            elif blk[0] == 1:
                v *= spec_a.a(len(blk))
            else:
                v *= spec_a.b(len(blk))
        total += v
    return total


# -- verification of structural statements ------------------------------------


def _fresh(name: str, taken: Sequence[str]) -> str:
    out, i = name, 1
    while out in taken:
        out = f"{name}{i}"
        i += 1
    return out


def verify_ux_invariance(phi_x: MomentFunctional, order: int | None = None) -> bool:
    """(ux, x*u*) has the *-distribution of (x, x*) for u Haar and *-free from x."""
    if len(phi_x.alphabet) != 1 or not phi_x.star:
        raise WordError("expected the *-distribution of a single variable")
    order = order or phi_x.order
    x = phi_x.alphabet[0]
    u = _fresh("u", phi_x.alphabet)
    joint = free_product([haar_unitary(2 * order, u), phi_x.truncate(order)], 2 * order)
    ux = induced_functional(joint, {x: (Letter(u), Letter(x))}, order)
    return same_distribution(ux, phi_x.truncate(order))


def power_cumulants(k: CumulantTable, var: str, factors: Word, order: int) -> CumulantTable:
    """*-cumulants of the product spelled by ``factors``, via sums over NC(n).

    The new variable is called ``var``; entries of length m use the
    letters of m copies of ``factors`` (or their adjoints).
    """
    r = len(factors)

    def fn(w: Word) -> Fraction:
        expanded = substitute(w, {var: factors})
        g = IntervalGrouping.from_lengths([r] * len(w))
        return cumulant_of_products(NcPartition.one(len(w)), g, expanded, k)

    return CumulantTable(order, [var], source=fn)


def verify_power_rdiag(spec: RDiagonalSpec, r: int, order: int | None = None) -> bool:
    """a^r is R-diagonal and has the *-distribution of a_1 ... a_r for *-free copies a_i.

    Checked on words of length <= order // r in a^r, so cumulants of up
    to ``order`` letters of a are summed over NC(order).
    """
    if r < 1:
        raise SpecError("power must be positive")
    order = order or spec.order
    if order > spec.order:
        raise TruncationError(f"order {order} exceeds the spec's order {spec.order}")
    m = order // r
    if m < 1:
        raise TruncationError(f"order {order} leaves no words in a^{r}")
    ka = rdiag_cumulant_table(spec, "a")
    power = power_cumulants(ka, "b", (Letter("a"),) * r, m)
    if any(power[w] != 0 for w in power.words() if not is_alternating(w, "b")):
        return False

    copies = [f"a{i}" for i in range(1, r + 1)]
    joint_k = free_product_cumulants([ka.relabel({"a": name}) for name in copies], order)
    prod = power_cumulants(joint_k, "b", tuple(Letter(name) for name in copies), m)
    if any(power[w] != prod[w] for w in power.words()):
        return False

    phi_power = induced_functional(moments_from_cumulants(ka), {"b": (Letter("a"),) * r}, m)
    phi_prod = induced_functional(
        moments_from_cumulants(joint_k), {"b": tuple(Letter(name) for name in copies)}, m
    )
    return same_distribution(phi_power, phi_prod)
