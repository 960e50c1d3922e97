from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from freecumulants.free import haar_unitary
from freecumulants.words import (
    CumulantTable,
    Letter,
    MomentFunctional,
    TruncationError,
    WordError,
    adjoint_word,
    all_words,
    evaluate,
    format_word,
    induced_functional,
    parse_word,
    same_distribution,
    substitute,
    to_rational,
)

a, a_, u, u_ = Letter("a"), Letter("a", True), Letter("u"), Letter("u", True)


def test_parse_word():
    assert parse_word("a a* a") == (a, a_, a)
    assert parse_word("") == ()
    assert parse_word("u u*", {"u"}) == (u, u_)
    assert parse_word("  x_1   y* ") == (Letter("x_1"), Letter("y", True))


@pytest.mark.parametrize("text", ["a**", "1a", "a-b", "*"])
def test_parse_word_malformed(text):
    with pytest.raises(WordError):
        parse_word(text)


def test_parse_word_unknown_variable():
    with pytest.raises(WordError):
        parse_word("a b", {"a"})


def test_adjoint():
    assert adjoint_word(parse_word("a b* c")) == parse_word("c* b a*")


def test_all_words_order_and_count():
    ws = list(all_words(["a"], 2))
    assert [format_word(w) for w in ws] == ["a", "a*", "a a", "a a*", "a* a", "a* a*"]
    assert sum(1 for _ in all_words(["a", "b"], 3, star=False)) == 2 + 4 + 8


def test_to_rational():
    assert to_rational("3/6") == Fraction(1, 2)
    assert to_rational(" -4 ") == -4
    assert to_rational(7) == 7
    with pytest.raises(WordError):
        to_rational("0.5")
    with pytest.raises(WordError):
        to_rational("1/0")
    with pytest.raises(TypeError):
        to_rational(0.5)
    with pytest.raises(TypeError):
        to_rational(True)


def test_evaluate_unital_and_truncated():
    phi = MomentFunctional(2, ["a"], {(a,): 3}, default=0)
    assert evaluate(phi, ()) == 1
    assert evaluate(phi, (a,)) == 3
    assert evaluate(phi, (a, a_)) == 0
    with pytest.raises(TruncationError):
        evaluate(phi, (a, a, a))
    with pytest.raises(WordError):
        evaluate(phi, (u,))


def test_haar_values():
    h = haar_unitary(6)
    assert evaluate(h, ()) == 1
    assert evaluate(h, (u,)) == 0
    assert evaluate(h, (u, u_)) == 1
    assert evaluate(h, parse_word("u u u* u*")) == 1
    assert evaluate(h, (u, u)) == 0


def test_missing_values_need_default():
    with pytest.raises(WordError):
        MomentFunctional(2, ["a"], {(a,): 1})
    with pytest.raises(WordError):
        CumulantTable(1, ["a"], {(): 1}, default=0)


def test_cumulants_of_empty_word_undefined():
    k = CumulantTable(2, ["a"], default=0)
    with pytest.raises(WordError):
        k[()]


def test_star_free_tables_reject_adjoints():
    phi = MomentFunctional(2, ["a"], star=False, default=0)
    assert len(list(phi.words())) == 2
    with pytest.raises(WordError):
        phi[(a_,)]


def test_same_distribution():
    assert same_distribution(haar_unitary(5), haar_unitary(5))
    assert same_distribution(haar_unitary(5, "u"), haar_unitary(5, "v"), {"u": "v"})
    other = MomentFunctional(
        5, ["u"], {w: haar_unitary(5)[w] for w in all_words(["u"], 5)} | {(u,) * 5: 1}
    )
    assert not same_distribution(haar_unitary(5), other)
    with pytest.raises(TruncationError):
        same_distribution(haar_unitary(4), haar_unitary(5))
    with pytest.raises(WordError):
        same_distribution(haar_unitary(4, "u"), haar_unitary(4, "v"))


def test_truncate_restrict_relabel():
    phi = MomentFunctional(3, ["a", "b"], {(a,): 2}, default=0, star=False)
    t = phi.truncate(2)
    assert t.order == 2 and t[(a,)] == 2
    with pytest.raises(TruncationError):
        phi.truncate(4)
    r = phi.restrict(["a"])
    assert r.alphabet == ("a",)
    x = phi.relabel({"a": "x"})
    assert x[(Letter("x"),)] == 2
    with pytest.raises(WordError):
        phi.relabel({"a": "b"})


def test_substitute_and_induced():
    sub = {"y": parse_word("u a")}
    assert substitute(parse_word("y y*"), sub) == parse_word("u a a* u*")
    phi = MomentFunctional(4, ["u", "a"], default=1)
    psi = induced_functional(phi, {"y": "u a"}, 2)
    assert psi.alphabet == ("y",) and psi.order == 2
    assert psi[parse_word("y y*")] == 1
    with pytest.raises(TruncationError):
        psi[parse_word("y y y")]


letters = st.builds(Letter, st.sampled_from(["a", "b", "x_1", "u2"]), st.booleans())


@given(st.lists(letters, max_size=8))
def test_word_text_round_trip(w):
    w = tuple(w)
    assert parse_word(format_word(w)) == w
    assert adjoint_word(adjoint_word(w)) == w


@given(st.fractions())
def test_rational_text_round_trip(x):
    assert to_rational(str(x)) == x
