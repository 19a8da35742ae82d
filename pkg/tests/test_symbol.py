import pytest
from hypothesis import given

from knotsym import (
    EMPTY,
    Crossing,
    DuplicateLabel,
    EmptySymbol,
    LabelOutOfRange,
    LabelRing,
    MainArc,
    MissingLabel,
    SelfPairedLabel,
    Symbol,
    SymbolSyntaxError,
    apply_beta,
    canonical_form,
    symbol_equal,
    validate,
)
from knotsym.corpus import LEFT_TREFOIL, THREE_LOOPS, TREFOIL
from knotsym.symbol import height, partner

from conftest import symbols


def test_validate_examples():
    assert validate([]) == EMPTY and EMPTY.order == 0
    t = validate([(1, 4, 1), (5, 2, 1), (3, 6, 1)])
    assert t.order == 3 and t == TREFOIL
    with pytest.raises(DuplicateLabel):
        validate([(1, 2, 1), (2, 3, -1)])


@pytest.mark.parametrize("raw, err", [
    ([(1, 1, 1)], SelfPairedLabel),
    ([(0, 1, 1)], LabelOutOfRange),
    ([(1, 3, 1)], MissingLabel),
    ([(1, 2, 1), (3, 5, 1)], MissingLabel),
    ([(1, 2, 0)], SymbolSyntaxError),
    ([(1, 2)], SymbolSyntaxError),
    ([("1", 2, 1)], SymbolSyntaxError),
])
def test_validate_errors(raw, err):
    with pytest.raises(err):
        validate(raw)


def test_signs_accept_text():
    assert Symbol([(1, 2, "+")]) == Symbol([(1, 2, 1)])
    assert Symbol([(1, 2, "-")]).crossings[0].sign == -1


def test_canonical_form():
    s = Symbol([(5, 2, 1), (1, 4, 1), (3, 6, 1)])
    assert canonical_form(s) == (Crossing(1, 4, 1), Crossing(3, 6, 1), Crossing(5, 2, 1))
    assert canonical_form(EMPTY) == ()
    assert canonical_form(Symbol([(4, 1, 1), (3, 2, -1)])) == (Crossing(3, 2, -1), Crossing(4, 1, 1))


def test_symbol_equal():
    a = Symbol([(1, 4, 1), (5, 2, 1), (3, 6, 1)])
    b = Symbol([(5, 2, 1), (3, 6, 1), (1, 4, 1)])
    assert symbol_equal(a, b) and a == b and hash(a) == hash(b)
    assert symbol_equal(apply_beta(TREFOIL, 2), apply_beta(TREFOIL, 4))
    assert not symbol_equal(TREFOIL, LEFT_TREFOIL)


def test_height_and_partner():
    assert height(TREFOIL, 1) == 1 and height(TREFOIL, 4) == -1
    assert height(THREE_LOOPS, 4) == -1
    assert partner(TREFOIL, 2) == 5 and partner(TREFOIL, 5) == 2
    assert partner(THREE_LOOPS, 3) == 4
    with pytest.raises(LabelOutOfRange):
        TREFOIL.height(7)
    with pytest.raises(LabelOutOfRange):
        TREFOIL.partner(0)


def test_label_ring():
    r = LabelRing(6)
    assert r.succ(6) == 1 and r.pred(1) == 6
    assert all(r.succ(r.pred(x)) == x for x in r)
    assert [y for x in r for y in r if r.consecutive(x, y)] == [2, 3, 4, 5, 6, 1]
    assert r.wrap(0) == 6 and r.wrap(13) == 1
    with pytest.raises(ValueError):
        LabelRing(3)
    with pytest.raises(LabelOutOfRange):
        r.succ(7)


def test_main_arc():
    r = LabelRing(4)
    f = MainArc(4, 1)
    assert f.endpoints(r) == (4, 1)
    assert (-f).endpoints(r) == (1, 4)
    assert -(-f) == f and (-f).base == 4
    assert str(MainArc(15, 1)) == "15+" and str(MainArc(3, -1)) == "3-"


def test_empty_symbol_has_no_ring():
    assert not EMPTY and str(EMPTY) == "" and list(EMPTY.labels) == []
    with pytest.raises(EmptySymbol):
        EMPTY.ring


def test_mirror():
    assert TREFOIL.mirror() == LEFT_TREFOIL and LEFT_TREFOIL.mirror() == TREFOIL


@given(symbols())
def test_structural_invariants(s):
    labels = sorted(x for c in s for x in c.labels())
    assert labels == list(range(1, 2 * s.order + 1))
    assert sum(s.height(x) == 1 for x in s.labels) == s.order
    for x in s.labels:
        y = s.partner(x)
        assert y != x and s.partner(y) == x
        assert s.height(x) == -s.height(y)
        assert s.crossing_at(x) == s.crossing_at(y)
    assert Symbol(reversed(s.crossings)) == s
