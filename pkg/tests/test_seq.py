"""Test sequence representation, shifting and literal parsing."""

from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st
import pytest

from dickson_bounds.seq.seq import (
    Constant,
    Periodic,
    Seq,
    parse_csv_cell,
    parse_seq,
    render_csv_cell,
    render_seq,
    scan_stop,
)
from dickson_bounds.utils.exceptions import (
    ArithmeticOverflowError,
    LiteralOverflowError,
    SeqSyntaxError,
)

naturals = st.integers(min_value=0, max_value=5)


@st.composite
def seqs(draw) -> Seq:
    """Draw a sequence with a short prefix and a constant or periodic tail."""
    prefix = tuple(draw(st.lists(naturals, max_size=5)))
    if draw(st.booleans()):
        return Seq(prefix, Constant(draw(naturals)))
    block = draw(st.lists(naturals, min_size=1, max_size=3))
    return Seq(prefix, Periodic(tuple(block)))


@pytest.mark.parametrize(
    "seq, n, expected",
    [
        (Seq((1, 0), Constant(0)), 0, 1),
        (Seq((), Constant(0)), 57, 0),
        (Seq((5,), Periodic((1, 2))), 4, 2),
        (Seq((5,), Periodic((1, 2))), 1, 1),
        (Seq((1, 0), Constant(7)), 2, 7),
    ],
)
def test_eval(seq: Seq, n: int, expected: int):
    """Test evaluation in the prefix and in both kinds of tail."""
    assert seq.eval(n) == expected


def test_shift_examples():
    """Test shifting drops the first n + 1 values."""
    assert Seq((1, 0), Constant(0)).shift(0).eval(0) == 0
    assert Seq((3, 4, 5), Constant(9)).shift(1).eval(0) == 5
    constant = Seq((), Constant(4))
    assert all(constant.shift(6).eval(i) == 4 for i in range(20))


def test_shift_composes():
    """Test shifting twice reindexes by both offsets."""
    seq = Seq((0, 1, 2, 3, 4, 5), Periodic((7, 8)))
    assert seq.shift(1).shift(2).same_on(seq.shift(4), 30)


@given(seqs(), st.integers(min_value=0, max_value=50))
def test_shift_law(seq: Seq, k: int):
    """Test shifted evaluation matches evaluation at k + 1 + n."""
    shifted = seq.shift(k)
    assert all(shifted.eval(n) == seq.eval(k + 1 + n) for n in range(51))


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1,0", Seq((1, 0), Constant(0))),
        ("1,0;7", Seq((1, 0), Constant(7))),
        ("0%1,2", Seq((0,), Periodic((1, 2)))),
        (";0", Seq((), Constant(0))),
        ("%1,2", Seq((), Periodic((1, 2)))),
        (" 1 , 0 ; 7 ", Seq((1, 0), Constant(7))),
        ("18446744073709551615", Seq((2**64 - 1,), Constant(0))),
    ],
)
def test_parse_seq(text: str, expected: Seq):
    """Test parsing literals with default, constant and periodic tails."""
    assert parse_seq(text) == expected


@pytest.mark.parametrize(
    "text, position",
    [
        ("", 0),
        ("   ", 3),
        ("1,0;", 4),
        ("1,,2", 2),
        ("1;2;3", 3),
        ("a", 0),
        ("1, x", 3),
        ("%", 1),
        (",", 0),
        ("1%", 2),
    ],
)
def test_parse_seq_syntax_errors(text: str, position: int):
    """Test syntax errors report the position of the offending token."""
    with pytest.raises(SeqSyntaxError) as err:
        parse_seq(text)
    assert err.value.position == position
    assert f"at position {position}" in str(err.value)


@pytest.mark.parametrize(
    "text, position",
    [("\u0661,\u0662", 0), ("1,\uff12", 2), ("1,\u00a02", 2), ("\u20031;0", 0)],
)
def test_parse_seq_non_ascii(text: str, position: int):
    """Test digits and whitespace outside ASCII are rejected."""
    with pytest.raises(SeqSyntaxError) as err:
        parse_seq(text)
    assert err.value.position == position


@pytest.mark.parametrize(
    "seq, expected",
    [
        (Seq((1, 2), Constant(0)), (2, 1)),
        (Seq((), Periodic((4, 5, 6))), (0, 3)),
        (Seq((1, 2, 3), Periodic((4, 5))).shift(1), (1, 2)),
        (Seq((1,), Periodic((4, 5))).shift(3), (0, 2)),
    ],
)
def test_cycle(seq: Seq, expected: tuple[int, int]):
    """Test the start and period of the repeating part."""
    assert seq.cycle() == expected


@given(seqs(), st.integers(min_value=0, max_value=10))
def test_cycle_law(seq: Seq, k: int):
    """Test values repeat with the period from the start onwards."""
    start, period = seq.cycle()
    for i in range(start, start + 12):
        assert seq.eval(i + period) == seq.eval(i)
    shifted = seq.shift(k)
    start, period = shifted.cycle()
    assert shifted.eval(start + k * period) == shifted.eval(start)


def test_scan_stop():
    """Test scans stop after one period past the prefix."""
    seq = Seq((1, 2), Periodic((0, 7)))
    assert scan_stop(seq, 1) == 1
    assert scan_stop(seq, 10**18) == 3
    assert scan_stop(parse_seq(";5"), 10**18) == 0


def test_parse_seq_overflow():
    """Test literals of 2^64 and above are rejected as overflows."""
    with pytest.raises(LiteralOverflowError) as err:
        parse_seq("1,18446744073709551616")
    assert err.value.position == 2
    assert isinstance(err.value, ArithmeticOverflowError)


@pytest.mark.parametrize("literal", ["1,0;0", ";0", "0%1,2", "%3", "2,2,2;5"])
def test_render_canonical_literals(literal: str):
    """Test rendering after parsing is the identity on canonical literals."""
    assert render_seq(parse_seq(literal)) == literal


def test_render_adds_default_tail():
    """Test rendering makes the default tail explicit."""
    assert render_seq(parse_seq("1,0")) == "1,0;0"


def test_render_shifted_periodic():
    """Test shifted sequences render from their reindexed form."""
    shifted = parse_seq("5%1,2").shift(1)
    assert render_seq(shifted) == "%2,1"
    assert parse_seq(render_seq(shifted)).same_on(shifted, 20)


@given(seqs())
def test_render_parse_round_trip(seq: Seq):
    """Test the rendered literal denotes the same sequence."""
    assert parse_seq(render_seq(seq)).same_on(seq, 101)


@given(seqs(), st.integers(min_value=0, max_value=10))
def test_render_parse_round_trip_shifted(seq: Seq, k: int):
    """Test the rendered literal of a shifted sequence denotes the same sequence."""
    shifted = seq.shift(k)
    assert parse_seq(render_seq(shifted)).same_on(shifted, 101)


def test_csv_cells():
    """Test CSV cells replace commas inside literals."""
    seq = parse_seq("1,0")
    assert render_csv_cell(seq) == "1.0;0"
    assert parse_csv_cell("1.0;0") == seq
    assert render_csv_cell(parse_seq("0%1,2")) == "0%1.2"


def test_same_on_uses_horizon():
    """Test sequences with different literals but equal values compare equal."""
    assert Seq((1,), Constant(1)).same_on(Seq((), Constant(1)))
    assert not Seq((1,), Constant(0)).same_on(Seq((), Constant(1)))
    assert Seq((1, 2), Periodic((1, 2))).same_on(Seq((), Periodic((1, 2))))


def test_values_window():
    """Test evaluating a window of indices."""
    assert parse_seq("5%1,2").values(1, 5) == [1, 2, 1, 2]


@pytest.mark.parametrize(
    "build",
    [
        lambda: Periodic(()),
        lambda: Seq((-1,), Constant(0)),
        lambda: Constant(2**64),
        lambda: Seq((), Constant(0), offset=-1),
    ],
)
def test_invalid_seq(build):
    """Test construction rejects empty blocks and values outside 64 bits."""
    with pytest.raises(ValueError):
        build()
