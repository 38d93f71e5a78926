"""Literal parsing and rendering, including the golden files."""
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from gadic.digits import DigitExpansion
from gadic.errors import ParseError
from gadic.notation import (
    parse_dotted,
    parse_literal,
    parse_tail,
    read_literal_file,
    render_default,
    render_dotted,
    render_tail,
)

DATA = Path(__file__).parent / "data"


class TestDotted:
    def test_basic(self):
        x = parse_dotted("160.191.2", 241)
        assert x.base == 241
        assert x.digits == (2, 191, 160)

    def test_single_token(self):
        assert parse_dotted("0", 10).digits == (0,)

    def test_leading_ellipsis_accepted(self):
        assert parse_dotted("…9.0.4.10.4.4", 11) == parse_dotted("9.0.4.10.4.4", 11)
        assert parse_dotted("...9.0.4.10.4.4", 11) == parse_dotted("9.0.4.10.4.4", 11)

    def test_render_never_writes_ellipsis(self):
        x = DigitExpansion.from_integer(1456041, 11, 6)
        assert render_dotted(x) == "9.0.4.10.4.4"

    def test_digit_at_base_rejected(self):
        with pytest.raises(ParseError):
            parse_dotted("11.0", 11)

    def test_token_too_long(self):
        with pytest.raises(ParseError):
            parse_dotted("1000.2", 2000)

    def test_garbage_token(self):
        with pytest.raises(ParseError):
            parse_dotted("1.x.3", 10)

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_dotted("", 10)
        with pytest.raises(ParseError):
            parse_dotted("…", 10)

    def test_double_dot(self):
        with pytest.raises(ParseError):
            parse_dotted("1..2", 10)

    @given(
        st.integers(min_value=2, max_value=999),
        st.data(),
    )
    def test_roundtrip(self, base, data):
        digits = data.draw(
            st.lists(
                st.integers(min_value=0, max_value=base - 1), min_size=1, max_size=12
            )
        )
        x = DigitExpansion(base, tuple(digits))
        assert parse_dotted(render_dotted(x), base) == x


class TestTail:
    def test_basic(self):
        x = parse_tail("…425781249", 10)
        assert x.to_integer() == 425781249
        assert x.precision == 9

    def test_ellipsis_optional_on_input(self):
        assert parse_tail("425781249", 10) == parse_tail("...425781249", 10)

    def test_render_always_writes_ellipsis(self):
        x = DigitExpansion.from_integer(-1, 10, 6)
        assert render_tail(x) == "…999999"

    def test_base_above_ten_rejected(self):
        with pytest.raises(ParseError):
            parse_tail("123", 11)
        with pytest.raises(ParseError):
            render_tail(DigitExpansion.from_integer(5, 11, 3))

    def test_digit_at_base_rejected(self):
        with pytest.raises(ParseError):
            parse_tail("120", 2)

    def test_leading_zeros_carry_precision(self):
        x = parse_tail("…0032", 10)
        assert x.precision == 4
        assert x.to_integer() == 32

    @given(st.integers(min_value=2, max_value=10), st.data())
    def test_roundtrip(self, base, data):
        digits = data.draw(
            st.lists(
                st.integers(min_value=0, max_value=base - 1), min_size=1, max_size=20
            )
        )
        x = DigitExpansion(base, tuple(digits))
        assert parse_tail(render_tail(x), base) == x


class TestParseLiteral:
    def test_detects_dotted(self):
        assert parse_literal("9.0.4.10.4.4", 11).to_integer() == 1456041

    def test_detects_tail(self):
        assert parse_literal("…999999", 10).to_integer() == 999999

    def test_integer_needs_precision(self):
        with pytest.raises(ParseError):
            parse_literal("728020", 11)

    def test_integer_with_precision(self):
        x = parse_literal("728020", 11, precision=6)
        assert render_dotted(x) == "4.5.7.10.7.7"

    def test_negative_integer(self):
        assert parse_literal("-1", 10, precision=4).digits == (9, 9, 9, 9)

    def test_garbage(self):
        with pytest.raises(ParseError):
            parse_literal("seven", 10, precision=3)

    def test_default_rendering_by_base(self):
        assert render_default(DigitExpansion.from_integer(5, 11, 2)) == "0.5"
        assert render_default(DigitExpansion.from_integer(5, 10, 2)) == "…05"


class TestGoldenFiles:
    def test_base11_dotted_file(self):
        base, values = read_literal_file(
            (DATA / "base11_literals.txt").read_text(encoding="utf-8")
        )
        assert base == 11
        assert [render_dotted(v) for v in values] == [
            "9.0.4.10.4.4",
            "8.5.9.0.4.10.4.4",
            "4.5.7.10.7.7",
            "6.5.3.0.3.3",
            "5.1.3.9.2.1",
        ]
        assert values[0].to_integer() == 1456041  # sqrt 5 to six digits
        assert values[2].to_integer() == 728020  # period a

    def test_base10_tail_file(self):
        base, values = read_literal_file(
            (DATA / "base10_tails.txt").read_text(encoding="utf-8")
        )
        assert base == 10
        assert values[0].to_integer() == 425781249
        assert values[1].to_integer() == 999999999
        assert values[2].to_integer() == 918212890625
        assert values[3].precision == 7

    def test_roundtrip_through_render(self):
        text = (DATA / "base11_literals.txt").read_text(encoding="utf-8")
        base, values = read_literal_file(text)
        lines = [line for line in text.splitlines() if line and "=" not in line]
        assert [render_dotted(v) for v in values] == lines

    def test_missing_header(self):
        with pytest.raises(ParseError):
            read_literal_file("9.0.4\n")

    def test_bad_header(self):
        with pytest.raises(ParseError):
            read_literal_file("base=pi\n1.2\n")
