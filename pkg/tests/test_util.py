from fractions import Fraction

import pytest
import sympy

from zigzag.errors import SerializationError
from zigzag.util import as_rational, parse_rational, format_rational, parse_rational_list, order_key
from zigzag.util import dumps, loads


class TestRationals:
    @pytest.mark.parametrize("text,value", [
        ("3", sympy.Integer(3)),
        ("-2/4", sympy.Rational(-1, 2)),
        (" 7 / 3 ", sympy.Rational(7, 3)),
        ("+5/1", sympy.Integer(5)),
    ])
    def test_parse(self, text, value):
        assert parse_rational(text) == value

    @pytest.mark.parametrize("text", ["1/0", "1.5", "a/b", "", "1/-2"])
    def test_parse_rejects(self, text):
        with pytest.raises(SerializationError):
            parse_rational(text)

    def test_format(self):
        assert format_rational(sympy.Rational(-2, 6)) == "-1/3"
        assert format_rational(4) == "4/1"
        assert format_rational(0) == "0/1"

    def test_coerce(self):
        assert as_rational(Fraction(3, 6)) == sympy.Rational(1, 2)
        assert as_rational("2/3") == sympy.Rational(2, 3)
        with pytest.raises(ValueError):
            as_rational(0.5)

    def test_list(self):
        assert parse_rational_list("0, 1,1/2,1") == [0, 1, sympy.Rational(1, 2), 1]
        with pytest.raises(SerializationError):
            parse_rational_list(" , ")

    def test_order_key(self):
        values = [sympy.Integer(-1), sympy.Integer(2), sympy.Integer(1), sympy.Rational(-1, 2)]
        assert sorted(values, key = order_key) == [sympy.Rational(-1, 2), 1, -1, 2]


class TestJson:
    def test_dumps_is_stable(self):
        assert dumps({'b' : 1, 'a' : [1, 2]}) == '{\n  "b": 1,\n  "a": [\n    1,\n    2\n  ]\n}\n'

    def test_loads(self):
        assert loads('{"a": 1}') == {'a' : 1}
        with pytest.raises(SerializationError) as e:
            loads('{"a": ', "pair")
        assert "Malformed JSON pair" in str(e.value)
