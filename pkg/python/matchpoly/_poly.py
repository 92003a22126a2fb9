'''
Exact arithmetic in the field of fractions of Z[x].

Coefficient lists are kept in the dense "highest degree first" convention of
``sympy.polys`` so that the low-level ``dup_*`` routines can be used directly.
The public ``numerator``/``denominator`` properties present them indexed by
degree instead.
'''
import re
from fractions import Fraction

from sympy.polys.densearith import dup_add, dup_mul, dup_neg, dup_sub
from sympy.polys.densebasic import dup_convert, dup_strip
from sympy.polys.densetools import dup_eval
from sympy.polys.domains import QQ, ZZ
from sympy.polys.euclidtools import dup_cancel

from ._common import DivisionByZero, FormatError, NotLaurent, PoleAtPoint

_ONE = (1,)


def _to_dup(coeffs):
    return [ZZ(int(c)) for c in coeffs]


def _from_dup(f):
    return tuple(int(c) for c in f)


class PolyFrac:
    '''
    A canonical fraction p/q of integer polynomials.

    The canonical form has the common factor of p and q cancelled (content
    included), a denominator with positive leading coefficient, and zero stored
    as 0/1. Two PolyFrac values are equal iff their canonical forms are equal.
    '''
    __slots__ = ('_num', '_den')

    def __init__(self, num=(), den=_ONE):
        '''``num`` and ``den`` are coefficient sequences, highest degree first.'''
        self._num, self._den = _canonical(dup_strip(_to_dup(num)), dup_strip(_to_dup(den)))

    @classmethod
    def _raw(cls, num, den):
        result = object.__new__(cls)
        result._num = num
        result._den = den
        return result

    @classmethod
    def from_coefficients(cls, numerator, denominator=(1,)):
        '''Build from coefficient sequences indexed by degree (constant term first).'''
        return cls(tuple(reversed(tuple(numerator))), tuple(reversed(tuple(denominator))))

    @classmethod
    def constant(cls, value):
        if isinstance(value, PolyFrac):
            return value
        if isinstance(value, Fraction):
            return cls((value.numerator,), (value.denominator,))
        return cls((int(value),))

    @property
    def numerator(self):
        return tuple(reversed(self._num))

    @property
    def denominator(self):
        return tuple(reversed(self._den))

    def is_zero(self):
        return not self._num

    def is_polynomial(self):
        return self._den == _ONE

    def __bool__(self):
        return bool(self._num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyFrac.constant(other)
        if not isinstance(other, PolyFrac):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        # constants hash like the equal int/Fraction
        if len(self._num) <= 1 and len(self._den) == 1:
            return hash(Fraction(self._num[0] if self._num else 0, self._den[0]))
        return hash((self._num, self._den))

    def __neg__(self):
        return PolyFrac._raw(_from_dup(dup_neg(_to_dup(self._num), ZZ)), self._den)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other._num:
            return self
        if not self._num:
            return other
        a_num, a_den = _to_dup(self._num), _to_dup(self._den)
        b_num, b_den = _to_dup(other._num), _to_dup(other._den)
        if self._den == other._den:
            num = dup_add(a_num, b_num, ZZ)
            if self._den == _ONE:
                return PolyFrac._raw(_from_dup(num), _ONE)
            return PolyFrac._raw(*_canonical(num, a_den))
        num = dup_add(dup_mul(a_num, b_den, ZZ), dup_mul(b_num, a_den, ZZ), ZZ)
        return PolyFrac._raw(*_canonical(num, dup_mul(a_den, b_den, ZZ)))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self._num or not other._num:
            return ZERO
        num = dup_mul(_to_dup(self._num), _to_dup(other._num), ZZ)
        if self._den == _ONE and other._den == _ONE:
            return PolyFrac._raw(_from_dup(num), _ONE)
        den = dup_mul(_to_dup(self._den), _to_dup(other._den), ZZ)
        return PolyFrac._raw(*_canonical(num, den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other._num:
            raise DivisionByZero('division by the zero fraction')
        if not self._num:
            return ZERO
        num = dup_mul(_to_dup(self._num), _to_dup(other._den), ZZ)
        den = dup_mul(_to_dup(self._den), _to_dup(other._num), ZZ)
        return PolyFrac._raw(*_canonical(num, den))

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else ONE / self
        result = ONE
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __str__(self):
        return format_polyfrac(self)

    def __repr__(self):
        return f"PolyFrac('{format_polyfrac(self)}')"


def _coerce(value):
    if isinstance(value, PolyFrac):
        return value
    if isinstance(value, (int, Fraction)):
        return PolyFrac.constant(value)
    return None


def _canonical(num, den):
    if not den:
        raise DivisionByZero('the denominator of a fraction cannot be zero')
    if not num:
        return (), _ONE
    if len(den) == 1 and den[0] == 1:
        return _from_dup(num), _ONE
    p, q = dup_cancel(num, den, ZZ)
    return _from_dup(p), _from_dup(q)


ZERO = PolyFrac._raw((), _ONE)
ONE = PolyFrac._raw(_ONE, _ONE)
X = PolyFrac._raw((1, 0), _ONE)


def monomial(weight):
    '''x**weight; a negative weight gives 1/x**(-weight).'''
    weight = int(weight)
    if weight >= 0:
        return PolyFrac._raw((1,) + (0,) * weight, _ONE)
    return PolyFrac._raw(_ONE, (1,) + (0,) * (-weight))


def as_laurent(f):
    '''
    Return the exponent -> coefficient map of ``f`` when its reduced
    denominator is x**k; raise NotLaurent otherwise.
    '''
    den = f._den
    if den[0] != 1 or any(den[1:]):
        raise NotLaurent(f'{f} is not a Laurent polynomial: its denominator has a non-monomial factor')
    shift = len(den) - 1
    degree = len(f._num) - 1
    return {degree - i - shift: c for i, c in enumerate(f._num) if c}


def evaluate(f, point):
    '''Exact value of ``f`` at a rational point, as a Fraction.'''
    point = Fraction(point)
    a = QQ(point.numerator, point.denominator)
    den = dup_eval(dup_convert(_to_dup(f._den), ZZ, QQ), a, QQ)
    if not den:
        raise PoleAtPoint(f'{f} has a pole at x = {point}')
    num = dup_eval(dup_convert(_to_dup(f._num), ZZ, QQ), a, QQ)
    value = QQ.quo(num, den)
    return Fraction(int(QQ.numer(value)), int(QQ.denom(value)))


def _format_poly(coeffs):
    degree = len(coeffs) - 1
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        d = degree - i
        terms.append(f'{c}*x^{d}' if d else f'{c}')
    return '+'.join(terms) if terms else '0'


def format_polyfrac(f):
    '''Sparse text: ``c*x^k`` terms joined by ``+`` by descending exponent, fractions as ``(num)/(den)``.'''
    if f._den == _ONE:
        return _format_poly(f._num)
    return f'({_format_poly(f._num)})/({_format_poly(f._den)})'


_TERM = r'(?:\d+(?:\*?x(?:\^\d+)?)?|x(?:\^\d+)?)'
_SIGN = r'(?:\+-|[+-])'
_POLY = re.compile(rf'{_SIGN}?{_TERM}(?:{_SIGN}{_TERM})*')
_SIGNED_TERM = re.compile(rf'({_SIGN}?)({_TERM})')
_FRACTION = re.compile(r'\((.*)\)/\((.*)\)')


def _parse_poly(text):
    if not _POLY.fullmatch(text):
        raise FormatError(f"cannot parse polynomial '{text}'")
    terms = {}
    for sign, term in _SIGNED_TERM.findall(text):
        coefficient, _, power = term.partition('x')
        coefficient = coefficient.rstrip('*')
        c = int(coefficient) if coefficient else 1
        if 'x' not in term:
            d = 0
        else:
            d = int(power[1:]) if power else 1
        terms[d] = terms.get(d, 0) + (-c if sign.endswith('-') else c)
    if not terms:
        return ()
    degree = max(terms)
    return tuple(terms.get(d, 0) for d in range(degree, -1, -1))


def parse_polyfrac(text):
    '''Inverse of format_polyfrac; also accepts implicit unit coefficients and spaces.'''
    text = ''.join(str(text).split())
    match = _FRACTION.fullmatch(text)
    if match:
        den = _parse_poly(match.group(2))
        if not dup_strip(_to_dup(den)):
            raise FormatError(f"zero denominator in '{text}'")
        return PolyFrac(_parse_poly(match.group(1)), den)
    return PolyFrac(_parse_poly(text))
