"""Dense polynomials in q with integer coefficients."""

from __future__ import annotations

from itertools import zip_longest
from typing import Iterable, Union


class QPolynomial:
    """Immutable polynomial ``sum c[d] q^d``; trailing zeros are dropped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> QPolynomial:
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, q: Union[int, float]) -> Union[int, float]:
        out = 0
        for c in reversed(self.coeffs):
            out = out * q + c
        return out

    def __add__(self, other: QPolynomial) -> QPolynomial:
        other = _coerce(other)
        return QPolynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> QPolynomial:
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: QPolynomial) -> QPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> QPolynomial:
        return _coerce(other) - self

    def __mul__(self, other: QPolynomial) -> QPolynomial:
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        try:
            return self.coeffs == _coerce(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self):
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                terms.append(str(c))
            else:
                mono = "q" if d == 1 else f"q^{d}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"


def _coerce(x) -> QPolynomial:
    if isinstance(x, QPolynomial):
        return x
    if isinstance(x, int):
        return QPolynomial([x])
    raise TypeError(f"cannot treat {type(x).__name__} as a QPolynomial")


q = QPolynomial([0, 1])
