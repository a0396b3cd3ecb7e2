"""Exact univariate polynomial and exponential-polynomial calculus.

Three representations, chosen to match how each is accessed:

* ``Poly`` -- dense coefficient tuple over Gaussian rationals, ascending
  degree, no trailing zeros (the zero polynomial is the empty tuple).
* ``LaurentPoly`` -- sparse map from integer exponent (possibly negative)
  to coefficient.  Iterated derivatives of x^(-1)*e^(rx) push exponents
  down to -n-1, so a dense list would be the wrong shape.
* ``ExpPoly`` -- a finite sum of terms p_k(x)*e^(mu_k x) with Laurent
  polynomial parts and pairwise distinct Gaussian-rational rates mu_k.
  The class is closed under differentiation, which is the whole point:
  it can differentiate weight-function products and trigonometric closed
  forms exactly, with sin/cos lifted to complex exponentials.

No polynomial division or gcd lives here; nothing downstream needs it.
All values are immutable and operations are pure.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

from .rational import GaussianRational, ONE, ZERO, as_gaussian

__all__ = ["Poly", "LaurentPoly", "ExpPoly"]

Scalar = Union[int, "Fraction", GaussianRational]


class Poly:
    """Dense univariate polynomial over Q(i), coefficients by ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_gaussian(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        if k < 0:
            raise ValueError("Poly exponents must be >= 0")
        return cls((0,) * k + (c,))

    # -- structure --------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> GaussianRational:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_real(self) -> bool:
        return all(c.im == 0 for c in self.coeffs)

    def require_real(self, context: str) -> "Poly":
        """Return self, or raise if any coefficient has an imaginary residue."""
        if not self.is_real():
            raise ValueError(f"{context}: nonzero imaginary part in {self!r}")
        return self

    def real_coeffs(self):
        return [c.re for c in self.coeffs]

    # -- ring arithmetic --------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero() or other.is_zero():
                return Poly.zero()
            out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Poly(out)
        c = as_gaussian(other)
        return Poly(a * c for a in self.coeffs)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        c = as_gaussian(scalar)
        return Poly(a / c for a in self.coeffs)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("Poly powers must be >= 0")
        result = Poly.one()
        for _ in range(n):
            result = result * self
        return result

    # -- calculus ---------------------------------------------------------

    def derivative(self) -> "Poly":
        return Poly(self.coeffs[k] * k for k in range(1, len(self.coeffs)))

    def eval(self, z) -> GaussianRational:
        """Exact Horner evaluation at a Gaussian-rational point."""
        z = as_gaussian(z)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def eval_float(self, x: float) -> float:
        """Float Horner evaluation; coefficients are converted at the last step."""
        acc = 0.0
        for c in reversed(self.coeffs):
            if c.im != 0:
                raise ValueError("eval_float requires real coefficients")
            acc = acc * x + float(c.re)
        return acc

    def scale_arg(self, c) -> "Poly":
        """Return q with q(x) = p(c*x)."""
        c = as_gaussian(c)
        power = ONE
        out = []
        for a in self.coeffs:
            out.append(a * power)
            power = power * c
        return Poly(out)

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == _as_poly(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "Poly(0)"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{_scalar_repr(c)}*x^{k}" if k else _scalar_repr(c))
        return "Poly(" + " + ".join(parts) + ")"


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly((as_gaussian(value),))


def _scalar_repr(c: GaussianRational) -> str:
    if c.im == 0:
        return str(c.re)
    return f"({c.re}{'+' if c.im >= 0 else ''}{c.im}i)"


class LaurentPoly:
    """Sparse Laurent polynomial: finite map exponent -> coefficient, exponents in Z."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Scalar] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[int, GaussianRational] = {}
        for e, c in items:
            c = as_gaussian(c)
            if not c:
                continue
            acc = out.get(e, ZERO) + c
            if acc:
                out[e] = acc
            else:
                out.pop(e, None)
        object.__setattr__(self, "terms", dict(sorted(out.items())))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def from_poly(cls, p: Poly) -> "LaurentPoly":
        return cls(enumerate(p.coeffs))

    def is_zero(self) -> bool:
        return not self.terms

    def min_exponent(self) -> int:
        return min(self.terms) if self.terms else 0

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        merged = list(self.terms.items()) + list(other.terms.items())
        return LaurentPoly(merged)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, scalar) -> "LaurentPoly":
        c = as_gaussian(scalar)
        return LaurentPoly({e: a * c for e, a in self.terms.items()})

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by x^k (k may be negative)."""
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({e - 1: c * e for e, c in self.terms.items() if e != 0})

    def to_poly(self) -> Poly:
        """Convert to a Poly; negative exponents indicate an upstream bug."""
        if self.terms and min(self.terms) < 0:
            raise ValueError(f"negative exponents remain: {self!r}")
        coeffs = [ZERO] * ((max(self.terms) + 1) if self.terms else 0)
        for e, c in self.terms.items():
            coeffs[e] = c
        return Poly(coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "LaurentPoly(0)"
        body = " + ".join(f"{_scalar_repr(c)}*x^{e}" for e, c in self.terms.items())
        return f"LaurentPoly({body})"


class ExpPoly:
    """Finite sum of Laurent-polynomial multiples of exponentials.

    Terms are keyed by rate: {mu: p} represents sum of p(x)*e^(mu*x).
    Rates are pairwise distinct and zero parts are dropped, so equality of
    canonical forms is exact equality of functions.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[GaussianRational, LaurentPoly] = {}
        for rate, part in items:
            rate = as_gaussian(rate)
            if isinstance(part, Poly):
                part = LaurentPoly.from_poly(part)
            if part.is_zero():
                continue
            if rate in out:
                acc = out[rate] + part
                if acc.is_zero():
                    del out[rate]
                else:
                    out[rate] = acc
            else:
                out[rate] = part
        object.__setattr__(self, "terms", out)

    def __setattr__(self, name, value):
        raise AttributeError("ExpPoly is immutable")

    @classmethod
    def of(cls, rate, part) -> "ExpPoly":
        """Single term part(x)*e^(rate*x)."""
        return cls([(rate, part)])

    @classmethod
    def from_poly(cls, p: Poly) -> "ExpPoly":
        """A plain polynomial, i.e. a term with rate zero."""
        return cls([(ZERO, p)])

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "ExpPoly") -> "ExpPoly":
        return ExpPoly(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "ExpPoly":
        return ExpPoly({r: -p for r, p in self.terms.items()})

    def __sub__(self, other: "ExpPoly") -> "ExpPoly":
        return self + (-other)

    def __mul__(self, scalar) -> "ExpPoly":
        c = as_gaussian(scalar)
        return ExpPoly({r: p * c for r, p in self.terms.items()})

    __rmul__ = __mul__

    def mul_monomial(self, k: int) -> "ExpPoly":
        """Multiply every term by x^k."""
        return ExpPoly({r: p.shift(k) for r, p in self.terms.items()})

    def derivative(self) -> "ExpPoly":
        """Exact derivative: d/dx [p*e^(mu x)] = (p' + mu*p) e^(mu x)."""
        out = []
        for rate, part in self.terms.items():
            out.append((rate, part.derivative() + part * rate))
        return ExpPoly(out)

    def nth_derivative(self, n: int) -> "ExpPoly":
        if n < 0:
            raise ValueError("derivative order must be >= 0")
        f = self
        for _ in range(n):
            f = f.derivative()
        return f

    def sole_term(self) -> tuple[GaussianRational, LaurentPoly]:
        """The unique (rate, part) pair; raises on a mixed-rate sum."""
        if len(self.terms) != 1:
            raise ValueError(f"expected a single exponential rate, got {len(self.terms)}")
        return next(iter(self.terms.items()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "ExpPoly(0)"
        body = " + ".join(f"[{p!r}]*e^({_scalar_repr(r)}x)" for r, p in self.terms.items())
        return f"ExpPoly({body})"
