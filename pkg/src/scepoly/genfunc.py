"""Truncated formal power series in t with exact polynomial coefficients in x.

Carries the four generating functions

    E(x,t)      = e^(xt)  / (1+t)      coefficients e_n / n!
    E_m(x,t)    = e^(mxt) / (1+t)      coefficients e_n^(m) / n!
    S(x,t)      = -e^(xt) / (1+t^2)    coefficients s_n / n!
    C(x,t)      =  e^(xt) / (1+t^2)    coefficients c_n / n!

plus the weight-function machinery for hypergeometric equations
A(x)y'' + B(x)y' + lambda*y = 0 with linear A = alpha*x + beta and
B = gamma*x + delta(n), delta(n) = delta0 + delta1*n.  The n-shifted weight
A^n * rho has exponent n + (-beta*gamma + alpha*(delta - alpha))/alpha^2;
when that is independent of n (iff delta1 = -alpha) the classical
generating-function formula breaks down and the degenerate closed form

    F(x,t) = (1 + alpha*t)^K * exp((gamma/alpha)(alpha*x + beta) * t)

applies, K being the constant shifted-weight exponent.  ``degenerate_genfunc``
expands it; for the e_n equation it reproduces E above, exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .poly import Poly
from .rational import I, as_rational, binomial_general
from .report import CheckReport

__all__ = [
    "FormalSeries",
    "LinearHGSpec",
    "WeightForm",
    "series_exp_xt",
    "series_E",
    "series_Em",
    "series_S",
    "series_C",
    "series_connection_check",
    "rho_linear",
    "sigma_linear",
    "nu_degeneracy_check",
    "degenerate_genfunc",
    "E_SPEC",
    "em_spec",
    "laguerre_spec",
]


class FormalSeries:
    """Power series in t truncated at a fixed order, Poly coefficients in x.

    Arithmetic never consults coefficients beyond the truncation order, and
    mixing different orders is an error rather than a silent re-truncation.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", tuple(_as_coeff(c) for c in coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least the t^0 coefficient")

    def __setattr__(self, name, value):
        raise AttributeError("FormalSeries is immutable")

    @classmethod
    def zero(cls, order: int) -> "FormalSeries":
        return cls([Poly.zero()] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "FormalSeries":
        return cls([Poly.one()] + [Poly.zero()] * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Poly:
        return self.coeffs[k]

    def _check_order(self, other: "FormalSeries"):
        if self.order != other.order:
            raise ValueError(
                f"truncation orders differ: {self.order} vs {other.order}"
            )

    def __add__(self, other: "FormalSeries") -> "FormalSeries":
        self._check_order(other)
        return FormalSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "FormalSeries":
        return FormalSeries(-c for c in self.coeffs)

    def __sub__(self, other: "FormalSeries") -> "FormalSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FormalSeries):
            self._check_order(other)
            n = self.order
            out = [Poly.zero()] * (n + 1)
            for i, a in enumerate(self.coeffs):
                if a.is_zero():
                    continue
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if not b.is_zero():
                        out[i + j] = out[i + j] + a * b
            return FormalSeries(out)
        return FormalSeries(c * other for c in self.coeffs)

    __rmul__ = __mul__

    def diff_x(self) -> "FormalSeries":
        """Differentiate every coefficient with respect to x."""
        return FormalSeries(c.derivative() for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"FormalSeries(order={self.order})"


def _as_coeff(c) -> Poly:
    if isinstance(c, Poly):
        return c
    return Poly.constant(c)


# ---------------------------------------------------------------------------
# The concrete generating functions
# ---------------------------------------------------------------------------

def series_exp_xt(scale, order: int) -> FormalSeries:
    """exp(scale * x * t): coefficient of t^k is (scale*x)^k / k!."""
    scale = as_rational(scale)
    return FormalSeries(
        Poly.monomial(k, scale**k * Fraction(1, factorial(k)))
        for k in range(order + 1)
    )


def _inv_one_plus_t(order: int) -> FormalSeries:
    """1/(1+t) = sum (-1)^k t^k."""
    return FormalSeries(Poly.constant((-1) ** k) for k in range(order + 1))


def _inv_one_plus_t2(order: int) -> FormalSeries:
    """1/(1+t^2) = sum (-1)^j t^(2j)."""
    return FormalSeries(
        Poly.constant((-1) ** (k // 2)) if k % 2 == 0 else Poly.zero()
        for k in range(order + 1)
    )


def series_E(order: int) -> FormalSeries:
    """e^(xt)/(1+t); n!*[t^n] is e_n."""
    return series_exp_xt(1, order) * _inv_one_plus_t(order)


def series_Em(m, order: int) -> FormalSeries:
    """e^(mxt)/(1+t); n!*[t^n] is e_n^(m)."""
    m = as_rational(m)
    if m == 0:
        raise ValueError("rate must be nonzero")
    return series_exp_xt(m, order) * _inv_one_plus_t(order)


def series_S(order: int) -> FormalSeries:
    """-e^(xt)/(1+t^2); n!*[t^n] is s_n."""
    return -(series_exp_xt(1, order) * _inv_one_plus_t2(order))


def series_C(order: int) -> FormalSeries:
    """e^(xt)/(1+t^2); n!*[t^n] is c_n."""
    return series_exp_xt(1, order) * _inv_one_plus_t2(order)


def series_connection_check(order: int) -> CheckReport:
    """Verify -2S(x,t) = 2C(x,t) = E(ix,-it) + E(-ix,it) coefficientwise.

    Substituting (ix, -it) maps the t^n coefficient p_n(x) of E to
    p_n(ix) * (-i)^n, so both sides stay within Gaussian-rational series.
    """
    e = series_E(order)
    lhs_s = -2 * series_S(order)
    lhs_c = 2 * series_C(order)
    entries = []
    for n in range(order + 1):
        rhs = e.coeff(n).scale_arg(I) * (-I) ** n + e.coeff(n).scale_arg(-I) * I**n
        ok = rhs == lhs_s.coeff(n) and rhs == lhs_c.coeff(n)
        entries.append((f"connection identity at t^{n}", ok))
    return CheckReport.of(entries)


# ---------------------------------------------------------------------------
# Linear hypergeometric equations and their weight functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearHGSpec:
    """A(x) = alpha*x + beta, B(x) = gamma*x + delta0 + delta1*n.

    The index n enters only through the constant term of B; every family in
    scope fits that shape.  alpha must be nonzero.
    """

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta0: Fraction
    delta1: Fraction

    def __post_init__(self):
        for field in ("alpha", "beta", "gamma", "delta0", "delta1"):
            object.__setattr__(self, field, as_rational(getattr(self, field)))
        if self.alpha == 0:
            raise ValueError("leading coefficient alpha must be nonzero")

    def delta(self, n: int) -> Fraction:
        return self.delta0 + self.delta1 * n

    def lambda_n(self, n: int) -> Fraction:
        """Eigenvalue making the degree-n solution polynomial: -n*B' (A'' = 0 here)."""
        return -n * self.gamma


E_SPEC = LinearHGSpec(1, 0, 1, 0, -1)


def em_spec(m) -> LinearHGSpec:
    """The equation x*y'' + (mx - n)*y' - mn*y = 0 of the rate-m family."""
    m = as_rational(m)
    if m == 0:
        raise ValueError("rate must be nonzero")
    return LinearHGSpec(1, 0, m, 0, -1)


def laguerre_spec(alpha_l) -> LinearHGSpec:
    """The associated Laguerre equation x*y'' + (alpha_l + 1 - x)*y' + n*y = 0."""
    return LinearHGSpec(1, 0, -1, as_rational(alpha_l) + 1, 0)


@dataclass(frozen=True)
class WeightForm:
    """(alpha*x + beta)^exponent * e^(rate*x), kept symbolic."""

    alpha: Fraction
    beta: Fraction
    exponent: Fraction
    rate: Fraction

    def __str__(self) -> str:
        base = f"({self.alpha}x+{self.beta})" if self.beta else (
            "x" if self.alpha == 1 else f"({self.alpha}x)"
        )
        return f"{base}^({self.exponent}) e^({self.rate}x)"


def rho_linear(spec: LinearHGSpec, n: int) -> WeightForm:
    """Weight of the self-adjoint form, (A*rho)' = B*rho, for linear A and B.

    rho = (alpha*x+beta)^((-beta*gamma + alpha*(delta-alpha))/alpha^2)
          * exp((gamma/alpha) x).
    """
    a, b, g = spec.alpha, spec.beta, spec.gamma
    exponent = (-b * g + a * (spec.delta(n) - a)) / a**2
    return WeightForm(a, b, exponent, g / a)


def sigma_linear(spec: LinearHGSpec, n: int) -> WeightForm:
    """The n-shifted weight A^n * rho; exponent grows by n."""
    rho = rho_linear(spec, n)
    return WeightForm(rho.alpha, rho.beta, n + rho.exponent, rho.rate)


def nu_degeneracy_check(spec: LinearHGSpec) -> bool:
    """True iff the shifted-weight exponent is independent of n.

    n + (-beta*gamma + alpha*(delta0 + delta1*n - alpha))/alpha^2 is constant
    in n exactly when delta1 = -alpha.  In that degenerate case the classical
    Nikiforov-Uvarov generating-function formula is inapplicable and the
    closed form of ``degenerate_genfunc`` applies instead.
    """
    return spec.delta1 == -spec.alpha


def degenerate_genfunc(spec: LinearHGSpec, order: int) -> FormalSeries:
    """Generating function sigma(xi)/sigma(x) with xi = x + A(x)*t.

    Only valid in the degenerate case.  With sigma = (alpha*x+beta)^K
    * e^((gamma/alpha) x) and K constant, substituting xi collapses to

        (1 + alpha*t)^K * exp((gamma/alpha)(alpha*x + beta) * t),

    expanded here with the rational-exponent binomial series.
    """
    if not nu_degeneracy_check(spec):
        raise ValueError(
            "generating-function closed form requires an n-independent "
            "shifted weight (delta1 = -alpha)"
        )
    k_exp = sigma_linear(spec, 0).exponent
    binom = FormalSeries(
        Poly.constant(binomial_general(k_exp, k) * spec.alpha**k)
        for k in range(order + 1)
    )
    # exp(g(x) * t) with g = (gamma/alpha)(alpha*x + beta) = gamma*x + gamma*beta/alpha
    g = Poly([spec.gamma * spec.beta / spec.alpha, spec.gamma])
    expo = FormalSeries(
        g**k * Fraction(1, factorial(k)) for k in range(order + 1)
    )
    return binom * expo
