"""The five polynomial families behind the x^n * {sin, cos, exp} antiderivatives.

Each family is built by every route available, and the routes are exposed
separately so they can be cross-checked exactly:

* ``e_explicit``    e_n(x) = x^n + sum_{l<n} (-1)^(l+n) (n!/l!) x^l
* ``e_recurrence``  e_n = x^n - n*e_{n-1}
* ``e_rodrigues``   e_n = x^(n+1) e^(-x) d^n/dx^n (x^(-1) e^x)
* ``e_laguerre``    e_n = n! * L_n^(-n-1)(-x)

together with the generalized-rate family e_n^(m) (explicit + Rodrigues),
the sine/cosine families s_n, c_n and their hatted companions, and the
recurrence groups linking all of them.

Index convention: every constructor accepts any integer index and returns
the zero polynomial for a negative one, which is exactly the convention the
recurrence groups need at their low ends.

Normalization note for the rate-m family: e_n^(m) satisfies
(e_n^(m))' + m*e_n^(m) = m^(n+1) * x^n, so e_n^(m) itself is *not* the
antiderivative polynomial for x^n e^(mx) unless m = 1.  The polynomial that
is, e_n^(m)/m^(n+1), is exposed as ``antideriv_poly_exp``.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .poly import ExpPoly, LaurentPoly, Poly
from .rational import I, ONE, as_gaussian, as_rational, binomial_general
from .report import CheckReport

__all__ = [
    "e_explicit",
    "e_recurrence",
    "e_rodrigues",
    "e_laguerre",
    "laguerre_general",
    "em_explicit",
    "em_rodrigues",
    "antideriv_poly_exp",
    "s_explicit",
    "s_from_e",
    "c_from_s",
    "c_from_e",
    "shat",
    "chat",
    "family_poly",
    "check_relation_group",
    "RELATION_GROUPS",
]


def _require_rate(m) -> Fraction:
    m = as_rational(m)
    if m == 0:
        raise ValueError("rate must be nonzero")
    return m


# ---------------------------------------------------------------------------
# The e family, four ways
# ---------------------------------------------------------------------------

def e_explicit(n: int) -> Poly:
    """e_n(x) = x^n + sum_{l=0}^{n-1} (-1)^(l+n) (n!/l!) x^l; zero for n < 0."""
    if n < 0:
        return Poly.zero()
    coeffs = [Fraction((-1) ** (l + n) * factorial(n), factorial(l)) for l in range(n)]
    coeffs.append(Fraction(1))
    return Poly(coeffs)


def e_recurrence(n: int) -> Poly:
    """e_0 = 1, e_n = x^n - n*e_{n-1}; zero for n < 0."""
    if n < 0:
        return Poly.zero()
    p = Poly.one()
    for k in range(1, n + 1):
        p = Poly.monomial(k) - k * p
    return p


def e_rodrigues(n: int) -> Poly:
    """e_n = x^(n+1) e^(-x) d^n/dx^n (x^(-1) e^x), computed exactly.

    The n-th derivative stays a single-rate exponential polynomial; after
    multiplying by x^(n+1) the exponents must all be >= 0 and the e^x factor
    cancels.  Either failing would be an implementation bug and raises.
    """
    if n < 0:
        return Poly.zero()
    seed = ExpPoly.of(1, LaurentPoly({-1: 1}))
    rate, part = seed.nth_derivative(n).sole_term()
    if rate != ONE:
        raise ValueError(f"rate drifted to {rate!r} during differentiation")
    return part.shift(n + 1).to_poly()


def laguerre_general(n: int, alpha) -> Poly:
    """Associated Laguerre polynomial L_n^(alpha) for any exact rational alpha.

    Built from the explicit sum
    L_n^(alpha)(x) = sum_{k=0}^{n} (-1)^k C(n+alpha, n-k) x^k / k!,
    which is what makes negative and fractional upper indices exact.
    """
    if n < 0:
        return Poly.zero()
    alpha = as_rational(alpha)
    coeffs = [
        (-1) ** k * binomial_general(n + alpha, n - k) / factorial(k)
        for k in range(n + 1)
    ]
    return Poly(coeffs)


def e_laguerre(n: int) -> Poly:
    """e_n(x) = n! * L_n^(-n-1)(-x)."""
    if n < 0:
        return Poly.zero()
    return factorial(n) * laguerre_general(n, Fraction(-n - 1)).scale_arg(-1)


# ---------------------------------------------------------------------------
# The generalized-rate family e_n^(m)
# ---------------------------------------------------------------------------

def em_explicit(n: int, m) -> Poly:
    """e_n^(m)(x) = m^n x^n + sum_{l=0}^{n-1} (-1)^(l+n) m^l (n!/l!) x^l."""
    m = _require_rate(m)
    if n < 0:
        return Poly.zero()
    coeffs = [
        (-1) ** (l + n) * m**l * Fraction(factorial(n), factorial(l))
        for l in range(n)
    ]
    coeffs.append(m**n)
    return Poly(coeffs)


def em_rodrigues(n: int, m) -> Poly:
    """e_n^(m) = x^(n+1) e^(-mx) d^n/dx^n (x^(-1) e^(mx))."""
    m = _require_rate(m)
    if n < 0:
        return Poly.zero()
    seed = ExpPoly.of(m, LaurentPoly({-1: 1}))
    rate, part = seed.nth_derivative(n).sole_term()
    if rate != as_gaussian(m):
        raise ValueError(f"rate drifted to {rate!r} during differentiation")
    return part.shift(n + 1).to_poly()


def antideriv_poly_exp(n: int, m) -> Poly:
    """The unique polynomial P with d/dx [P(x) e^(mx)] = x^n e^(mx).

    Equivalently P' + m*P = x^n.  P = e_n^(m) / m^(n+1); the division by
    m^(n+1) is what makes the product rule close (see the module note).
    """
    m = _require_rate(m)
    if n < 0:
        return Poly.zero()
    return em_explicit(n, m) / m ** (n + 1)


# ---------------------------------------------------------------------------
# The sine/cosine families
# ---------------------------------------------------------------------------

def s_explicit(n: int) -> Poly:
    """s_n, the polynomial solution of s'' + s = -x^n.

    Degree n, leading coefficient -1, and only terms whose exponent has the
    parity of n: s_n(x) = -x^n + sum (-1)^((l+n)/2 + n + 1) (n!/l!) x^l over
    l = n-2, n-4, ..., which folds the even/odd closed forms into one sum.
    """
    if n < 0:
        return Poly.zero()
    coeffs = {n: Fraction(-1)}
    for l in range(n - 2, -1, -2):
        # (-1)^((l+n)/2 + 1) for even n, (-1)^((l+n)/2) for odd n
        sign = (-1) ** (((l + n) // 2) + n + 1)
        coeffs[l] = Fraction(sign * factorial(n), factorial(l))
    return Poly(coeffs.get(k, 0) for k in range(n + 1))


def s_from_e(n: int) -> Poly:
    """s_n(x) = (i^n/2) [(-1)^(n+1) e_n(ix) - e_n(-ix)], coefficients provably real."""
    if n < 0:
        return Poly.zero()
    e = e_explicit(n)
    combo = (-1) ** (n + 1) * e.scale_arg(I) - e.scale_arg(-I)
    return ((I**n / 2) * combo).require_real("s_from_e")


def c_from_s(n: int) -> Poly:
    """c_n = -s_n."""
    return -s_explicit(n)


def c_from_e(n: int) -> Poly:
    """c_n(x) = (i^n/2) [(-1)^n e_n(ix) + e_n(-ix)], coefficients provably real."""
    if n < 0:
        return Poly.zero()
    e = e_explicit(n)
    combo = (-1) ** n * e.scale_arg(I) + e.scale_arg(-I)
    return ((I**n / 2) * combo).require_real("c_from_e")


def shat(k: int) -> Poly:
    """shat_k = -s_{k+1}'; zero for k < 0."""
    if k < 0:
        return Poly.zero()
    return -s_explicit(k + 1).derivative()


def chat(k: int) -> Poly:
    """chat_k = c_{k+1}'; zero for k < 0."""
    if k < 0:
        return Poly.zero()
    return c_from_s(k + 1).derivative()


def family_poly(family: str, n: int, m=None) -> Poly:
    """Dispatch a family tag from {e, s, c, shat, chat, em} to its polynomial."""
    if family == "e":
        return e_explicit(n)
    if family == "s":
        return s_explicit(n)
    if family == "c":
        return c_from_s(n)
    if family == "shat":
        return shat(n)
    if family == "chat":
        return chat(n)
    if family == "em":
        if m is None:
            raise ValueError("family 'em' requires a rate m")
        return em_explicit(n, m)
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# Recurrence groups
# ---------------------------------------------------------------------------

def _xn(n: int) -> Poly:
    return Poly.monomial(n)


def _group_g1(n: int):
    yield f"s_{n} = -x^{n} + {n}*chat_{n-2}", s_explicit(n) == -_xn(n) + n * chat(n - 2)
    yield f"shat_{n} = {n+1}*c_{n}", shat(n) == (n + 1) * c_from_s(n)


def _group_g2(n: int):
    yield (
        f"s_{n} = -x^{n} - {n}({n-1})*s_{n-2}",
        s_explicit(n) == -_xn(n) - n * (n - 1) * s_explicit(n - 2),
    )
    yield (
        f"shat_{n} = {n+1}x^{n} - {n}({n+1})*shat_{n-2}",
        shat(n) == (n + 1) * _xn(n) - n * (n + 1) * shat(n - 2),
    )


def _group_g3(n: int):
    yield f"c_{n} = x^{n} - {n}*shat_{n-2}", c_from_s(n) == _xn(n) - n * shat(n - 2)
    yield f"chat_{n} = -{n+1}*s_{n}", chat(n) == -(n + 1) * s_explicit(n)


def _group_g4(n: int):
    yield (
        f"c_{n} = x^{n} - {n}({n-1})*c_{n-2}",
        c_from_s(n) == _xn(n) - n * (n - 1) * c_from_s(n - 2),
    )
    yield (
        f"chat_{n} = {n+1}x^{n} - {n}({n+1})*chat_{n-2}",
        chat(n) == (n + 1) * _xn(n) - n * (n + 1) * chat(n - 2),
    )


def _group_diff_eqs(n: int):
    s, c, e = s_explicit(n), c_from_s(n), e_explicit(n)
    yield f"s_{n}'' + s_{n} = -x^{n}", s.derivative().derivative() + s == -_xn(n)
    yield f"c_{n}'' + c_{n} = x^{n}", c.derivative().derivative() + c == _xn(n)
    yield f"e_{n}' + e_{n} = x^{n}", e.derivative() + e == _xn(n)
    yield (
        f"c_{n} = x^{n} + {n}*s_{n-1}'",
        c == _xn(n) + n * s_explicit(n - 1).derivative(),
    )
    yield f"c_{n}' = -{n}*s_{n-1}", c.derivative() == -n * s_explicit(n - 1)


RELATION_GROUPS = {
    "G1": _group_g1,
    "G2": _group_g2,
    "G3": _group_g3,
    "G4": _group_g4,
    "DIFF_EQS": _group_diff_eqs,
}


def check_relation_group(group: str, n_max: int) -> CheckReport:
    """Exactly verify one recurrence group for every index 0..n_max."""
    try:
        checker = RELATION_GROUPS[group]
    except KeyError:
        raise ValueError(f"unknown relation group {group!r}") from None
    entries = []
    for n in range(n_max + 1):
        for label, ok in checker(n):
            entries.append((f"{group}: {label}", ok))
    return CheckReport.of(entries)
