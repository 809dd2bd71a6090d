"""Complex rational-function arithmetic on the unit disk.

Polynomials are stored as ascending complex coefficient arrays; rational
functions keep a reduced numerator/denominator pair with a monic denominator.
Reduction cancels common roots by companion-matrix root matching with
cluster-aware deflation, so boundary zeros of high multiplicity (the typical
shape in boundary interpolation identities) cancel cleanly.
"""

from __future__ import annotations

import cmath
import math
import numbers

import numpy as np
import numpy.polynomial.polynomial as npoly

from .errors import (
    BoundaryPole,
    DegenerateLFT,
    DegreeLimitExceeded,
    NonConstantDeterminant,
    NotGeneralizedSchur,
    PoleAtExpansionPoint,
    PoleAtOne,
    ZeroDenominator,
)
from .tolerances import CIRCLE_TOL, MAX_DEGREE, ORDER_TOL, ROOT_TOL, TRIM_REL

__all__ = [
    "Poly",
    "RationalFn",
    "BlaschkeProduct",
    "Mat2RF",
    "as_rational",
    "taylor_coefficients",
    "vanishing_order",
    "krein_langer_factor",
    "cayley",
    "cayley_fn",
    "unit_circle_samples",
]

INF = math.inf


def _trim(coeffs, rel=TRIM_REL):
    a = np.asarray(coeffs, dtype=complex).ravel()
    if a.size == 0:
        return a
    scale = float(np.max(np.abs(a)))
    if scale == 0.0:
        return a[:0]
    cut = rel * scale
    k = a.size
    while k > 0 and abs(a[k - 1]) <= cut:
        k -= 1
    return a[:k].copy()


def _require_finite(a):
    if a.size and not np.all(np.isfinite(a.view(float))):
        raise ValueError("non-finite coefficient")


def _majorant(a, x):
    """Upper bound sum |a_j| |x|^j used to scale remainder/guard thresholds."""
    if a.size == 0:
        return 0.0
    return float(npoly.polyval(abs(x), np.abs(a)))


def _deflate(a, c):
    """Synthetic division of ascending coeffs `a` by (z - c) -> (quotient, a(c))."""
    n = a.size - 1
    q = np.zeros(n, dtype=complex)
    b = a[n]
    for j in range(n - 1, -1, -1):
        q[j] = b
        b = a[j] + c * b
    return q, b


class Poly:
    """Polynomial with complex coefficients in ascending degree order.

    The zero polynomial has an empty coefficient array and degree -1.
    Trailing coefficients below TRIM_REL times the largest magnitude are
    dropped on construction.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=(), *, trim=True):
        if isinstance(coeffs, Poly):
            a = coeffs.coeffs.copy()
        else:
            a = np.atleast_1d(np.asarray(coeffs, dtype=complex)).ravel()
        _require_finite(a)
        self.coeffs = _trim(a) if trim else a

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1.0,))

    @classmethod
    def constant(cls, c):
        return cls((complex(c),))

    @classmethod
    def x(cls):
        return cls((0.0, 1.0))

    @classmethod
    def from_roots(cls, roots, leading=1.0):
        p = np.array([complex(leading)])
        for r in roots:
            p = npoly.polymul(p, np.array([-complex(r), 1.0]))
        return cls(p)

    @property
    def degree(self):
        return self.coeffs.size - 1

    @property
    def is_zero(self):
        return self.coeffs.size == 0

    def __call__(self, z):
        if self.coeffs.size == 0:
            return np.zeros_like(np.asarray(z, dtype=complex)) if isinstance(z, np.ndarray) else 0j
        return npoly.polyval(z, self.coeffs)

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, numbers.Complex):
            return Poly.constant(other)
        return NotImplemented

    def __add__(self, other):
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return Poly(q.coeffs)
        if q.is_zero:
            return Poly(self.coeffs)
        return Poly(npoly.polyadd(self.coeffs, q.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Poly(-self.coeffs, trim=False)

    def __mul__(self, other):
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        if self.is_zero or q.is_zero:
            return Poly.zero()
        return Poly(npoly.polymul(self.coeffs, q.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = Poly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def monic(self):
        """Return (monic polynomial, leading coefficient)."""
        if self.is_zero:
            raise ZeroDenominator("zero polynomial has no monic form")
        lead = self.coeffs[-1]
        return Poly(self.coeffs / lead, trim=False), lead

    def shifted(self, center):
        """Coefficients of the polynomial in powers of (z - center)."""
        n = self.coeffs.size
        b = self.coeffs.astype(complex).copy()
        c = complex(center)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                b[j] = b[j] + c * b[j + 1]
        return b

    def roots(self):
        if self.degree < 1:
            return np.zeros(0, dtype=complex)
        return npoly.polyroots(self.coeffs)

    def valuation(self, center, tol=ORDER_TOL):
        """Order of vanishing at `center` (INF for the zero polynomial)."""
        if self.is_zero:
            return INF
        b = self.shifted(center)
        cut = tol * float(np.max(np.abs(b)))
        for j, v in enumerate(b):
            if abs(v) > cut:
                return j
        return self.coeffs.size - 1

    def allclose(self, other, tol=1e-12):
        q = self._coerce(other)
        n = max(self.coeffs.size, q.coeffs.size)
        a = np.zeros(n, complex)
        b = np.zeros(n, complex)
        a[: self.coeffs.size] = self.coeffs
        b[: q.coeffs.size] = q.coeffs
        return bool(np.max(np.abs(a - b), initial=0.0) <= tol)

    def __repr__(self):
        return f"Poly({np.round(self.coeffs, 12).tolist()})"


# Fixed evaluation points used to confirm that a candidate reduction did not
# change the function (radii chosen away from the unit circle and from each
# other; no randomness so reductions are deterministic).
_CHECK_POINTS = np.array(
    [r * cmath.exp(2j * math.pi * (k + 0.137) / 5) for r in (0.37, 0.73, 1.42, 2.31) for k in range(5)],
    dtype=complex,
)

_PAIR_CAP = 3e-2  # largest root mismatch ever considered for cancellation
_REM_TOL = 1e-8  # deflation remainder bound, relative to a coefficient majorant
_VERIFY_TOL = 1e-7


def _same_function(num0, den0, num1, den1):
    used = 0
    for x in _CHECK_POINTS:
        d0 = npoly.polyval(x, den0)
        d1 = npoly.polyval(x, den1)
        if abs(d0) < 1e-6 * _majorant(den0, x) or abs(d1) < 1e-6 * _majorant(den1, x):
            continue
        f0 = npoly.polyval(x, num0) / d0
        f1 = npoly.polyval(x, num1) / d1
        if abs(f0 - f1) > _VERIFY_TOL * (1.0 + max(abs(f0), abs(f1))):
            return False
        used += 1
    return used >= 6


def _polish_multiple_root(coeffs, c0, multiplicity, radius):
    """Refine the location of an m-fold root near c0.

    The (m-1)-th derivative has a simple, well-conditioned root at the same
    location; a few Newton steps take the cluster centroid (accurate to the
    coefficient noise) down to machine precision.
    """
    d = coeffs
    for _ in range(multiplicity - 1):
        d = npoly.polyder(d)
    dd = npoly.polyder(d)
    c = c0
    for _ in range(4):
        f = npoly.polyval(c, d)
        fp = npoly.polyval(c, dd)
        if fp == 0:
            return c0
        step = f / fp
        if abs(step) > max(4.0 * radius, 1e-6):
            return c0
        c = c - step
        if abs(step) <= 1e-15 * (1.0 + abs(c)):
            break
    return c if abs(c - c0) <= max(4.0 * radius, 1e-6) else c0


def _cancel_pairs(num, den, roots_n, roots_d, pairs):
    """Deflate matched root pairs, dividing both sides at cluster centroids.

    Individual companion roots of an m-fold zero are only accurate to
    eps**(1/m), but the centroid of the cluster is accurate to eps, so each
    cancelled factor is removed at the centroid of every nearby root (from
    both polynomials), Newton-polished through the high-order derivative.
    Returns None when a deflation remainder is too large, i.e. the proposed
    pair was not a genuine common factor.
    """
    # Link pairs whose midpoints sit on the same perturbation ring: the m
    # companion roots of an m-fold zero spread on a ring of width eps**(1/m),
    # much wider than the matched pair distances, so the linkage radius must
    # come from the observed mid-to-mid spacing, not the pair distance alone.
    mids = [0.5 * (roots_n[i] + roots_d[j]) for i, j, _ in pairs]
    dists = [d for _, _, d in pairs]
    parent = list(range(len(pairs)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a in range(len(pairs)):
        for b in range(a + 1, len(pairs)):
            link = max(10.0 * (dists[a] + dists[b]), 1e-9 * (1.0 + abs(mids[a])))
            if abs(mids[a] - mids[b]) <= link:
                parent[find(a)] = find(b)

    groups = {}
    for idx in range(len(pairs)):
        groups.setdefault(find(idx), []).append(idx)

    new_num, new_den = num, den
    for members_idx in groups.values():
        gmids = [mids[idx] for idx in members_idx]
        center0 = complex(np.mean(gmids))
        spread = max(abs(m - center0) for m in gmids)
        radius = max(
            2.5 * spread,
            8.0 * max(dists[idx] for idx in members_idx),
            1e-9 * (1.0 + abs(center0)),
        )
        members_n = [r for r in roots_n if abs(r - center0) <= radius]
        members_d = [r for r in roots_d if abs(r - center0) <= radius]
        members = members_n + members_d
        centroid = complex(np.mean(members)) if members else center0
        polished = []
        if members_n:
            polished.append(_polish_multiple_root(num, centroid, len(members_n), radius))
        if members_d:
            polished.append(_polish_multiple_root(den, centroid, len(members_d), radius))
        if polished and max(abs(p - centroid) for p in polished) <= max(4.0 * radius, 1e-6):
            centroid = complex(np.mean(polished))
        for _ in range(len(members_idx)):
            scale_n = _majorant(new_num, centroid)
            scale_d = _majorant(new_den, centroid)
            qn, rn = _deflate(new_num, centroid)
            qd, rd = _deflate(new_den, centroid)
            if abs(rn) > _REM_TOL * scale_n or abs(rd) > _REM_TOL * scale_d:
                return None
            new_num, new_den = qn, qd
    return _trim(new_num), _trim(new_den)


def _reduce_fraction(num, den, root_tol=ROOT_TOL):
    num = _trim(num)
    den = _trim(den)
    if den.size == 0:
        raise ZeroDenominator("denominator reduced to zero")
    if num.size == 0:
        return num, np.array([1.0 + 0j])
    if den.size == 1:
        return num / den[0], np.array([1.0 + 0j])

    # Exact-divisibility fast paths; these catch identities like det == 1
    # where the numerator equals the denominator up to rounding.
    if num.size >= den.size:
        q, r = npoly.polydiv(num, den)
        if np.max(np.abs(r), initial=0.0) <= 1e-10 * np.max(np.abs(num)):
            return _trim(q), np.array([1.0 + 0j])
    if num.size > 1 and den.size > num.size:
        q, r = npoly.polydiv(den, num)
        if np.max(np.abs(r), initial=0.0) <= 1e-10 * np.max(np.abs(den)):
            return np.array([1.0 + 0j]), _trim(q)

    if num.size == 1:
        return num, den

    roots_n = npoly.polyroots(num)
    roots_d = npoly.polyroots(den)
    dist = np.abs(roots_n[:, None] - roots_d[None, :])
    order = np.dstack(np.unravel_index(np.argsort(dist, axis=None), dist.shape))[0]
    pairs = []
    used_n, used_d = set(), set()
    for i, j in order:
        d = dist[i, j]
        if d > _PAIR_CAP * (1.0 + max(abs(roots_n[i]), abs(roots_d[j]))):
            break
        if i in used_n or j in used_d:
            continue
        used_n.add(i)
        used_d.add(j)
        pairs.append((int(i), int(j), float(d)))

    # Cancel the largest verified prefix of closest pairs. A far pair that
    # is not a genuine common factor fails the remainder or the evaluation
    # check and the prefix shrinks past it.
    for take in range(len(pairs), 0, -1):
        cand = _cancel_pairs(num, den, roots_n, roots_d, pairs[:take])
        if cand is None:
            continue
        cn, cd = cand
        if cd.size == 0 or cn.size == 0:
            continue
        if _same_function(num, den, cn, cd):
            return cn, cd
    return num, den


class RationalFn:
    """Reduced quotient of two complex polynomials with a monic denominator."""

    __slots__ = ("num", "den", "_poles", "_zeros")

    def __init__(self, num, den=1.0, *, root_tol=ROOT_TOL, reduce=True):
        pn = num if isinstance(num, Poly) else Poly(num)
        pd = den if isinstance(den, Poly) else Poly(den)
        if pd.is_zero:
            raise ZeroDenominator("denominator is the zero polynomial")
        if reduce:
            cn, cd = _reduce_fraction(pn.coeffs, pd.coeffs, root_tol)
        else:
            cn, cd = pn.coeffs, pd.coeffs
        lead = cd[-1]
        cd = cd / lead
        cd[-1] = 1.0
        cn = cn / lead
        self.num = Poly(cn, trim=False)
        self.den = Poly(cd, trim=False)
        if self.num.degree > MAX_DEGREE or self.den.degree > MAX_DEGREE:
            raise DegreeLimitExceeded(
                f"degree {max(self.num.degree, self.den.degree)} exceeds cap {MAX_DEGREE}"
            )
        self._poles = None
        self._zeros = None

    @classmethod
    def constant(cls, c):
        return cls(Poly.constant(c), Poly.one(), reduce=False)

    @classmethod
    def x(cls):
        return cls(Poly.x(), Poly.one(), reduce=False)

    @property
    def degree(self):
        return max(self.num.degree, self.den.degree)

    @property
    def is_zero(self):
        return self.num.is_zero

    def is_constant(self, tol=1e-12):
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant rational function")
        return 0j if self.num.is_zero else complex(self.num.coeffs[0])

    def __call__(self, z):
        return self.num(z) / self.den(z)

    def poles(self):
        if self._poles is None:
            self._poles = self.den.roots()
        return self._poles

    def zeros(self):
        if self._zeros is None:
            self._zeros = self.num.roots()
        return self._zeros

    def _coerce(self, other):
        if isinstance(other, RationalFn):
            return other
        if isinstance(other, Poly):
            return RationalFn(other, Poly.one(), reduce=False)
        if isinstance(other, numbers.Complex):
            return RationalFn.constant(other)
        return NotImplemented

    def __add__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return NotImplemented
        if np.array_equal(self.den.coeffs, g.den.coeffs):
            return RationalFn(self.num + g.num, self.den)
        return RationalFn(self.num * g.den + g.num * self.den, self.den * g.den)

    __radd__ = __add__

    def __sub__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return NotImplemented
        return self + (-g)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        out = RationalFn.__new__(RationalFn)
        out.num = -self.num
        out.den = self.den
        out._poles = self._poles
        out._zeros = None
        return out

    def __mul__(self, other):
        if isinstance(other, numbers.Complex) and not isinstance(other, RationalFn):
            c = complex(other)
            if c == 0:
                return RationalFn.constant(0.0)
            out = RationalFn.__new__(RationalFn)
            out.num = Poly(self.num.coeffs * c, trim=False)
            out.den = self.den
            out._poles = self._poles
            out._zeros = self._zeros
            return out
        g = self._coerce(other)
        if g is NotImplemented:
            return NotImplemented
        return RationalFn(self.num * g.num, self.den * g.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return NotImplemented
        if g.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFn(self.num * g.den, self.den * g.num)

    def __rtruediv__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return NotImplemented
        return g / self

    def taylor(self, center, order, *, pole_tol=ROOT_TOL):
        """Taylor coefficients c_0..c_order of the function at `center`.

        Computed by shifting numerator and denominator to powers of
        (z - center) and dividing the power series.
        """
        if order < 0:
            raise ValueError("order must be >= 0")
        n = order + 1
        if self.num.is_zero:
            return np.zeros(n, dtype=complex)
        b = self.den.shifted(center)
        if abs(b[0]) <= pole_tol * float(np.max(np.abs(b))):
            raise PoleAtExpansionPoint(f"denominator vanishes at {center}")
        a = self.num.shifted(center)
        A = np.zeros(n, complex)
        B = np.zeros(n, complex)
        A[: min(n, a.size)] = a[: min(n, a.size)]
        B[: min(n, b.size)] = b[: min(n, b.size)]
        c = np.zeros(n, complex)
        for m in range(n):
            acc = A[m]
            for i in range(1, m + 1):
                acc -= B[i] * c[m - i]
            c[m] = acc / B[0]
        return c

    def vanishing_order(self, center, tol=ORDER_TOL):
        """Smallest Taylor index with |c_j| above tolerance at `center`.

        Returns INF for the zero function and a negative integer (minus the
        pole order) when `center` is a pole.
        """
        if self.num.is_zero:
            return INF
        vn = self.num.valuation(center, tol)
        vd = self.den.valuation(center, tol)
        return vn - vd

    def allclose(self, other, tol=1e-9):
        g = self._coerce(other)
        return self.num.allclose(g.num, tol) and self.den.allclose(g.den, tol)

    def __repr__(self):
        return f"RationalFn({self.num!r}, {self.den!r})"


def as_rational(x):
    """Coerce a scalar, Poly, or RationalFn to a RationalFn."""
    if isinstance(x, RationalFn):
        return x
    if isinstance(x, Poly):
        return RationalFn(x, Poly.one(), reduce=False)
    if isinstance(x, numbers.Complex):
        return RationalFn.constant(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a rational function")


def taylor_coefficients(f, center, order, **kw):
    return as_rational(f).taylor(center, order, **kw)


def vanishing_order(f, center, tol=ORDER_TOL):
    return as_rational(f).vanishing_order(center, tol)


def unit_circle_samples(n, offset=0.31):
    """n points on the unit circle; the offset avoids the common data points
    1 and -1 landing exactly on a sample."""
    return np.exp(1j * (offset + 2.0 * np.pi * np.arange(n) / n))


class BlaschkeProduct:
    """Finite Blaschke product: const * prod (z - a_i) / (1 - conj(a_i) z)."""

    __slots__ = ("zeros", "const")

    def __init__(self, zeros=(), const=1.0, *, margin=1e-6, circle_tol=CIRCLE_TOL):
        zs = tuple(complex(a) for a in zeros)
        for a in zs:
            if abs(a) >= 1.0 - margin:
                raise BoundaryPole(f"Blaschke zero {a} too close to the unit circle")
        c = complex(const)
        if abs(abs(c) - 1.0) > circle_tol:
            raise ValueError(f"constant {c} is not unimodular")
        self.zeros = zs
        self.const = c

    @property
    def order(self):
        return len(self.zeros)

    def __call__(self, z):
        out = np.full_like(np.asarray(z, dtype=complex), self.const) if isinstance(z, np.ndarray) else self.const
        for a in self.zeros:
            out = out * (z - a) / (1.0 - np.conj(a) * z)
        return out

    def as_rational(self):
        num = Poly.from_roots(self.zeros, self.const)
        den = Poly.one()
        for a in self.zeros:
            den = den * Poly((1.0, -np.conj(a)))
        return RationalFn(num, den)

    def __repr__(self):
        return f"BlaschkeProduct(zeros={list(self.zeros)}, const={self.const})"


class Mat2RF:
    """2x2 matrix of rational functions acting by linear-fractional transform."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a = as_rational(a)
        self.b = as_rational(b)
        self.c = as_rational(c)
        self.d = as_rational(d)

    @classmethod
    def identity(cls):
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def from_matrix(cls, m):
        m = np.asarray(m, dtype=complex)
        return cls(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def eval(self, z):
        return np.array(
            [[self.a(z), self.b(z)], [self.c(z), self.d(z)]], dtype=complex
        )

    def _common_den(self):
        d0 = self.a.den.coeffs
        for e in (self.b, self.c, self.d):
            if not np.array_equal(e.den.coeffs, d0):
                return False
        return True

    def apply(self, s):
        """(a*s + b) / (c*s + d), fully reduced."""
        s = as_rational(s)
        if self._common_den():
            # The shared denominator cancels between numerator and
            # denominator of the transform; work with polynomials directly.
            top = self.a.num * s.num + self.b.num * s.den
            bot = self.c.num * s.num + self.d.num * s.den
            if bot.is_zero:
                raise DegenerateLFT("transform denominator is identically zero")
            return RationalFn(top, bot)
        top = self.a * s + self.b
        bot = self.c * s + self.d
        if bot.is_zero:
            raise DegenerateLFT("transform denominator is identically zero")
        return top / bot

    def det(self):
        return self.a * self.d - self.b * self.c

    def inverse(self, *, const_tol=1e-9):
        """Inverse as adjugate over the (constant) determinant."""
        det = self.det()
        if det.is_constant():
            value = det.constant_value()
        else:
            vals = np.array([det(x) for x in _CHECK_POINTS[:8]])
            spread = float(np.max(np.abs(vals - vals.mean())))
            if spread > const_tol * max(1.0, float(np.max(np.abs(vals)))):
                raise NonConstantDeterminant("determinant is not constant")
            value = complex(vals.mean())
        if abs(value) < 1e-12:
            raise NonConstantDeterminant("determinant is numerically zero")
        inv = 1.0 / value
        return Mat2RF(self.d * inv, self.b * (-inv), self.c * (-inv), self.a * inv)

    def __repr__(self):
        return f"Mat2RF(a={self.a!r}, b={self.b!r}, c={self.c!r}, d={self.d!r})"


def krein_langer_factor(s, *, circle_tol=CIRCLE_TOL, boundary_margin=1e-6, samples=512):
    """Split s = s0 / b with s0 analytic on the closed disk and b the Blaschke
    product over the poles of s inside the open disk (with multiplicity).

    The order of b is the negative-squares index of s. Raises BoundaryPole if
    a pole sits numerically on the circle and NotGeneralizedSchur when the
    analytic part exceeds modulus 1 on circle samples.
    """
    s = as_rational(s)
    poles = s.poles()
    disk = []
    for p in poles:
        if abs(abs(p) - 1.0) <= boundary_margin:
            raise BoundaryPole(f"pole {p} lies on the unit circle within {boundary_margin}")
        if abs(p) < 1.0:
            disk.append(complex(p))
    b = BlaschkeProduct(disk, 1.0, margin=boundary_margin)
    s0 = s * b.as_rational() if disk else s
    w = unit_circle_samples(samples)
    sup = float(np.max(np.abs(s0(w))))
    if sup > 1.0 + max(circle_tol, 1e-9):
        raise NotGeneralizedSchur(f"analytic factor reaches modulus {sup:.6g} on the circle")
    return s0, b


def cayley(z):
    """Pointwise Cayley transform (1 + z) / (1 - z)."""
    z = complex(z)
    if z == 1.0:
        raise PoleAtOne("Cayley transform undefined at z = 1")
    return (1.0 + z) / (1.0 - z)


def cayley_fn(s):
    """Cayley transform of a rational function, (1 + s) / (1 - s)."""
    s = as_rational(s)
    bot = RationalFn.constant(1.0) - s
    if bot.is_zero:
        raise DegenerateLFT("Cayley transform degenerate: s is identically 1")
    return (RationalFn.constant(1.0) + s) / bot
