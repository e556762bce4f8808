"""Exact truncated power series and the algebraic generating functions.

Everything here is exact arithmetic: series coefficients are
``fractions.Fraction`` (or quadratic-field numbers, see :class:`QSqrt5`),
so agreement between two computations is literal equality of rationals,
not a floating-point tolerance.

Three independent routes to the counting series exist for the algebraic
classes: the generating-tree census (:mod:`invseq.gentree`), the closed
forms expanded here (:func:`expand_closed_form`), and order-by-order
iteration of the catalytic functional equations
(:func:`iterate_catalytic`).  The test-suite confirms they coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .gentree import ClassId


class QSqrt5:
    """A number a + b*sqrt(5) with rational a, b; a field, so division works."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @staticmethod
    def _coerce(x) -> "QSqrt5":
        if isinstance(x, QSqrt5):
            return x
        if isinstance(x, (int, Fraction)):
            return QSqrt5(x)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QSqrt5(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QSqrt5(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QSqrt5(o.a - self.a, o.b - self.b)

    def __neg__(self):
        return QSqrt5(-self.a, -self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QSqrt5(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self) -> "QSqrt5":
        norm = self.a * self.a - 5 * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("zero element of Q(sqrt 5)")
        return QSqrt5(self.a / norm, -self.b / norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def conjugate(self) -> "QSqrt5":
        return QSqrt5(self.a, -self.b)

    def __float__(self):
        return float(self.a) + float(self.b) * 5 ** 0.5

    def __repr__(self):
        return f"QSqrt5({self.a}, {self.b})"


SQRT5 = QSqrt5(0, 1)


class TruncatedSeries:
    """A power series known modulo z^order, with exact coefficients."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        cs = list(coeffs)
        if order is None:
            order = len(cs)
        if order < 1:
            raise ValueError("order must be at least 1")
        zero = cs[0] * 0 if cs else Fraction(0)
        cs = cs[:order] + [zero] * (order - len(cs))
        self.coeffs = cs
        self.order = order

    @classmethod
    def from_poly(cls, coeffs: Sequence, order: int) -> "TruncatedSeries":
        """A polynomial in z, viewed as a series to the given order."""
        return cls([Fraction(c) if isinstance(c, int) else c for c in coeffs], order)

    @property
    def zero_coeff(self):
        return self.coeffs[0] * 0

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        return f"TruncatedSeries([{shown}{', ...' if self.order > 8 else ''}], order={self.order})"

    def _wrap(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries([other], self.order)

    def __add__(self, other):
        o = self._wrap(other)
        n = min(self.order, o.order)
        return TruncatedSeries([self.coeffs[i] + o.coeffs[i] for i in range(n)], n)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._wrap(other)
        n = min(self.order, o.order)
        return TruncatedSeries([self.coeffs[i] - o.coeffs[i] for i in range(n)], n)

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        zero = self.zero_coeff
        out = [zero] * n
        for i, a in enumerate(self.coeffs[:n]):
            if not a:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        c0 = self.coeffs[0]
        if not c0:
            raise ZeroDivisionError("series has no inverse: zero constant term")
        b0 = 1 / c0 if not isinstance(c0, Fraction) else Fraction(1) / c0
        out = [b0]
        for n in range(1, self.order):
            acc = self.zero_coeff
            for i in range(1, n + 1):
                acc = acc + self.coeffs[i] * out[n - i]
            out.append(-b0 * acc)
        return TruncatedSeries(out, self.order)

    def __truediv__(self, other):
        return self * self._wrap(other).inverse()

    def __rtruediv__(self, other):
        return self._wrap(other) / self

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by z^k; negative k requires the low coefficients to vanish."""
        zero = self.zero_coeff
        if k >= 0:
            return TruncatedSeries([zero] * k + self.coeffs, self.order + k)
        if any(self.coeffs[i] for i in range(-k)):
            raise ValueError(f"cannot shift by {k}: low-order coefficients nonzero")
        return TruncatedSeries(self.coeffs[-k:], self.order + k)

    def sqrt(self, const_root=None) -> "TruncatedSeries":
        """The square root with constant term const_root (default 1)."""
        if const_root is None:
            const_root = Fraction(1)
        if const_root * const_root != self.coeffs[0]:
            raise ValueError("const_root squared must equal the constant term")
        out = [const_root]
        twice = const_root + const_root
        for n in range(1, self.order):
            acc = self.zero_coeff
            for i in range(1, n):
                acc = acc + out[i] * out[n - i]
            out.append((self.coeffs[n] - acc) / twice)
        return TruncatedSeries(out, self.order)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __call__(self, k: int = None):
        raise TypeError("truncated series cannot be evaluated at a point")


def polymul(a: Sequence, b: Sequence) -> list:
    """Full (untruncated) product of coefficient lists."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def kernel_root(
    kernel: Sequence[TruncatedSeries], x0, order: int
) -> TruncatedSeries:
    """The power-series root X(z) of K(x, z) = sum_i kernel[i] x^i with X(0) = x0.

    Requires a simple root: dK/dx at (x0, z=0) must be nonzero.  Newton
    iteration in the series ring converges quadratically, so the residual
    valuation doubles per step.
    """
    ks = [TruncatedSeries(k.coeffs, order) for k in kernel]
    x = TruncatedSeries([Fraction(x0)], order)

    def horner(cs, v):
        acc = TruncatedSeries([Fraction(0)], order)
        for c in reversed(cs):
            acc = acc * v + c
        return acc

    deriv = [ks[i] * i for i in range(1, len(ks))]
    if not horner(deriv, x).coeffs[0]:
        raise ValueError("not a simple root: derivative vanishes at z=0")
    for _ in range(order.bit_length() + 2):
        res = horner(ks, x)
        if res.is_zero():
            return x
        x = x - res / horner(deriv, x)
    res = horner(ks, x)
    if not res.is_zero():
        raise RuntimeError("kernel root iteration failed to converge")
    return x


def hensel_quadratic_factors(
    p3: Sequence, p2: Sequence, p1: Sequence, p0: Sequence, order: int
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Symmetric functions of the two bounded roots of a quartic kernel.

    The quartic z^2 x^4 + p3 x^3 + p2 x^2 + p1 x + p0 (coefficients given
    as z-polynomials) has two roots bounded near z = 0 and two diverging
    like 1/z.  Factor it as (z^2 x^2 + a x + b)(x^2 + c x + d) with
    a(0)=0, b(0)=1, c(0)=-2, d(0)=1; the bounded pair are the roots of the
    second factor, so their sum is -c and their product is d.  The
    order-by-order system for (a_n, b_n, c_n, d_n) is triangular with unit
    diagonal, hence solvable in exact arithmetic.

    Returns (e1, e2) = (sum, product) of the bounded roots.
    """

    def coeff(poly, n):
        return Fraction(poly[n]) if n < len(poly) else Fraction(0)

    if (coeff(p3, 0), coeff(p2, 0), coeff(p1, 0), coeff(p0, 0)) != (0, 1, -2, 1):
        raise ValueError("quartic does not degenerate to (x - 1)^2 at z = 0")

    a = [Fraction(0)]
    b = [Fraction(1)]
    c = [Fraction(-2)]
    d = [Fraction(1)]

    def mid(u, v, n):
        return sum((u[i] * v[n - i] for i in range(1, n)), Fraction(0))

    for n in range(1, order):
        an = coeff(p3, n) - (c[n - 2] if n >= 2 else 0)
        a.append(an)
        bn = coeff(p2, n) - (d[n - 2] if n >= 2 else 0) - mid(a, c, n) + 2 * an
        b.append(bn)
        cn = coeff(p1, n) - an + 2 * bn - mid(a, d, n) - mid(b, c, n)
        c.append(cn)
        dn = coeff(p0, n) - bn - mid(b, d, n)
        d.append(dn)

    # paranoia: the factorisation must reproduce the quartic
    sa, sb = TruncatedSeries(a, order), TruncatedSeries(b, order)
    sc, sd = TruncatedSeries(c, order), TruncatedSeries(d, order)
    z2 = TruncatedSeries.from_poly([0, 0, 1], order)
    checks = [
        (z2 * sc + sa, p3),
        (z2 * sd + sa * sc + sb, p2),
        (sa * sd + sb * sc, p1),
        (sb * sd, p0),
    ]
    for got, want in checks:
        if got != TruncatedSeries.from_poly(want, order):
            raise RuntimeError("quadratic factor lifting produced a bad factorisation")

    return -sc, sd


# Quartic kernels whose bounded-root symmetric functions feed the closed forms
# (coefficients of x^3, x^2, x^1, x^0; the x^4 coefficient is z^2 in both).
QUARTIC_KERNELS = {
    ClassId.C1833A: ([0, -2, -1], [1, 3], [-2, -2], [1]),
    ClassId.C733: ([0, -2, -1], [1, 3, -1], [-2, -1], [1]),
}

# Cubic kernels with a unique power-series root (coefficients of x^0..x^3).
CUBIC_KERNELS = {
    ClassId.C663A: ([1], [-1, -1, 1], [0, 2], [0, 0, -1]),
    ClassId.C1420: ([1, 1], [-1, -1], [0, 2], [0, 0, -1]),
}


def bounded_roots_733(order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """The two bounded kernel roots individually, over Q(sqrt 5).

    The discriminant of the lifted quadratic factor has valuation 2 with
    leading coefficient 5, so each root is a power series once sqrt(5) is
    adjoined.  This is an independent route to the same symmetric
    functions as :func:`hensel_quadratic_factors`.
    """
    e1, e2 = hensel_quadratic_factors(*QUARTIC_KERNELS[ClassId.C733], order + 2)
    disc = e1 * e1 - 4 * e2
    u = disc.shift(-2)
    if u.coeffs[0] != 5:
        raise RuntimeError("discriminant/z^2 should have constant term 5")
    u5 = TruncatedSeries([QSqrt5(cf) for cf in u.coeffs], u.order)
    root = u5.sqrt(SQRT5)
    half = Fraction(1, 2)
    e1_5 = TruncatedSeries([QSqrt5(cf) for cf in e1.coeffs], order)
    x1 = (e1_5 + root.shift(1)) * half
    x3 = (e1_5 - root.shift(1)) * half
    return x1, x3


def _sqrt_poly(poly: Sequence, order: int) -> TruncatedSeries:
    return TruncatedSeries.from_poly(poly, order).sqrt()


CLOSED_FORM_CLASSES = (
    ClassId.C1176,
    ClassId.C1253,
    ClassId.C1016,
    ClassId.C663A,
    ClassId.C1420,
    ClassId.C1833A,
    ClassId.C733,
)


def expand_closed_form(class_id: ClassId, order: int) -> list[Fraction]:
    """Coefficients of the solved generating function, exact to z^(order-1)."""
    n = order + 2  # headroom for the valuation shifts
    P = lambda *cs: TruncatedSeries.from_poly(cs, n)
    if class_id == ClassId.C1176:
        s = _sqrt_poly([1, -4, -4], n)
        num = P(2, 1, -10, 4) - P(2, -3) * s
        f = num.shift(-1) / (8 * P(1, -1) * P(1, -1))
    elif class_id == ClassId.C1253:
        s = _sqrt_poly([1, -4], n)
        num = P(2, -15, 32, -16) + P(0, 1) * P(1, -2) * P(1, 2) * s
        den = 2 * P(1, -1) * P(1, -1) * P(1, -2) * P(1, -4)
        f = num / den
    elif class_id == ClassId.C1016:
        s = _sqrt_poly([1, -4], n)
        num = P(1, -4) * P(1, -2) * P(3, -2) - P(1, -8, 12, -2) * s
        den = 2 * P(1, -1) * P(1, -1) * P(1, -4)
        f = num / den
    elif class_id == ClassId.C663A:
        kern = [TruncatedSeries.from_poly(cs, n) for cs in CUBIC_KERNELS[class_id]]
        x = kernel_root(kern, 1, n)
        num = (x - 1) * (1 + P(0, -1, 1) * x)
        f = num.shift(-1) / x
    elif class_id == ClassId.C1420:
        kern = [TruncatedSeries.from_poly(cs, n) for cs in CUBIC_KERNELS[class_id]]
        x = kernel_root(kern, 1, n)
        num = P(1, 1) * (x - 1) - P(0, 1, -1) * x * x
        f = num.shift(-1) / (P(1, 1) * x)
    elif class_id == ClassId.C1833A:
        e1, e2 = hensel_quadratic_factors(*QUARTIC_KERNELS[class_id], n)
        w = e2 - e1 + 1  # (X1 - 1)(X2 - 1); vanishes at z = 0
        num = w * (e2.shift(1) - 1)
        den = e2 * (w.shift(1) + 1)
        f = num.shift(-1) / den
    elif class_id == ClassId.C733:
        e1, e2 = hensel_quadratic_factors(*QUARTIC_KERNELS[class_id], n)
        num = 1 - e1.shift(1)
        den = 1 - e1.shift(1) - P(0, 1) + e2.shift(2)
        f = num / den
    else:
        raise ValueError(f"no closed form for class {class_id.value}")
    return f.coeffs[:order]


# ---------------------------------------------------------------------------
# Catalytic functional equations, iterated order by order in z.
# The catalytic variable x lives in plain coefficient lists; each division
# by (1 - x) must be exact, which the code asserts.
# ---------------------------------------------------------------------------


def _div_1mx(p: list[Fraction]) -> list[Fraction]:
    """Divide the polynomial p(x) by (1 - x); p(1) = 0 is required."""
    out = []
    run = Fraction(0)
    for c in p:
        run += c
        out.append(run)
    if run != 0:
        raise ArithmeticError("polynomial not divisible by (1 - x)")
    out.pop()
    return out or [Fraction(0)]


def _padd(*ps: Sequence[Fraction]) -> list[Fraction]:
    n = max(len(p) for p in ps)
    return [sum((p[i] for p in ps if i < len(p)), Fraction(0)) for i in range(n)]


def _pneg(p: Sequence[Fraction]) -> list[Fraction]:
    return [-c for c in p]


def _pscale(p: Sequence[Fraction], k) -> list[Fraction]:
    return [c * k for c in p]


def _xshift(p: Sequence[Fraction]) -> list[Fraction]:
    return [Fraction(0), *p]


def _const(c) -> list[Fraction]:
    return [Fraction(c)]


def _p1(p: Sequence[Fraction]) -> Fraction:
    return sum(p, Fraction(0))


CATALYTIC_CLASSES = (
    ClassId.C1176,
    ClassId.C1253,
    ClassId.C1016,
    ClassId.C663A,
    ClassId.C1420,
)


def iterate_catalytic(class_id: ClassId, order: int) -> list[Fraction]:
    """Solve the class's catalytic functional-equation system to z^(order-1)."""
    if class_id in (ClassId.C1176, ClassId.C1253, ClassId.C1016):
        return _iterate_right_family(class_id, order)
    if class_id in (ClassId.C663A, ClassId.C1420):
        return _iterate_left_pair(class_id, order)
    raise ValueError(f"no catalytic system for class {class_id.value}")


def _iterate_right_family(class_id: ClassId, order: int) -> list[Fraction]:
    """The five-function system shared by classes 1176, 1253 and 1016.

    A tracks the non-decreasing part, B/C/D the staged growth through a
    partial repeat-of-maximum pattern, E the descending tail.  They differ
    only in how C, D and E evolve.  F_n = A_n(1) + D_n(1) + E_n(1).
    """
    A = _const(1)
    B = _const(0)
    C = _const(0)
    D = _const(0)
    E = _const(0)
    out = [Fraction(1)]
    for n in range(1, order):
        alpha = _p1(A)
        # A(z,x) = 1 + z/(1-x) (A - x A(zx, 1))
        monomial = [Fraction(0)] * n + [alpha]
        A_new = _div_1mx(_padd(A, _pneg(monomial)))
        # B = zB + z/(1-x) (z dA/dz - x dA/dx + x/(1-x) (A(zx,1) - A))
        inner = _div_1mx(
            _xshift(_padd([Fraction(0)] * (n - 1) + [alpha], _pneg(A)))
        )
        dz = _pscale(A, n - 1)
        dx = _xshift([i * c for i, c in enumerate(A)][1:]) if len(A) > 1 else _const(0)
        B_new = _padd(B, _div_1mx(_padd(dz, _pneg(dx), inner)))
        if class_id == ClassId.C1176:
            C_new = B
            D_new = _padd(D, C)
            E_new = _div_1mx(
                _padd(
                    _const(_p1(E) + alpha + _p1(D)),
                    _pneg(E),
                    _pneg(A),
                    _pneg(D),
                )
            )
        elif class_id == ClassId.C1253:
            C_new = _padd(C, B)
            D_new = _padd(_pscale(D, 2), C)
            E_new = _padd(E, _div_1mx(_padd(_const(alpha), _pneg(A))))
        else:  # 1016
            C_new = B
            D_new = _padd(D, C)
            E_new = _div_1mx(_padd(_const(alpha), _pneg(A)))
        A, B, C, D, E = A_new, B_new, C_new, D_new, E_new
        out.append(_p1(A) + _p1(D) + _p1(E))
    return out


def _iterate_left_pair(class_id: ClassId, order: int) -> list[Fraction]:
    """The two-function systems for classes 663A and 1420.

    A(x) and B(x) track the leading-zero count x; for 663A only A(1)
    counts, for 1420 the total is A(1) + B(1).
    """
    A = _const(1)
    B = _const(0)
    out = [Fraction(1)]
    for n in range(1, order):
        alpha, beta = _p1(A), _p1(B)
        if class_id == ClassId.C663A:
            # A = 1 + zx/(1-x) [A(1) - x A] + zx B
            # B = z/(1-x) [x A(1) - A] + z + zx B
            A_new = _padd(
                _div_1mx(_xshift(_padd(_const(alpha), _pneg(_xshift(A))))),
                _xshift(B),
            )
            B_new = _padd(
                _div_1mx(_padd(_xshift(_const(alpha)), _pneg(A))),
                _const(1 if n == 1 else 0),
                _xshift(B),
            )
            A, B = A_new, B_new
            out.append(_p1(A))
        else:  # 1420
            # A = 1 + zx/(1-x) [A(1) - x A] + zx/(1-x) [B(1) - x B]
            # B = z/(1-x) [x A(1) - A] + z + z/(1-x) [x B(1) - B] + zx B
            A_new = _padd(
                _div_1mx(_xshift(_padd(_const(alpha), _pneg(_xshift(A))))),
                _div_1mx(_xshift(_padd(_const(beta), _pneg(_xshift(B))))),
            )
            B_new = _padd(
                _div_1mx(_padd(_xshift(_const(alpha)), _pneg(A))),
                _const(1 if n == 1 else 0),
                _div_1mx(_padd(_xshift(_const(beta)), _pneg(B))),
                _xshift(B),
            )
            A, B = A_new, B_new
            out.append(_p1(A) + _p1(B))
    return out


# ---------------------------------------------------------------------------
# Minimal polynomials: P(z, F) = 0 with P in MINIMAL_POLYNOMIALS[class],
# stored as a list of z-coefficient lists indexed by the power of F.
# ---------------------------------------------------------------------------


def _derived_quadratic(p, q, d, R):
    """Annihilator of F = (p + q sqrt(R)) / d: d^2 F^2 - 2 p d F + (p^2 - q^2 R)."""
    return [
        _padd(polymul(p, p), _pneg(polymul(polymul(q, q), R))),
        _pscale(polymul(p, d), -2),
        polymul(d, d),
    ]


MINIMAL_POLYNOMIALS: dict[ClassId, list[list]] = {
    ClassId.C663A: [[1], [-4, 1], [4, -2], [-1]],
    ClassId.C1420: [[1], [-4], [4], [-1, -1]],
    ClassId.C733: [[1, 2], [-3, -1, -1], [3, -3, 10, -1], [-1, 1, -7, 2], [0, 1, -2, 4]],
    ClassId.C1833A: [
        [1],
        [-5, -2],
        [10, 6],
        [-10, -7, -5],
        [5, 5, 11],
        [-1, -3, -6, -2],
        [0, 1, 0, 3],
    ],
    ClassId.C1176: _derived_quadratic(
        [2, 1, -10, 4], [-2, 3], [0, 8, -16, 8], [1, -4, -4]
    ),
    ClassId.C1253: _derived_quadratic(
        [2, -15, 32, -16], [0, 1, 0, -4], [2, -16, 42, -44, 16], [1, -4]
    ),
    ClassId.C1016: _derived_quadratic(
        [3, -20, 36, -16], [-1, 8, -12, 2], [2, -12, 18, -8], [1, -4]
    ),
}

MINIMAL_POLYNOMIAL_DEGREE = {
    ClassId.C663A: 3,
    ClassId.C1420: 3,
    ClassId.C733: 4,
    ClassId.C1833A: 6,
    ClassId.C1176: 2,
    ClassId.C1253: 2,
    ClassId.C1016: 2,
}


def verify_minimal_polynomial(class_id: ClassId, coeffs: Sequence) -> bool:
    """Check P(z, F) = 0 mod z^len(coeffs) for the stored annihilator."""
    poly = MINIMAL_POLYNOMIALS[class_id]
    order = len(coeffs)
    f = TruncatedSeries([Fraction(c) for c in coeffs], order)
    acc = TruncatedSeries.from_poly(poly[-1], order)
    for cs in reversed(poly[:-1]):
        acc = acc * f + TruncatedSeries.from_poly(cs, order)
    return acc.is_zero()
