"""Exact scalar arithmetic: cyclotomic fields Q(zeta_m), rational function
fields over them, and q-combinatorics.

Cyclotomic numbers are stored as residues modulo the m-th cyclotomic
polynomial in the power basis 1, zeta, ..., zeta^(phi(m)-1), so equality is
structural.  Mixed-order arithmetic lifts both operands to the lcm of their
orders.  Everything is built on `fractions.Fraction`; there is no floating
point anywhere.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Iterable, Sequence


def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError("phi undefined for m < 1")
    result, n, p = m, m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _poly_divmod_z(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # dense integer polynomial division, exact for our cyclotomic quotients
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 0)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("non-exact division")
        c //= den[-1]
        q[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    while num and num[-1] == 0:
        num.pop()
    return q, num


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, dense, constant term first, monic."""
    if m < 1:
        raise ValueError("m must be >= 1")
    num = [0] * m + [1]
    num[0] = -1  # t^m - 1
    for d in range(1, m):
        if m % d == 0:
            num, rem = _poly_divmod_z(num, list(cyclotomic_poly(d)))
            assert not rem
    return tuple(num)


@functools.lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[Fraction, ...], ...]:
    """t^k reduced mod Phi_m for k = 0 .. max(m, 2*phi(m)-2)."""
    phi = euler_phi(m)
    top = max(m, 2 * phi - 2) + 1
    rows: list[tuple[Fraction, ...]] = []
    cur = [Fraction(0)] * phi
    phim = cyclotomic_poly(m)
    for k in range(top):
        if k == 0:
            cur = [Fraction(1)] + [Fraction(0)] * (phi - 1)
        else:
            shifted = [Fraction(0)] + cur[: phi - 1]
            lead = cur[phi - 1]
            if lead:
                # t^phi = -(phim[0] + ... + phim[phi-1] t^(phi-1))
                for i in range(phi):
                    shifted[i] -= lead * phim[i]
            cur = shifted
        rows.append(tuple(cur))
    return tuple(rows)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected rational, got {type(x).__name__}")


class CycNum:
    """An element of Q(zeta_m), reduced modulo Phi_m."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[Fraction]):
        phi = euler_phi(order)
        if len(coeffs) != phi:
            raise ValueError("coefficient vector has wrong length")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *a):
        raise AttributeError("CycNum is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rational(x, order: int = 1) -> "CycNum":
        phi = euler_phi(order)
        c = [Fraction(0)] * phi
        c[0] = _as_fraction(x)
        return CycNum(order, c)

    @staticmethod
    def zeta(order: int, power: int = 1) -> "CycNum":
        power %= order
        table = _power_table(order)
        return CycNum(order, table[power])

    @staticmethod
    def reduce(raw_coeffs: Iterable, order: int) -> "CycNum":
        """Reduce an arbitrary-length coefficient sequence (powers of zeta_m,
        constant first) modulo Phi_m."""
        phi = euler_phi(order)
        acc = [Fraction(0)] * phi
        table = _power_table(order)
        for k, c in enumerate(raw_coeffs):
            c = _as_fraction(c)
            if not c:
                continue
            row = table[k] if k < len(table) else table[k % order]
            for i, r in enumerate(row):
                acc[i] += c * r
        return CycNum(order, acc)

    # -- structure ---------------------------------------------------------

    def lift(self, order: int) -> "CycNum":
        """Rewrite in Q(zeta_order); requires self.order | order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError("can only lift to a multiple of the order")
        step = order // self.order
        phi = euler_phi(order)
        acc = [Fraction(0)] * phi
        table = _power_table(order)
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            row = table[(k * step) % order]
            for i, r in enumerate(row):
                acc[i] += c * r
        return CycNum(order, acc)

    def _pair(self, other) -> tuple["CycNum", "CycNum"]:
        if isinstance(other, (int, Fraction)):
            other = CycNum.rational(other, 1)
        if not isinstance(other, CycNum):
            raise TypeError(f"cannot mix CycNum with {type(other).__name__}")
        if self.order == other.order:
            return self, other
        m = math.lcm(self.order, other.order)
        return self.lift(m), other.lift(m)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def key(self) -> tuple:
        """Hashable canonical key (valid for comparing same-order values)."""
        return (self.order, self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return a.coeffs == b.coeffs

    __hash__ = None  # mutable-order comparisons; use .key() for dict keys

    def __add__(self, other):
        a, b = self._pair(other)
        return CycNum(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.order, [-x for x in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, CycNum):
            other = CycNum.rational(other, 1)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = _as_fraction(other)
            return CycNum(self.order, [c * f for c in self.coeffs])
        a, b = self._pair(other)
        phi = len(a.coeffs)
        conv = [Fraction(0)] * (2 * phi - 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    conv[i + j] += x * y
        table = _power_table(a.order)
        acc = [Fraction(0)] * phi
        for k, c in enumerate(conv):
            if not c:
                continue
            row = table[k]
            for i, r in enumerate(row):
                acc[i] += c * r
        return CycNum(a.order, acc)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if not self:
            raise ZeroDivisionError("division by zero in Q(zeta)")
        # extended Euclid in Q[t] against Phi_m
        phim = [Fraction(c) for c in cyclotomic_poly(self.order)]
        a = list(self.coeffs)
        while a and not a[-1]:
            a.pop()
        r0, r1 = phim, a
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _poly_divmod_q(r0, r1)
            r0, r1 = r1, r
            s2 = _poly_sub_q(s0, _poly_mul_q(q, s1))
            s0, s1 = s1, s2
        # r0 = gcd, a unit in Q since Phi_m is irreducible and self != 0
        if len(r0) != 1:
            raise ArithmeticError("inverse failed: gcd not constant")
        inv_unit = 1 / r0[0]
        s0 = [c * inv_unit for c in s0]
        return CycNum.reduce(s0, self.order)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            f = _as_fraction(other)
            if not f:
                raise ZeroDivisionError
            return self * (Fraction(1) / f)
        a, b = self._pair(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return CycNum.rational(other, 1) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CycNum.rational(1, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- display -----------------------------------------------------------

    def __repr__(self):
        if not self:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                z = f"z{self.order}" if k == 1 else f"z{self.order}^{k}"
                parts.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        return " + ".join(parts).replace("+ -", "- ")


def _poly_divmod_q(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    dn = len(den) - 1
    q = [Fraction(0)] * max(len(num) - dn, 0)
    inv_lead = 1 / den[-1]
    for k in range(len(num) - dn - 1, -1, -1):
        c = num[k + dn] * inv_lead
        q[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    while num and not num[-1]:
        num.pop()
    return q, num


def _poly_mul_q(a: list[Fraction], b: list[Fraction]):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while out and not out[-1]:
        out.pop()
    return out


def _poly_sub_q(a: list[Fraction], b: list[Fraction]):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0)) for i in range(n)]
    while out and not out[-1]:
        out.pop()
    return out


def cyc_reduce(raw_coeffs: Iterable, m: int) -> CycNum:
    """Canonical residue of sum(raw_coeffs[k] * zeta_m^k) modulo Phi_m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return CycNum.reduce(raw_coeffs, m)


def zeta_log(x: CycNum, m: int) -> int | None:
    """Exponent k with x == zeta_m^k, or None if x is not such a root."""
    z = CycNum.zeta(m)
    cur = CycNum.rational(1, m)
    for k in range(m):
        if x == cur:
            return k
        cur = cur * z
    return None


# -- q-combinatorics --------------------------------------------------------


def q_int(n: int, q: CycNum) -> CycNum:
    """Symmetric quantum integer (q^n - q^-n) / (q - q^-1).  Rejects q = +-1."""
    one = CycNum.rational(1, q.order)
    if q == one or q == -one:
        raise ValueError("q = +-1 makes the symmetric q-integer undefined")
    if n < 0:
        return -q_int(-n, q)
    qi = q.inverse()
    return (q ** n - qi ** n) / (q - qi)


@functools.lru_cache(maxsize=None)
def gaussian_binomial_poly(n: int, i: int) -> tuple[int, ...]:
    """One-sided Gaussian binomial as an integer polynomial in v (dense,
    constant first); evaluating at v = q^2 stays exact at roots of unity."""
    if i < 0 or i > n:
        return (0,)
    if i == 0 or i == n:
        return (1,)
    a = gaussian_binomial_poly(n - 1, i - 1)
    b = gaussian_binomial_poly(n - 1, i)
    out = [0] * max(len(a), len(b) + i)
    for k, c in enumerate(a):
        out[k] += c
    for k, c in enumerate(b):
        out[k + i] += c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def q_binom_sym(n: int, i: int, q: CycNum) -> CycNum:
    """Symmetric q-binomial coefficient; the v = q^2 Gaussian polynomial
    times q^(-i(n-i)), which is well defined at every root of unity."""
    one = CycNum.rational(1, q.order)
    if q == one or q == -one:
        raise ValueError("q = +-1 rejected")
    if i < 0 or i > n:
        return CycNum.rational(0, q.order)
    v = q * q
    acc = CycNum.rational(0, q.order)
    vp = CycNum.rational(1, q.order)
    for c in gaussian_binomial_poly(n, i):
        if c:
            acc = acc + vp * c
        vp = vp * v
    return acc * q ** (-i * (n - i))


def gauss_sum(d: int, zeta: CycNum) -> CycNum:
    """One-sided sum 1 + zeta + ... + zeta^(d-1); zero iff ord(zeta) | d."""
    if d < 0:
        raise ValueError("d must be >= 0")
    acc = CycNum.rational(0, zeta.order)
    cur = CycNum.rational(1, zeta.order)
    for _ in range(d):
        acc = acc + cur
        cur = cur * zeta
    return acc


# -- multivariate polynomials over CycNum (plumbing for RatFunc) ------------
#
# A polynomial is dict[exponent tuple -> CycNum] with no zero values stored.


def _p_zero() -> dict:
    return {}


def _p_const(c: CycNum, nvars: int) -> dict:
    return {(0,) * nvars: c} if c else {}


def _p_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e)
        s = c if s is None else s + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _p_neg(a: dict) -> dict:
    return {e: -c for e, c in a.items()}


def _p_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            c = ca * cb
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def _p_scale(a: dict, c: CycNum) -> dict:
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}


def _deglex_key(e: tuple) -> tuple:
    return (sum(e), e)


def _p_lead(a: dict) -> tuple:
    return max(a, key=_deglex_key)


def _p_total_deg(a: dict) -> int:
    return max((sum(e) for e in a), default=-1)


def _p_exact_div(a: dict, b: dict) -> dict:
    """Exact division a / b; raises ArithmeticError when not exact."""
    if not b:
        raise ZeroDivisionError
    if not a:
        return {}
    rem = dict(a)
    lb = _p_lead(b)
    cb = b[lb]
    q: dict = {}
    while rem:
        la = _p_lead(rem)
        e = tuple(x - y for x, y in zip(la, lb))
        if any(x < 0 for x in e):
            raise ArithmeticError("non-exact polynomial division")
        c = rem[la] / cb
        q[e] = c
        rem = _p_add(rem, _p_neg(_p_mul({e: c}, b)))
    return q


def _p_deriv(a: dict, var: int) -> dict:
    out: dict = {}
    for e, c in a.items():
        k = e[var]
        if k:
            e2 = e[:var] + (k - 1,) + e[var + 1 :]
            v = c * k
            s = out.get(e2)
            s = v if s is None else s + v
            if s:
                out[e2] = s
            else:
                out.pop(e2, None)
    return out


def _p_coeffs_in_var(a: dict, var: int) -> dict[int, dict]:
    """Split by the degree in one variable; coefficients keep full arity."""
    out: dict[int, dict] = {}
    for e, c in a.items():
        k = e[var]
        e2 = e[:var] + (0,) + e[var + 1 :]
        out.setdefault(k, {})[e2] = c
    return out


def _p_active_vars(a: dict) -> list[int]:
    if not a:
        return []
    n = len(next(iter(a)))
    return [i for i in range(n) if any(e[i] for e in a)]


def _p_monic(a: dict) -> dict:
    if not a:
        return a
    lead = a[_p_lead(a)]
    return _p_scale(a, lead.inverse())


def _p_gcd(a: dict, b: dict) -> dict:
    """Multivariate gcd over Q(zeta), monic; primitive PRS recursion."""
    if not a:
        return _p_monic(b)
    if not b:
        return _p_monic(a)
    av = _p_active_vars(a)
    bv = _p_active_vars(b)
    active = sorted(set(av) | set(bv))
    if not active:
        nvars = len(next(iter(a)))
        return _p_const(CycNum.rational(1, 1), nvars)
    x = active[-1]
    if x not in av or x not in bv:
        # one argument is free of x: gcd divides the x-coefficients
        f, g = (a, b) if x in bv else (b, a)  # f free of x
        acc = f
        for coeff in _p_coeffs_in_var(g, x).values():
            acc = _p_gcd(acc, coeff)
            if _p_total_deg(acc) == 0:
                break
        return _p_monic(acc)
    ca = _p_content(a, x)
    cb = _p_content(b, x)
    c = _p_gcd(ca, cb)
    f = _p_exact_div(a, ca)
    g = _p_exact_div(b, cb)
    while g:
        r = _p_prem(f, g, x)
        f, g = g, (_p_exact_div(r, _p_content(r, x)) if r else {})
    return _p_monic(_p_mul(c, _p_exact_div(f, _p_content(f, x))))


def _p_content(a: dict, x: int) -> dict:
    coeffs = list(_p_coeffs_in_var(a, x).values())
    acc = coeffs[0]
    for c in coeffs[1:]:
        acc = _p_gcd(acc, c)
        if _p_total_deg(acc) == 0:
            break
    return _p_monic(acc)


def _p_deg_in(a: dict, x: int) -> int:
    return max((e[x] for e in a), default=-1)


def _p_prem(f: dict, g: dict, x: int) -> dict:
    """Pseudo-remainder of f by g with respect to variable x."""
    dg = _p_deg_in(g, x)
    lg = _p_coeffs_in_var(g, x)[dg]
    nvars = len(next(iter(f)))
    r = f
    while r and _p_deg_in(r, x) >= dg:
        dr = _p_deg_in(r, x)
        lr = _p_coeffs_in_var(r, x)[dr]
        shift = {tuple(dr - dg if i == x else 0 for i in range(nvars)): CycNum.rational(1, 1)}
        r = _p_add(_p_mul(r, lg), _p_neg(_p_mul(_p_mul(shift, lr), g)))
    return r


def _p_squarefree_part(a: dict) -> dict:
    """a / gcd(a, all partial derivatives): the product of the distinct
    irreducible factors of a (characteristic zero), made monic."""
    g = a
    for x in _p_active_vars(a):
        g = _p_gcd(g, _p_deriv(a, x))
        if _p_total_deg(g) == 0:
            break
    if _p_total_deg(g) <= 0:
        return _p_monic(a)
    return _p_monic(_p_exact_div(a, g))


def _poly_power_multiplicities_ok(a: dict, n: int) -> bool:
    """True iff every irreducible factor multiplicity in a is divisible by n
    (the constant factor is ignored)."""
    p = _p_monic(a)
    layers: list[dict] = []  # layers[i] = product of factors with multiplicity > i
    while _p_total_deg(p) > 0:
        s = _p_squarefree_part(p)
        layers.append(s)
        p = _p_monic(_p_exact_div(p, s))
    for i, layer in enumerate(layers):
        mult = i + 1
        above = layers[i + 1] if i + 1 < len(layers) else None
        exact_mult_part = _p_exact_div(layer, above) if above else layer
        if _p_total_deg(exact_mult_part) > 0 and mult % n != 0:
            return False
    return True


class FunctionField:
    """Factory for RatFunc elements: Q(zeta_order)(vars)."""

    def __init__(self, order: int, variables: Sequence[str]):
        self.order = order
        self.vars = tuple(variables)

    def const(self, c) -> "RatFunc":
        if isinstance(c, (int, Fraction)):
            c = CycNum.rational(c, self.order)
        nv = len(self.vars)
        return RatFunc(self.order, self.vars, _p_const(c, nv),
                       _p_const(CycNum.rational(1, self.order), nv))

    def zeta(self, power: int = 1) -> "RatFunc":
        return self.const(CycNum.zeta(self.order, power))

    def var(self, name: str) -> "RatFunc":
        i = self.vars.index(name)
        e = tuple(1 if j == i else 0 for j in range(len(self.vars)))
        return RatFunc(self.order, self.vars, {e: CycNum.rational(1, self.order)},
                       _p_const(CycNum.rational(1, self.order), len(self.vars)))

    def zero(self) -> "RatFunc":
        return self.const(0)

    def one(self) -> "RatFunc":
        return self.const(1)

    def monomial(self, exponents: Sequence[int], coeff=1) -> "RatFunc":
        out = self.one()
        for name, e in zip(self.vars, exponents):
            out = out * self.var(name) ** e
        return out * self.const(coeff)


class RatFunc:
    """Element of Q(zeta_m)(v1, ..., vk), stored as a reduced fraction of
    multivariate polynomials with a monic (deglex) denominator."""

    __slots__ = ("order", "vars", "num", "den")

    def __init__(self, order: int, variables: tuple, num: dict, den: dict, normalize: bool = True):
        if normalize:
            if not den:
                raise ZeroDivisionError("zero denominator")
            if num:
                g = _p_gcd(num, den)
                if _p_total_deg(g) > 0:
                    num = _p_exact_div(num, g)
                    den = _p_exact_div(den, g)
                lead = den[_p_lead(den)]
                if not (lead == CycNum.rational(1, lead.order)):
                    inv = lead.inverse()
                    num = _p_scale(num, inv)
                    den = _p_scale(den, inv)
            else:
                den = _p_const(CycNum.rational(1, order), len(variables))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "vars", variables)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFunc is immutable")

    def field(self) -> FunctionField:
        return FunctionField(self.order, self.vars)

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.vars != self.vars:
                raise ValueError("mixed variable sets")
            return other
        if isinstance(other, (int, Fraction, CycNum)):
            return self.field().const(other)
        raise TypeError(f"cannot mix RatFunc with {type(other).__name__}")

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return not (self - o)

    __hash__ = None

    def __add__(self, other):
        o = self._coerce(other)
        num = _p_add(_p_mul(self.num, o.den), _p_mul(o.num, self.den))
        return RatFunc(self.order, self.vars, num, _p_mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.order, self.vars, _p_neg(self.num), self.den, normalize=False)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        return RatFunc(self.order, self.vars, _p_mul(self.num, o.num), _p_mul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if not o.num:
            raise ZeroDivisionError
        return RatFunc(self.order, self.vars, _p_mul(self.num, o.den), _p_mul(self.den, o.num))

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            if not self.num:
                raise ZeroDivisionError
            return (self.field().one() / self) ** (-n)
        out = self.field().one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "RatFunc":
        return self.field().one() / self

    def is_constant(self) -> bool:
        return _p_total_deg(self.num) <= 0 and _p_total_deg(self.den) <= 0

    def constant_value(self) -> CycNum:
        if not self.is_constant():
            raise ValueError("not a constant")
        if not self.num:
            return CycNum.rational(0, self.order)
        e0 = (0,) * len(self.vars)
        return self.num[e0] / self.den[e0]

    def __repr__(self):
        def side(p):
            if not p:
                return "0"
            parts = []
            for e in sorted(p, key=_deglex_key, reverse=True):
                mono = "*".join(
                    f"{v}^{k}" if k > 1 else v
                    for v, k in zip(self.vars, e) if k
                )
                c = repr(p[e])
                parts.append(f"({c})" + (f"*{mono}" if mono else ""))
            return " + ".join(parts)
        if _p_total_deg(self.den) <= 0 and self.den.get((0,) * len(self.vars)) == CycNum.rational(1, self.order):
            return side(self.num)
        return f"[{side(self.num)}] / [{side(self.den)}]"


def ratfunc_is_nth_power(f: RatFunc, n: int) -> bool:
    """True iff f = h^n for some h in the same rational function field.

    Constants of Q(zeta) count as n-th powers (the coefficient field models an
    algebraically closed field), so only the variable content decides.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not f:
        raise ValueError("zero input rejected")
    if n == 1:
        return True
    return _poly_power_multiplicities_ok(f.num, n) and _poly_power_multiplicities_ok(f.den, n)
