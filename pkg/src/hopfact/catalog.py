"""Constructors for the catalog of pointed Hopf algebras: Taft and
generalized Taft algebras, Nichols Hopf algebras E(n), book algebras, the
81-dimensional algebra on two skew primitives, small quantum sl2 and its
reformulation K_q, quantum gl2/gl3 with their adjoint-type Borel halves.

Every constructor returns a validated presentation: counit and coideal
checks pass for all relations, and the structure-map axioms hold on the
generators.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

from .hopf import (CartanData, Grouplike, HopfPresentation, PresentationError,
                   SkewPrimitive, cartan_type)
from .ncalg import FreeAlgebra, GenSymbol, NCPoly
from .scalars import CycNum


def _scalar(x, order: int) -> CycNum:
    if isinstance(x, CycNum):
        return x.lift(math.lcm(x.order, order)) if order % x.order == 0 else x
    return CycNum.rational(x, order)


def taft(n: int, validate: bool = True) -> HopfPresentation:
    """Taft algebra on one grouplike g of order n and one (g,1)-skew
    primitive x, with g x = zeta x g; dimension n^2."""
    if n < 2:
        raise PresentationError("taft(n) needs n >= 2")
    one = CycNum.rational(1, n)
    z = CycNum.zeta(n)
    A = FreeAlgebra([GenSymbol("g", 0), GenSymbol("x", 1)], one)
    g, x = A.gen("g"), A.gen("x")
    kinds = {0: Grouplike(n), 1: SkewPrimitive((0,), ())}
    relations = [g ** n - A.one(), x ** n, x * g - (g * x).scale(z.inverse())]
    return HopfPresentation(f"T({n})", A, kinds, relations, n,
                            params={"n": n, "zeta_power": 1},
                            claimed_basis="g^a x^b with 0 <= a,b < n",
                            claimed_dim=n * n, validate=validate)


def nichols_e(n: int, validate: bool = True) -> HopfPresentation:
    """Nichols Hopf algebra of dimension 2^(n+1): g of order 2 and n
    anti-commuting (g,1)-skew primitives squaring to zero."""
    if n < 1:
        raise PresentationError("nichols_e(n) needs n >= 1")
    one = CycNum.rational(1, 2)
    A = FreeAlgebra([GenSymbol("g", 0)] + [GenSymbol(f"x{i}", 1) for i in range(1, n + 1)], one)
    g = A.gen("g")
    xs = [A.gen(f"x{i}") for i in range(1, n + 1)]
    kinds = {0: Grouplike(2)}
    for i in range(1, n + 1):
        kinds[i] = SkewPrimitive((0,), ())
    relations = [g * g - A.one()]
    relations += [x * x for x in xs]
    relations += [x * g + g * x for x in xs]
    relations += [xs[j] * xs[i] + xs[i] * xs[j] for i in range(n) for j in range(i + 1, n)]
    return HopfPresentation(f"E({n})", A, kinds, relations, 2,
                            params={"n": n},
                            claimed_basis="g^a x1^e1 ... xn^en with a, e_i in {0,1}",
                            claimed_dim=2 ** (n + 1), validate=validate)


def gen_taft(n: int, m: int, alpha=0, validate: bool = True) -> HopfPresentation:
    """Generalized Taft algebra: g of order n, (g,1)-skew primitive x with
    g x = q x g for q of order m, and x^m = alpha (g^m - 1); needs m | n.
    Dimension n*m.  The primitive root is taken as q = zeta_n^(-n/m), so the
    skew primitive raises the eigenspace grading by n/m + 1."""
    if m < 2 or n % m:
        raise PresentationError("gen_taft(n, m, alpha) needs m >= 2 dividing n")
    s = n // m
    one = CycNum.rational(1, n)
    q = CycNum.zeta(n, (-s) % n)
    A = FreeAlgebra([GenSymbol("g", 0), GenSymbol("x", 1)], one)
    g, x = A.gen("g"), A.gen("x")
    kinds = {0: Grouplike(n), 1: SkewPrimitive((0,), ())}
    a = _scalar(alpha, n)
    relations = [g ** n - A.one(),
                 x ** m - (g ** m - A.one()).scale(a),
                 x * g - (g * x).scale(q.inverse())]
    return HopfPresentation(f"T({n},{m},{alpha})", A, kinds, relations, n,
                            params={"n": n, "m": m, "alpha": a, "q_power": (-s) % n},
                            claimed_basis="g^a x^b with 0 <= a < n, 0 <= b < m",
                            claimed_dim=n * m, validate=validate)


def book(n: int, p: int, validate: bool = True) -> HopfPresentation:
    """Book algebra: g of order n, a (1,g)-skew primitive x1 and a
    (g^p,1)-skew primitive x2 with g x1 = zeta x1 g, g x2 = zeta^p x2 g,
    commuting x1, x2; needs gcd(p, n) = 1, 0 < p < n.  Dimension n^3."""
    if n < 2 or not (0 < p < n) or math.gcd(p, n) != 1:
        raise PresentationError("book(n, p) needs 0 < p < n coprime to n")
    one = CycNum.rational(1, n)
    z = CycNum.zeta(n)
    A = FreeAlgebra([GenSymbol("g", 0), GenSymbol("x1", 1), GenSymbol("x2", 1)], one)
    g, x1, x2 = A.gen("g"), A.gen("x1"), A.gen("x2")
    kinds = {0: Grouplike(n),
             1: SkewPrimitive((), (0,)),
             2: SkewPrimitive((0,) * p, ())}
    relations = [g ** n - A.one(), x1 ** n, x2 ** n,
                 x1 * g - (g * x1).scale(z.inverse()),
                 x2 * g - (g * x2).scale(z.inverse() ** p),
                 x2 * x1 - x1 * x2]
    return HopfPresentation(f"h(zeta_{n},{p})", A, kinds, relations, n,
                            params={"n": n, "p": p},
                            claimed_basis="g^a x1^b x2^c with 0 <= a,b,c < n",
                            claimed_dim=n ** 3, validate=validate)


def h81(validate: bool = True) -> HopfPresentation:
    """The 81-dimensional pointed Hopf algebra: g of order 3 and two
    (g,1)-skew primitives x, y with gx = w xg, gy = w yg for w a primitive
    cube root, cubes of x, y and of the q-commutator vanishing, plus the two
    degree-three straightening relations."""
    one = CycNum.rational(1, 3)
    w = CycNum.zeta(3)
    A = FreeAlgebra([GenSymbol("g", 0), GenSymbol("x", 1), GenSymbol("y", 1)], one)
    g, x, y = A.gen("g"), A.gen("x"), A.gen("y")
    kinds = {0: Grouplike(3),
             1: SkewPrimitive((0,), ()),
             2: SkewPrimitive((0,), ())}
    qcomm = x * y - (y * x).scale(w)
    relations = [g ** 3 - A.one(),
                 x * g - (g * x).scale(w.inverse()),
                 y * g - (g * y).scale(w.inverse()),
                 x ** 3, y ** 3,
                 x * x * y + x * y * x + y * x * x,
                 y * y * x + y * x * y + x * y * y,
                 qcomm ** 3]
    return HopfPresentation("H81", A, kinds, relations, 3,
                            params={}, claimed_basis=None, claimed_dim=81,
                            validate=validate)


def h81_xy_relations():
    """The {x,y}-generated subalgebra data: free algebra on x, y with the
    five defining relations; its dimension 27 accounts for 81 = 3 * 27."""
    one = CycNum.rational(1, 3)
    w = CycNum.zeta(3)
    A = FreeAlgebra([GenSymbol("x", 1), GenSymbol("y", 1)], one)
    x, y = A.gen("x"), A.gen("y")
    qcomm = x * y - (y * x).scale(w)
    relations = [x ** 3, y ** 3,
                 x * x * y + x * y * x + y * x * x,
                 y * y * x + y * x * y + x * y * y,
                 qcomm ** 3]
    return A, relations


def uq_sl2(m: int, lam=1, exp: int = 1, validate: bool = True) -> HopfPresentation:
    """The m^3-dimensional algebra on a grouplike k, a (k,1)-skew primitive e
    and a (1,k^-1)-skew primitive f with ke = q^2 ek, kf = q^-2 fk and
    ef - fe = lam (k - k^-1)/(q - q^-1); lam != 0 is small quantum sl2, and
    lam = 0 its associated graded algebra.  Requires ord(q^2) = m, so m odd
    here with q = zeta_m^exp."""
    if m < 3 or m % 2 == 0 or math.gcd(exp, m) != 1:
        raise PresentationError("uq_sl2(m) implemented for odd m >= 3 with gcd(exp, m) = 1 "
                                "(so that ord(q^2) = m)")
    one = CycNum.rational(1, m)
    q = CycNum.zeta(m, exp)
    A = FreeAlgebra([GenSymbol("k", 0), GenSymbol("e", 1), GenSymbol("f", 1)], one)
    k, e, f = A.gen("k"), A.gen("e"), A.gen("f")
    kinds = {0: Grouplike(m),
             1: SkewPrimitive((0,), ()),
             2: SkewPrimitive((), (0,) * (m - 1))}
    lam = _scalar(lam, m)
    kminus = k ** (m - 1)
    cart = (k - kminus).scale(lam / (q - q.inverse()))
    relations = [k ** m - A.one(),
                 e * k - (k * e).scale(q.inverse() ** 2),
                 f * k - (k * f).scale(q ** 2),
                 f * e - e * f + cart,
                 e ** m, f ** m]
    name = f"u_q(sl2)[m={m}]" if lam else f"gr-u_q(sl2)[m={m}]"
    return HopfPresentation(name, A, kinds, relations, m,
                            params={"m": m, "lambda": lam, "q_power": exp,
                                    "grading_power": (2 * exp) % m},
                            claimed_basis="k^a e^b f^c with 0 <= a,b,c < m",
                            claimed_dim=m ** 3, validate=validate)


def kq(m: int, exp: int = 1, validate: bool = True) -> HopfPresentation:
    """K_q: grouplike g of order m with (g,1)-skew primitives x, y, relations
    gx = qxg, gy = q^-1 yg, yx - qxy = 1 - g^2; dimension m^3."""
    if m < 2 or math.gcd(exp, m) != 1:
        raise PresentationError("kq(m) needs a primitive m-th root, gcd(exp, m) = 1")
    one = CycNum.rational(1, m)
    q = CycNum.zeta(m, exp)
    A = FreeAlgebra([GenSymbol("g", 0), GenSymbol("x", 1), GenSymbol("y", 1)], one)
    g, x, y = A.gen("g"), A.gen("x"), A.gen("y")
    kinds = {0: Grouplike(m),
             1: SkewPrimitive((0,), ()),
             2: SkewPrimitive((0,), ())}
    relations = [g ** m - A.one(), x ** m, y ** m,
                 x * g - (g * x).scale(q.inverse()),
                 y * g - (g * y).scale(q),
                 y * x - (x * y).scale(q) - A.one() + g * g]
    return HopfPresentation(f"K_q[m={m},q=zeta^{exp}]", A, kinds, relations, m,
                            params={"m": m, "q_power": exp},
                            claimed_basis="g^a x^b y^c with 0 <= a,b,c < m",
                            claimed_dim=m ** 3, validate=validate)


def uq_gl2(m: int, exp: int = 1, validate: bool = True) -> HopfPresentation:
    """Quantum gl2 at an odd-order root of unity: grouplikes g1, g2, a
    (k,1)-skew primitive e and a (1,k^-1)-skew primitive f for k = g1 g2^-1;
    dimension m^4."""
    if m < 3 or m % 2 == 0 or math.gcd(exp, m) != 1:
        raise PresentationError("uq_gl2(m) needs odd m >= 3 (root of unity of odd order)")
    one = CycNum.rational(1, m)
    q = CycNum.zeta(m, exp)
    A = FreeAlgebra([GenSymbol("g1", 0), GenSymbol("g2", 0),
                     GenSymbol("e", 1), GenSymbol("f", 1)], one)
    g1, g2, e, f = (A.gen(s) for s in ("g1", "g2", "e", "f"))
    k_word = (0,) + (1,) * (m - 1)          # g1 g2^-1
    kinv_word = (0,) * (m - 1) + (1,)       # g1^-1 g2
    kinds = {0: Grouplike(m), 1: Grouplike(m),
             2: SkewPrimitive(k_word, ()),
             3: SkewPrimitive((), kinv_word)}
    kk = A.from_word(k_word)
    kkinv = A.from_word(kinv_word)
    relations = [g1 ** m - A.one(), g2 ** m - A.one(),
                 g2 * g1 - g1 * g2,
                 e * g1 - (g1 * e).scale(q.inverse()),
                 e * g2 - (g2 * e).scale(q),
                 f * g1 - (g1 * f).scale(q),
                 f * g2 - (g2 * f).scale(q.inverse()),
                 f * e - e * f + (kk - kkinv).scale((q - q.inverse()).inverse()),
                 e ** m, f ** m]
    return HopfPresentation(f"u_q(gl2)[m={m}]", A, kinds, relations, m,
                            params={"m": m, "q_power": exp},
                            claimed_basis="g1^a g2^b e^c f^d with exponents < m",
                            claimed_dim=m ** 4, validate=validate)


def uq_prime_gl2(m: int, exp: int = 1, validate: bool = True) -> HopfPresentation:
    """The m^4-dimensional modification of quantum gl2: grouplikes gamma1,
    gamma2 and skew primitives x1 (gamma1,1), x2 (gamma2,1) with
    x2 x1 - q x1 x2 = 1 - gamma1 gamma2."""
    if m < 2 or math.gcd(exp, m) != 1:
        raise PresentationError("uq_prime_gl2(m) needs a primitive m-th root of unity")
    one = CycNum.rational(1, m)
    q = CycNum.zeta(m, exp)
    A = FreeAlgebra([GenSymbol("c1", 0), GenSymbol("c2", 0),
                     GenSymbol("x1", 1), GenSymbol("x2", 1)], one)
    c1, c2, x1, x2 = (A.gen(s) for s in ("c1", "c2", "x1", "x2"))
    kinds = {0: Grouplike(m), 1: Grouplike(m),
             2: SkewPrimitive((0,), ()),
             3: SkewPrimitive((1,), ())}
    relations = [c1 ** m - A.one(), c2 ** m - A.one(),
                 c2 * c1 - c1 * c2,
                 x1 ** m, x2 ** m,
                 x2 * x1 - (x1 * x2).scale(q) - A.one() + c1 * c2,
                 x1 * c1 - (c1 * x1).scale(q.inverse()),
                 x2 * c1 - (c1 * x2).scale(q),
                 x1 * c2 - (c2 * x1).scale(q.inverse()),
                 x2 * c2 - (c2 * x2).scale(q)]
    return HopfPresentation(f"u'_q(gl2)[m={m},q=zeta^{exp}]", A, kinds, relations, m,
                            params={"m": m, "q_power": exp},
                            claimed_basis="c1^a c2^b x1^c x2^d with exponents < m",
                            claimed_dim=m ** 4, validate=validate)


def _serre(a: NCPoly, b: NCPoly, q: CycNum) -> NCPoly:
    # a^2 b - (q + q^-1) a b a + b a^2
    return a * a * b - (a * b * a).scale(q + q.inverse()) + b * a * a


def uq_gln(n: int, m: int, exp: int = 1, validate: bool = True) -> HopfPresentation:
    """Quantum gl_n at an odd-order root of unity, n in {2, 3}.  For n = 3
    the rank-two root vectors are the q-commutators e1 e2 - q^-1 e2 e1 and
    f1 f2 - q^-1 f2 f1, and their m-th powers are imposed along with the
    simple-generator nilpotencies; dimension m^(n^2)."""
    if n == 2:
        return uq_gl2(m, exp, validate)
    if n != 3:
        raise PresentationError("uq_gln supports n in {2, 3}")
    if m < 3 or m % 2 == 0 or math.gcd(exp, m) != 1:
        raise PresentationError("uq_gln(m) needs odd m >= 3 (root of unity of odd order)")
    one = CycNum.rational(1, m)
    q = CycNum.zeta(m, exp)
    A = FreeAlgebra([GenSymbol("g1", 0), GenSymbol("g2", 0), GenSymbol("g3", 0),
                     GenSymbol("e1", 1), GenSymbol("e2", 1),
                     GenSymbol("f1", 1), GenSymbol("f2", 1)], one)
    g = [A.gen(f"g{i}") for i in (1, 2, 3)]
    e = [A.gen("e1"), A.gen("e2")]
    f = [A.gen("f1"), A.gen("f2")]
    k_word = lambda j: (j,) + (j + 1,) * (m - 1)       # g_j g_{j+1}^-1
    kinv_word = lambda j: (j,) * (m - 1) + (j + 1,)    # g_j^-1 g_{j+1}
    kinds = {0: Grouplike(m), 1: Grouplike(m), 2: Grouplike(m),
             3: SkewPrimitive(k_word(0), ()),
             4: SkewPrimitive(k_word(1), ()),
             5: SkewPrimitive((), kinv_word(0)),
             6: SkewPrimitive((), kinv_word(1))}
    relations = [gi ** m - A.one() for gi in g]
    relations += [g[j] * g[i] - g[i] * g[j] for i in range(3) for j in range(i + 1, 3)]
    for i in range(3):       # g_i e_j g_i^-1 = q^(delta_ij - delta_i,j+1) e_j
        for j in range(2):
            p = (1 if i == j else 0) - (1 if i == j + 1 else 0)
            relations.append(e[j] * g[i] - (g[i] * e[j]).scale(q ** (-p)))
            relations.append(f[j] * g[i] - (g[i] * f[j]).scale(q ** p))
    relations += [_serre(e[0], e[1], q), _serre(e[1], e[0], q),
                  _serre(f[0], f[1], q), _serre(f[1], f[0], q)]
    for i in range(2):
        for j in range(2):
            rel = f[j] * e[i] - e[i] * f[j]
            if i == j:
                kk = A.from_word(k_word(i))
                kkinv = A.from_word(kinv_word(i))
                rel = rel + (kk - kkinv).scale((q - q.inverse()).inverse())
            relations.append(rel)
    e12 = e[0] * e[1] - (e[1] * e[0]).scale(q.inverse())
    f12 = f[0] * f[1] - (f[1] * f[0]).scale(q.inverse())
    relations += [e[0] ** m, e[1] ** m, f[0] ** m, f[1] ** m, e12 ** m, f12 ** m]
    return HopfPresentation(f"u_q(gl3)[m={m}]", A, kinds, relations, m,
                            params={"m": m, "n": 3, "q_power": exp},
                            claimed_basis="g-part times PBW e-part times PBW f-part",
                            claimed_dim=m ** 9, validate=validate)


def _check_rank_le2_simply_laced(cartan: CartanData):
    if cartan.rank > 2:
        raise PresentationError("Borel constructors support rank <= 2")
    if any(cartan.a[i][j] < -1 for i in range(cartan.rank) for j in range(cartan.rank)):
        raise PresentationError("rank-2 Borel constructors are fixed for the simply-laced "
                                "q-commutator convention; B2/G2 not supported")


def borel(cartan: CartanData, m: int, exp: int = 1, validate: bool = True) -> HopfPresentation:
    """Nonnegative Borel part: grouplikes k_i of order m and (k_i,1)-skew
    primitives e_i with k_i e_j = q^(d_i a_ij) e_j k_i, quantum Serre
    relations in rank two, and nilpotent root vectors e_i^m (plus
    (e1 e2 - q^-1 e2 e1)^m in rank two)."""
    _check_rank_le2_simply_laced(cartan)
    if m < 3 or m % 2 == 0 or math.gcd(exp, m) != 1:
        raise PresentationError("borel(m) needs odd m >= 3 (root of unity of odd order)")
    r = cartan.rank
    one = CycNum.rational(1, m)
    q = CycNum.zeta(m, exp)
    A = FreeAlgebra([GenSymbol(f"k{i+1}", 0) for i in range(r)] +
                    [GenSymbol(f"e{i+1}", 1) for i in range(r)], one)
    k = [A.gen(f"k{i+1}") for i in range(r)]
    e = [A.gen(f"e{i+1}") for i in range(r)]
    kinds = {}
    for i in range(r):
        kinds[i] = Grouplike(m)
        kinds[r + i] = SkewPrimitive((i,), ())
    relations = [ki ** m - A.one() for ki in k]
    relations += [k[j] * k[i] - k[i] * k[j] for i in range(r) for j in range(i + 1, r)]
    for i in range(r):
        for j in range(r):
            p = cartan.d[i] * cartan.a[i][j]
            relations.append(e[j] * k[i] - (k[i] * e[j]).scale(q ** (-p)))
    if r == 2 and cartan.a[0][1] != 0:
        relations += [_serre(e[0], e[1], q), _serre(e[1], e[0], q)]
        e12 = e[0] * e[1] - (e[1] * e[0]).scale(q.inverse())
        relations += [e[0] ** m, e[1] ** m, e12 ** m]
        dim = m ** (r + 3)
    else:
        if r == 2:
            relations.append(e[1] * e[0] - e[0] * e[1])
        relations += [ei ** m for ei in e]
        dim = m ** (2 * r)
    return HopfPresentation(f"borel[{cartan.a}][m={m}]", A, kinds, relations, m,
                            params={"m": m, "cartan": cartan, "q_power": exp},
                            claimed_dim=dim, validate=validate)


def adjoint_borel(cartan: CartanData, m: int, exp: int = 1,
                  validate: bool = True) -> HopfPresentation:
    """Adjoint-type Borel: commuting grouplikes g_i of order m acting on the
    e_j by q^(delta_ij), with k_i = prod_j g_j^(d_i a_ij) carrying the skew
    primitive tags; Serre and nilpotency relations as in `borel`."""
    _check_rank_le2_simply_laced(cartan)
    if m < 3 or m % 2 == 0 or math.gcd(exp, m) != 1:
        raise PresentationError("adjoint_borel(m) needs odd m >= 3")
    r = cartan.rank
    one = CycNum.rational(1, m)
    q = CycNum.zeta(m, exp)
    A = FreeAlgebra([GenSymbol(f"g{i+1}", 0) for i in range(r)] +
                    [GenSymbol(f"e{i+1}", 1) for i in range(r)], one)
    g = [A.gen(f"g{i+1}") for i in range(r)]
    e = [A.gen(f"e{i+1}") for i in range(r)]

    def k_word(i: int) -> tuple:
        w = []
        for j in range(r):
            w.extend([j] * ((cartan.d[i] * cartan.a[i][j]) % m))
        return tuple(w)

    kinds = {}
    for i in range(r):
        kinds[i] = Grouplike(m)
        kinds[r + i] = SkewPrimitive(k_word(i), ())
    relations = [gi ** m - A.one() for gi in g]
    relations += [g[j] * g[i] - g[i] * g[j] for i in range(r) for j in range(i + 1, r)]
    for i in range(r):
        for j in range(r):
            p = 1 if i == j else 0
            relations.append(e[j] * g[i] - (g[i] * e[j]).scale(q ** (-p)))
    if r == 2 and cartan.a[0][1] != 0:
        relations += [_serre(e[0], e[1], q), _serre(e[1], e[0], q)]
        e12 = e[0] * e[1] - (e[1] * e[0]).scale(q.inverse())
        relations += [e[0] ** m, e[1] ** m, e12 ** m]
        dim = m ** (r + 3)
    else:
        if r == 2:
            relations.append(e[1] * e[0] - e[0] * e[1])
        relations += [ei ** m for ei in e]
        dim = m ** (2 * r)
    return HopfPresentation(f"adjoint-borel[{cartan.a}][m={m}]", A, kinds, relations, m,
                            params={"m": m, "cartan": cartan, "q_power": exp,
                                    "adjoint": True},
                            claimed_dim=dim, validate=validate)
