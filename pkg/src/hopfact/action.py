"""Hopf algebra actions on q-commuting polynomial algebras and on finite
field-extension models.

Grouplike generators act by algebra automorphisms, skew primitives by skew
derivations extended through x.(ab) = (g.a)(x.b) + (x.a)(g'.b) with the
(g, g') tags taken from the presentation, so the extension always matches the
coproduct.  Verification never trusts a formula: every relation operator is
applied to every monomial of the capped slice.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .hopf import Grouplike, HopfPresentation, SkewPrimitive, CartanData
from .ncalg import NCPoly, Word
from .scalars import CycNum, FunctionField, RatFunc, gauss_sum


class ActionError(ValueError):
    pass


class QPolyRing:
    """k<z_1..z_k> / (z_i z_j - c_ij z_j z_i), optionally Laurent in marked
    variables; elements are dicts exponent-tuple -> scalar."""

    def __init__(self, variables: Sequence[str], commutation, laurent=None, order: int = 1):
        self.vars = tuple(variables)
        self.order = order
        n = len(self.vars)
        self.gamma = [[CycNum.rational(1, order) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i != j and commutation is not None:
                    self.gamma[i][j] = commutation[i][j]
        for i in range(n):
            for j in range(i + 1, n):
                if self.gamma[i][j] * self.gamma[j][i] != CycNum.rational(1):
                    raise ActionError("commutation matrix must satisfy c_ij c_ji = 1")
        self.laurent = tuple(bool(b) for b in (laurent or [False] * n))
        self.one_scalar = CycNum.rational(1, order)
        self._gamma_pow: dict = {}

    @staticmethod
    def commutative(variables, laurent=None, order: int = 1) -> "QPolyRing":
        return QPolyRing(variables, None, laurent, order)

    @staticmethod
    def quantum_plane(variables, q: CycNum, laurent=None) -> "QPolyRing":
        """z_i z_j = q z_j z_i for i < j."""
        n = len(variables)
        comm = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i < j:
                    comm[i][j] = q
                elif i > j:
                    comm[i][j] = q.inverse()
        return QPolyRing(variables, comm, laurent, q.order)

    # -- elements ------------------------------------------------------------

    def zero(self) -> dict:
        return {}

    def one(self) -> dict:
        return {(0,) * len(self.vars): self.one_scalar}

    def gen(self, name: str) -> dict:
        i = self.vars.index(name)
        e = tuple(1 if j == i else 0 for j in range(len(self.vars)))
        return {e: self.one_scalar}

    def monomial(self, exps: Sequence[int], coeff=None) -> dict:
        exps = tuple(exps)
        self._check_exps(exps)
        c = self.one_scalar if coeff is None else (self.one_scalar * coeff if isinstance(coeff, int) else coeff)
        return {exps: c} if c else {}

    def _check_exps(self, exps):
        for e, fl in zip(exps, self.laurent):
            if e < 0 and not fl:
                raise ActionError("negative power of a non-Laurent variable")

    def add(self, a: dict, b: dict) -> dict:
        out = dict(a)
        for e, c in b.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return out

    def scale(self, a: dict, c) -> dict:
        if isinstance(c, int):
            c = self.one_scalar * c
        if not c:
            return {}
        return {e: v * c for e, v in a.items()}

    def neg(self, a: dict) -> dict:
        return {e: -c for e, c in a.items()}

    def _gamma_power(self, i: int, j: int, k: int) -> CycNum:
        got = self._gamma_pow.get((i, j, k))
        if got is None:
            got = self.gamma[i][j] ** k
            self._gamma_pow[(i, j, k)] = got
        return got

    def mono_mul_factor(self, ea, eb) -> CycNum:
        f = self.one_scalar
        for i in range(len(self.vars)):
            if not ea[i]:
                continue
            for j in range(i):
                if eb[j]:
                    f = f * self._gamma_power(i, j, ea[i] * eb[j])
        return f

    def mul(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                c = ca * cb * self.mono_mul_factor(ea, eb)
                s = out.get(e)
                s = c if s is None else s + c
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return out

    def mono_inverse(self, a: dict) -> dict:
        """Inverse of a single-term element."""
        if len(a) != 1:
            raise ActionError("only monomials are invertible here")
        (e, c), = a.items()
        einv = tuple(-x for x in e)
        self._check_exps(einv)
        f = self.mono_mul_factor(e, einv)
        return {einv: (c * f).inverse()}

    def eq(self, a: dict, b: dict) -> bool:
        if a.keys() != b.keys():
            return False
        return all(not (c - b[e]) for e, c in a.items())

    def degree(self, e) -> int:
        return sum(abs(x) for x in e)

    def monomials_up_to(self, cap: int):
        """Exponent tuples of degree <= cap (Laurent variables range over
        negative exponents as well); the zero monomial is included."""
        ranges = [range(-cap, cap + 1) if fl else range(0, cap + 1) for fl in self.laurent]
        for exps in itertools.product(*ranges):
            if sum(abs(x) for x in exps) <= cap:
                yield exps

    def repr_elem(self, a: dict) -> str:
        if not a:
            return "0"
        parts = []
        for e in sorted(a, key=lambda t: (self.degree(t), t)):
            mono = "*".join(f"{v}^{k}" if k != 1 else v for v, k in zip(self.vars, e) if k)
            parts.append(f"({a[e]!r})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


@dataclass
class Automorphism:
    """Algebra endomorphism given by generator images (monomial images keep
    Laurent inverses available)."""
    images: list  # per variable, target elements


@dataclass
class SkewDerivation:
    """Generator images of a skew derivation; the (g, g') operators used in
    the Leibniz extension come from the presentation's tags."""
    images: list


def _diagonal_eigenvalues(target: "QPolyRing", op: "Automorphism"):
    """Eigenvalue list when every image is scalar * (its own variable)."""
    out = []
    for v, img in enumerate(op.images):
        if len(img) != 1:
            return None
        (e, c), = img.items()
        if e[v] != 1 or any(x for k, x in enumerate(e) if k != v):
            return None
        out.append(c)
    return out


class ActionSpec:
    """A Hopf presentation acting on a QPolyRing through generator operators."""

    def __init__(self, hopf: HopfPresentation, target: QPolyRing, ops: dict):
        self.hopf = hopf
        self.target = target
        self.ops = dict(ops)
        for i, kind in hopf.kinds.items():
            op = self.ops.get(i)
            if op is None:
                raise ActionError(f"no operator for generator {hopf.algebra.symbols[i].name}")
            if isinstance(kind, Grouplike) and not isinstance(op, Automorphism):
                raise ActionError("grouplike generators must act by automorphisms")
            if isinstance(kind, SkewPrimitive) and not isinstance(op, SkewDerivation):
                raise ActionError("skew primitives must act by skew derivations")
        self._letter_cache: dict = {}
        self._eig_pow: dict = {}
        self._diag: dict = {}
        for i, op in self.ops.items():
            if isinstance(op, Automorphism):
                self._diag[i] = _diagonal_eigenvalues(target, op)
        # per skew primitive: the tag words' diagonal characters, when all
        # grouplike letters act diagonally (cheap Leibniz path)
        self._tag_eigs: dict = {}
        for i, kind in hopf.kinds.items():
            if not isinstance(kind, SkewPrimitive):
                continue
            sides = []
            for word in (kind.left, kind.right):
                eigs = [self.target.one_scalar] * len(target.vars)
                ok = True
                for j in word:
                    d = self._diag.get(j)
                    if d is None:
                        ok = False
                        break
                    eigs = [a * b for a, b in zip(eigs, d)]
                sides.append(eigs if ok else None)
            self._tag_eigs[i] = tuple(sides)

    def _eig_power(self, i: int, v: int, k: int):
        got = self._eig_pow.get((i, v, k))
        if got is None:
            got = self._diag[i][v] ** k
            self._eig_pow[(i, v, k)] = got
        return got

    # -- single generator application -----------------------------------------

    def _auto_on_mono(self, i: int, exps, coeff) -> dict:
        diag = self._diag.get(i)
        if diag is not None:
            c = coeff
            for v, e in enumerate(exps):
                if e:
                    c = c * self._eig_power(i, v, e)
            return {exps: c}
        op = self.ops[i]
        out = {(0,) * len(self.target.vars): coeff}
        for v, e in enumerate(exps):
            if not e:
                continue
            img = op.images[v]
            if e < 0:
                img = self.target.mono_inverse(img)
                e = -e
            for _ in range(e):
                out = self.target.mul(out, img)
        return out

    def apply_generator(self, i: int, a: dict) -> dict:
        kind = self.hopf.kinds[i]
        out: dict = {}
        T = self.target
        if isinstance(kind, Grouplike):
            for exps, c in a.items():
                out = T.add(out, self._auto_on_mono(i, exps, c))
            return out
        # skew derivation via the Leibniz rule over the letters of each monomial
        for exps, c in a.items():
            out = T.add(out, T.scale(self._skew_on_mono(i, exps), c))
        return out

    def group_word_apply(self, w: Word, a: dict) -> dict:
        for i in reversed(w):
            a = self.apply_generator(i, a)
        return a

    def _letters(self, exps):
        letters = []
        for v, e in enumerate(exps):
            if e > 0:
                letters.extend([(v, 1)] * e)
            elif e < 0:
                letters.extend([(v, -1)] * (-e))
        return letters

    def _skew_letter_image(self, i: int, letter) -> dict:
        got = self._letter_cache.get((i, letter))
        if got is not None:
            return got
        v, sgn = letter
        kind = self.hopf.kinds[i]
        T = self.target
        if sgn > 0:
            res = self.ops[i].images[v]
        else:
            # 0 = x.(z z^-1) = (g.z)(x.z^-1) + (x.z)(g'.z^-1)
            z = T.gen(T.vars[v])
            zinv = T.mono_inverse(z)
            gz = self.group_word_apply(kind.left, z)
            gpzinv = self.group_word_apply(kind.right, zinv)
            res = T.neg(T.mul(T.mul(T.mono_inverse(gz), self.ops[i].images[v]), gpzinv))
        self._letter_cache[(i, letter)] = res
        return res

    def _skew_on_mono(self, i: int, exps) -> dict:
        kind = self.hopf.kinds[i]
        T = self.target
        letters = self._letters(exps)
        left_eigs, right_eigs = self._tag_eigs[i]
        if left_eigs is not None and right_eigs is not None:
            return self._skew_on_mono_diag(i, letters, left_eigs, right_eigs)
        out: dict = {}
        # prefix: g applied to letters[:k]; suffix: g' applied to letters[k+1:]
        prefix = T.one()
        suffixes = [T.one()]
        for letter in reversed(letters):
            v, sgn = letter
            z = T.gen(T.vars[v]) if sgn > 0 else T.mono_inverse(T.gen(T.vars[v]))
            suffixes.append(T.mul(self.group_word_apply(kind.right, z), suffixes[-1]))
        suffixes.reverse()
        for k, letter in enumerate(letters):
            mid = self._skew_letter_image(i, letter)
            term = T.mul(T.mul(prefix, mid), suffixes[k + 1])
            out = T.add(out, term)
            v, sgn = letter
            z = T.gen(T.vars[v]) if sgn > 0 else T.mono_inverse(T.gen(T.vars[v]))
            prefix = T.mul(prefix, self.group_word_apply(kind.left, z))
        return out

    def _skew_on_mono_diag(self, i: int, letters, left_eigs, right_eigs) -> dict:
        """Leibniz sum when both tag words act diagonally: each letter with a
        nonzero image contributes prefix-char * (z-prefix) * image * (z-suffix)
        * suffix-char, everything else is a cached scalar."""
        T = self.target
        nv = len(T.vars)
        out: dict = {}
        # cumulative right characters from each position to the end
        suf_scalar = [T.one_scalar]
        for v, sgn in reversed(letters):
            c = right_eigs[v] if sgn > 0 else right_eigs[v].inverse()
            suf_scalar.append(suf_scalar[-1] * c)
        suf_scalar.reverse()
        pre_scalar = T.one_scalar
        pre_exps = [0] * nv
        for k, (v, sgn) in enumerate(letters):
            mid = self._skew_letter_image(i, (v, sgn))
            if mid:
                suffix = [0] * nv
                for (v2, s2) in letters[k + 1:]:
                    suffix[v2] += s2
                pre = {tuple(pre_exps): pre_scalar}
                suf = {tuple(suffix): suf_scalar[k + 1]}
                term = T.mul(T.mul(pre, mid), suf)
                out = T.add(out, term)
            pre_scalar = pre_scalar * (left_eigs[v] if sgn > 0 else left_eigs[v].inverse())
            pre_exps[v] += sgn
        return out

    # -- words and polynomials -------------------------------------------------

    def apply(self, h: NCPoly, a: dict) -> dict:
        """Words act by composing generator operators left to right."""
        T = self.target
        out: dict = {}
        for w, c in h.terms.items():
            cur = a
            for i in reversed(w):
                cur = self.apply_generator(i, cur)
            out = T.add(out, T.scale(cur, c))
        return out


# -- catalog verification suites ----------------------------------------------


@dataclass
class Check:
    check_id: str
    status: str                  # pass | fail | inconclusive
    witness: Optional[str] = None


@dataclass
class Report:
    name: str
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def failures(self):
        return [c for c in self.checks if c.status != "pass"]


def verify_hopf_relations(action: ActionSpec, degree_cap: int = 6) -> Report:
    """Each defining relation must annihilate every generator and every
    monomial of the capped slice."""
    H, T = action.hopf, action.target
    checks = []
    monos = list(T.monomials_up_to(degree_cap))
    for ridx, rel in enumerate(H.relations):
        counit = H.counit(rel)
        bad = None
        for exps in monos:
            a = T.monomial(exps)
            got = action.apply(rel, a)
            if counit:
                got = T.add(got, T.scale(a, -counit))
            if got:
                bad = f"relation {rel!r} on {T.repr_elem(a)} -> {T.repr_elem(got)}"
                break
        checks.append(Check(f"hopf-relation-{ridx}", "fail" if bad else "pass", bad))
    return Report(f"hopf-relations[{H.name}]", checks)


def verify_target_relations(action: ActionSpec) -> Report:
    """Well-definedness on the target relations: for every generator h and
    every variable pair, applying h to z_i z_j through the two bracketings
    related by z_i z_j = c_ij z_j z_i agrees."""
    H, T = action.hopf, action.target
    checks = []
    n = len(T.vars)
    for i in H.kinds:
        name = H.algebra.symbols[i].name
        bad = None
        for a in range(n):
            for b in range(n):
                if a == b:
                    continue
                za, zb = T.gen(T.vars[a]), T.gen(T.vars[b])
                lhs = _leibniz_pair(action, i, za, zb)
                rhs = T.scale(_leibniz_pair(action, i, zb, za), T.gamma[a][b])
                if not T.eq(lhs, rhs):
                    bad = f"{name} on {T.vars[a]}*{T.vars[b]} - c*{T.vars[b]}*{T.vars[a]}"
                    break
            if bad:
                break
        checks.append(Check(f"target-relations-{name}", "fail" if bad else "pass", bad))
    return Report(f"target-relations[{H.name}]", checks)


def _leibniz_pair(action: ActionSpec, i: int, a: dict, b: dict) -> dict:
    """h.(ab) computed through the coproduct-dictated rule for generator h."""
    H, T = action.hopf, action.target
    kind = H.kinds[i]
    if isinstance(kind, Grouplike):
        return T.mul(action.apply_generator(i, a), action.apply_generator(i, b))
    ga = action.group_word_apply(kind.left, a)
    gpb = action.group_word_apply(kind.right, b)
    return T.add(T.mul(ga, action.apply_generator(i, b)),
                 T.mul(action.apply_generator(i, a), gpb))


def verify_module_algebra(action: ActionSpec, degree_cap: int = 6) -> Report:
    """h.(ab) = sum (h1.a)(h2.b) for every generator h and all monomial pairs
    with total degree <= cap."""
    H, T = action.hopf, action.target
    checks = []
    monos = [list(T.monomials_up_to(degree_cap - d)) for d in range(degree_cap + 1)]
    for i in H.kinds:
        name = H.algebra.symbols[i].name
        bad = None
        for ea in T.monomials_up_to(degree_cap):
            da = T.degree(ea)
            for eb in T.monomials_up_to(degree_cap - da):
                a, b = T.monomial(ea), T.monomial(eb)
                lhs = action.apply_generator(i, T.mul(a, b))
                rhs = _leibniz_pair(action, i, a, b)
                if not T.eq(lhs, rhs):
                    bad = f"{name} on ({T.repr_elem(a)}, {T.repr_elem(b)})"
                    break
            if bad:
                break
        checks.append(Check(f"module-algebra-{name}", "fail" if bad else "pass", bad))
    return Report(f"module-algebra[{H.name}]", checks)


def verify_all(action: ActionSpec, degree_cap: int = 6) -> Report:
    checks = []
    for rep in (verify_hopf_relations(action, degree_cap),
                verify_target_relations(action),
                verify_module_algebra(action, degree_cap)):
        checks.extend(rep.checks)
    return Report(f"action[{action.hopf.name}]", checks)


# -- inner faithfulness ---------------------------------------------------------


def _diagonal_character(action: ActionSpec, i: int):
    """Eigenvalue list of a grouplike generator acting diagonally, or None."""
    return _diagonal_eigenvalues(action.target, action.ops[i])


def _rank(vectors, zero_scalar) -> int:
    rows = []
    for vec in vectors:
        v = dict(vec)
        for lead, row in rows:
            c = v.get(lead)
            if c:
                for k, rc in row.items():
                    s = v.get(k)
                    s = -(rc * c) if s is None else s - rc * c
                    if s:
                        v[k] = s
                    else:
                        v.pop(k, None)
        if v:
            lead = next(iter(v))
            c = v[lead]
            rows.append((lead, {k: val / c for k, val in v.items()}))
    return len(rows)


def inner_faithful_pointed(action: ActionSpec, degree_cap: int = 4) -> bool:
    """Pointedness criterion for presentations generated by grouplikes and
    skew primitives: (i) the grouplike group acts with trivial kernel
    (distinct generator-eigenvalue tuples), and (ii) within each (g, g')
    tag bucket the listed skew primitives, together with the trivial skew
    primitive g - g', act by linearly independent nonzero operators on the
    degree-capped slice."""
    H, T = action.hopf, action.target
    if not H.kinds or any(not isinstance(k, (Grouplike, SkewPrimitive)) for k in H.kinds.values()):
        raise ActionError("inner-faithfulness criterion needs a pointed presentation")
    group_idx = [i for i, k in H.kinds.items() if isinstance(k, Grouplike)]
    chars = {}
    for i in group_idx:
        c = _diagonal_character(action, i)
        if c is None:
            raise ActionError("grouplike generators must act diagonally for this criterion")
        chars[i] = c
    seen = set()
    for elem in H.group_elements():
        key = []
        for v in range(len(T.vars)):
            val = T.one_scalar
            for i, e in zip(group_idx, elem):
                val = val * chars[i][v] ** e
            key.append(val.key())
        key = tuple(key)
        if key in seen:
            return False
        seen.add(key)

    monos = list(T.monomials_up_to(degree_cap))
    buckets: dict = {}
    for i, k in H.kinds.items():
        if isinstance(k, SkewPrimitive):
            left = H.group_word_exponents(k.left)
            right = H.group_word_exponents(k.right)
            buckets.setdefault((left, right), []).append(i)
    for (left, right), idxs in buckets.items():
        vectors = []
        for i in idxs:
            vec = {}
            op_zero = True
            for exps in monos:
                img = action.apply_generator(i, T.monomial(exps))
                for e2, c in img.items():
                    vec[(exps, e2)] = c
            if not vec:
                return False
            vectors.append(vec)
        if left != right:
            # trivial skew primitive g - g' in the same bucket
            lw = H.group_word(left)
            rw = H.group_word(right)
            vec = {}
            for exps in monos:
                img = T.add(action.group_word_apply(lw, T.monomial(exps)),
                            T.neg(action.group_word_apply(rw, T.monomial(exps))))
                for e2, c in img.items():
                    vec[(exps, e2)] = c
            if vec:
                vectors.append(vec)
        if _rank(vectors, T.one_scalar * 0) != len(vectors):
            return False
    return True


# -- catalog actions -------------------------------------------------------------


def taft_action(H: HopfPresentation) -> ActionSpec:
    """T(n) on k[z]: g.z = zeta^-1 z, x.z = 1."""
    n = H.params["n"]
    T = QPolyRing.commutative(("z",), order=H.scalar_order)
    z = CycNum.zeta(n)
    ops = {0: Automorphism([T.monomial((1,), z.inverse())]),
           1: SkewDerivation([T.one()])}
    return ActionSpec(H, T, ops)


def nichols_action(H: HopfPresentation) -> ActionSpec:
    """E(n) on k[z]: g.z = -z, x_i.z = z^(2(i-1))."""
    n = H.params["n"]
    T = QPolyRing.commutative(("z",), order=H.scalar_order)
    ops = {0: Automorphism([T.monomial((1,), -1)])}
    for i in range(1, n + 1):
        ops[i] = SkewDerivation([T.monomial((2 * (i - 1),))])
    return ActionSpec(H, T, ops)


def book_action(H: HopfPresentation) -> ActionSpec:
    """h(zeta,1) on k[z]: g.z = zeta^-1 z, x1.z = x2.z = 1; only p = 1 has
    such an action."""
    if H.params["p"] != 1:
        raise ActionError("book algebras act on k[z] only for p = 1")
    n = H.params["n"]
    z = CycNum.zeta(n)
    T = QPolyRing.commutative(("z",), order=H.scalar_order)
    ops = {0: Automorphism([T.monomial((1,), z.inverse())]),
           1: SkewDerivation([T.one()]),
           2: SkewDerivation([T.one()])}
    return ActionSpec(H, T, ops)


def h81_action(H: HopfPresentation) -> ActionSpec:
    """g.z = w^-1 z, x.z = 1, y.z = z^3."""
    w = CycNum.zeta(3)
    T = QPolyRing.commutative(("z",), order=3)
    ops = {0: Automorphism([T.monomial((1,), w.inverse())]),
           1: SkewDerivation([T.one()]),
           2: SkewDerivation([T.monomial((3,))])}
    return ActionSpec(H, T, ops)


def uq_sl2_action(H: HopfPresentation) -> ActionSpec:
    """e.z = 1, f.z = -q z^2, k.z = q^-2 z (lambda normalized to 1)."""
    m = H.params["m"]
    q = CycNum.zeta(H.scalar_order, H.params["q_power"])
    lam = H.params["lambda"]
    T = QPolyRing.commutative(("z",), order=H.scalar_order)
    ops = {0: Automorphism([T.monomial((1,), q.inverse() ** 2)]),
           1: SkewDerivation([T.one()]),
           2: SkewDerivation([T.monomial((2,), -(lam * q))])}
    return ActionSpec(H, T, ops)


def uq_gl2_action(H: HopfPresentation) -> ActionSpec:
    """Inner faithful action on k[z, w]: the sl2-type formulas on z together
    with a second variable w on which both group generators act by q and the
    skew primitives act by zero, so the central grouplike g1 g2 is detected."""
    q = CycNum.zeta(H.scalar_order, H.params["q_power"])
    T = QPolyRing.commutative(("z", "w"), order=H.scalar_order)
    zero = T.zero()
    ops = {0: Automorphism([T.monomial((1, 0), q.inverse()), T.monomial((0, 1), q)]),
           1: Automorphism([T.monomial((1, 0), q), T.monomial((0, 1), q)]),
           2: SkewDerivation([T.one(), zero]),
           3: SkewDerivation([T.monomial((2, 0), -q), zero])}
    return ActionSpec(H, T, ops)


def uq_prime_gl2_action(H: HopfPresentation) -> ActionSpec:
    """On k[z1^(+-1), z2]: c1.z1 = q z1, c2.z2 = q z2,
    x1.z1 = (1-q) z1^2 z2, x2.z2 = 1/z1."""
    q = CycNum.zeta(H.scalar_order, H.params["q_power"])
    T = QPolyRing.commutative(("z1", "z2"), laurent=(True, False), order=H.scalar_order)
    one = CycNum.rational(1, H.scalar_order)
    zero = T.zero()
    ops = {0: Automorphism([T.monomial((1, 0), q), T.monomial((0, 1))]),
           1: Automorphism([T.monomial((1, 0)), T.monomial((0, 1), q)]),
           2: SkewDerivation([T.monomial((2, 1), one - q), zero]),
           3: SkewDerivation([zero, T.monomial((-1, 0))])}
    return ActionSpec(H, T, ops)


def hu_action(H: HopfPresentation) -> ActionSpec:
    """Quantum gl_n on the quantum polynomial algebra A_q:
    e_i.z_{i+1} = z_i, f_i.z_i = z_{i+1}, g_i.z_j = q^(delta_ij) z_j."""
    n = H.params.get("n", 2)
    q = CycNum.zeta(H.scalar_order, H.params["q_power"])
    T = QPolyRing.quantum_plane(tuple(f"z{i+1}" for i in range(n)), q)
    zero = T.zero()

    def unit(v, coeff=None):
        return T.monomial(tuple(1 if k == v else 0 for k in range(n)), coeff)

    ops = {}
    for i in range(n):
        ops[i] = Automorphism([unit(j, q if i == j else None) for j in range(n)])
    for j in range(n - 1):
        e_images = [zero] * n
        e_images[j + 1] = unit(j)
        f_images = [zero] * n
        f_images[j] = unit(j + 1)
        ops[n + j] = SkewDerivation(e_images)
        ops[n + (n - 1) + j] = SkewDerivation(f_images)
    return ActionSpec(H, T, ops)


def adjoint_action(H: HopfPresentation) -> ActionSpec:
    """Borel part acting on the oriented quantum polynomial algebra: the
    grouplikes act by their root characters and e_i.z_j = z_i z_j -
    q^(d_i a_ij) z_j z_i computed in the target."""
    cartan: CartanData = H.params["cartan"]
    m = H.params["m"]
    q = CycNum.zeta(H.scalar_order, H.params["q_power"])
    r = cartan.rank
    comm = [[None] * r for _ in range(r)]
    for i in range(r):
        for j in range(r):
            if i != j:
                sign = cartan.edge_sign(i, j)
                comm[i][j] = q ** (sign * cartan.d[i] * cartan.a[i][j]) if sign else CycNum.rational(1, H.scalar_order)
    T = QPolyRing(tuple(f"z{i+1}" for i in range(r)), comm, order=H.scalar_order)

    def unit(v, coeff=None):
        return T.monomial(tuple(1 if k == v else 0 for k in range(r)), coeff)

    adjoint = H.params.get("adjoint", False)
    ops = {}
    for i in range(r):
        if adjoint:
            images = [unit(j, q if i == j else None) for j in range(r)]
        else:
            images = [unit(j, q ** (cartan.d[i] * cartan.a[i][j])) for j in range(r)]
        ops[i] = Automorphism(images)
    for i in range(r):
        images = []
        for j in range(r):
            zi, zj = unit(i), unit(j)
            images.append(T.add(T.mul(zi, zj),
                                T.scale(T.mul(zj, zi), -(q ** (cartan.d[i] * cartan.a[i][j])))))
        ops[r + i] = SkewDerivation(images)
    return ActionSpec(H, T, ops)


def tensor_action(a1: ActionSpec, a2: ActionSpec) -> ActionSpec:
    """H1 (x) H2 acting leg-wise on the joined target (the two variable sets
    commute with each other)."""
    from .hopf import tensor_product
    H = tensor_product(a1.hopf, a2.hopf)
    T1, T2 = a1.target, a2.target
    n1, n2 = len(T1.vars), len(T2.vars)
    order = H.scalar_order
    names = []
    used = set()
    for v in T1.vars + T2.vars:
        while v in used:
            v = v + "'"
        used.add(v)
        names.append(v)
    comm = [[None] * (n1 + n2) for _ in range(n1 + n2)]
    one = CycNum.rational(1, order)
    for i in range(n1 + n2):
        for j in range(n1 + n2):
            if i == j:
                continue
            if i < n1 and j < n1:
                comm[i][j] = T1.gamma[i][j].lift(order) if T1.gamma[i][j].order != order else T1.gamma[i][j]
            elif i >= n1 and j >= n1:
                g = T2.gamma[i - n1][j - n1]
                comm[i][j] = g.lift(order) if g.order != order else g
            else:
                comm[i][j] = one
    T = QPolyRing(names, comm, laurent=T1.laurent + T2.laurent, order=order)

    def embed(elem: dict, side: int) -> dict:
        out = {}
        for e, c in elem.items():
            e2 = tuple(e) + (0,) * n2 if side == 0 else (0,) * n1 + tuple(e)
            out[e2] = c.lift(order) if c.order != order else c
        return out

    def ident_images(side):
        if side == 0:
            return [T.gen(names[n1 + k]) for k in range(n2)]
        return [T.gen(names[k]) for k in range(n1)]

    ops = {}
    for i, op in a1.ops.items():
        imgs = [embed(img, 0) for img in op.images]
        if isinstance(op, Automorphism):
            ops[i] = Automorphism(imgs + ident_images(0))
        else:
            ops[i] = SkewDerivation(imgs + [T.zero()] * n2)
    off = len(a1.hopf.algebra.symbols)
    for i, op in a2.ops.items():
        imgs = [embed(img, 1) for img in op.images]
        if isinstance(op, Automorphism):
            ops[i + off] = Automorphism(ident_images(1) + imgs)
        else:
            ops[i + off] = SkewDerivation([T.zero()] * n1 + imgs)
    return ActionSpec(H, T, ops)
