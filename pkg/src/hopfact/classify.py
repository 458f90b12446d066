"""Feasibility solver over the cyclic-extension ansatz L = F[u]/(u^n - v):
for a presentation with a single cyclic grouplike generator acting on u by
zeta^-1 and diagonally-commuting skew primitives, every defining relation is
evaluated on the u-powers; the resulting identities over k[v, r_k] either
pin down the action family (with the scaling freedom u -> w u used to
normalize one image to 1) or produce an obstruction certificate that can be
recomputed exactly.

Unknowns r_k range over F^x: a branch that forces some r_k = 0 kills that
skew primitive and is reported as failing inner faithfulness rather than as
algebraically inconsistent.  v is transcendental over the constants and, by
the cyclic-extension structure, never an n'-th power for n' > 1 dividing n;
a forced identity r_k^p = E(v) with E not a p-th power is therefore an
obstruction."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .fieldmodel import ExtActionSpec, ExtFieldModel
from .hopf import Grouplike, HopfPresentation, SkewPrimitive
from .ncalg import NCPoly
from .scalars import (CycNum, FunctionField, RatFunc, gauss_sum,
                      ratfunc_is_nth_power, zeta_log)


class AnsatzError(ValueError):
    pass


@dataclass
class AnsatzSkew:
    index: int
    name: str
    left_exp: int     # left tag g-power
    right_exp: int    # right tag g-power
    comm_exp: int     # c with g x = zeta^c x g in the grading root
    image_exp: int    # forced u-exponent of x.u, (1 - c) mod n
    unknown: str      # unknown name r_k


@dataclass
class DiagonalActionAnsatz:
    hopf: HopfPresentation
    n: int                      # grouplike order
    grading_power: int          # zeta = zeta_N^grading_power, N the scalar order
    skews: list

    @property
    def unknowns(self) -> list:
        return [s.unknown for s in self.skews]


@dataclass
class Feasible:
    ansatz: DiagonalActionAnsatz
    values: dict                # unknown -> RatFunc over Q(zeta_N)(v)
    free: list                  # unknowns未 not pinned by the relations
    normalized: Optional[str]   # unknown set to 1 by the scaling u -> w u
    trace: list

    def materialized_values(self) -> dict:
        """Concrete choices for the free unknowns: the normalized one is 1
        and the remaining free images take distinct v-powers, which keeps
        same-bucket operators independent over the constants."""
        out = dict(self.values)
        power = 1
        for name in self.free:
            if name in out:
                continue
            if name == self.normalized:
                out[name] = None  # already substituted as 1
                continue
            out[name] = power
            power += 1
        return out


@dataclass
class ObstructionCertificate:
    kind: str                   # forced-zero | power-pattern | inconsistent-constant
    identity: str
    relation_index: int
    witness_values: dict        # unknown -> RatFunc used for the recomputation
    trace: list
    _recheck: object = None

    def recheck(self) -> bool:
        """Substituting the witness back into the offending relation must
        reproduce a nonzero value where the relation demands zero."""
        return bool(self._recheck()) if self._recheck else False


@dataclass
class Infeasible:
    certificate: ObstructionCertificate


def build_ansatz(H: HopfPresentation) -> DiagonalActionAnsatz:
    group_idx = [i for i, k in H.kinds.items() if isinstance(k, Grouplike)]
    if len(group_idx) != 1:
        raise AnsatzError("ansatz needs exactly one cyclic grouplike generator")
    g = group_idx[0]
    n = H.kinds[g].order
    N = H.scalar_order
    gp = H.params.get("grading_power", 1)
    zeta = CycNum.zeta(N, gp)
    if zeta ** n != CycNum.rational(1) or any((zeta ** k).is_rational() and zeta ** k == CycNum.rational(1) for k in range(1, n)):
        raise AnsatzError("grading root must be a primitive n-th root of unity")
    skews = []
    for idx, (i, kind) in enumerate(sorted(H.kinds.items())):
        if not isinstance(kind, SkewPrimitive):
            continue
        for w in (kind.left, kind.right):
            if any(j != g for j in w):
                raise AnsatzError("skew primitive tags must be powers of the grouplike")
        # commutation exponent: normal form of x g is zeta^-c g x
        A = H.algebra
        nf = H.normal(A.from_word((i, g)))
        if len(nf.terms) != 1:
            raise AnsatzError("skew primitive does not q-commute with the grouplike")
        (w, c), = nf.terms.items()
        if w != (g, i):
            raise AnsatzError("skew primitive does not straighten past the grouplike")
        cinv_log = zeta_log(c, N)
        if cinv_log is None:
            raise AnsatzError("commutation scalar is not a root of unity")
        # c = zeta^(-comm): solve zeta^comm = c^-1 in the grading root
        comm = None
        cur = CycNum.rational(1, N)
        for k in range(n):
            if cur == c.inverse():
                comm = k
                break
            cur = cur * zeta
        if comm is None:
            raise AnsatzError("commutation scalar is not a power of the grading root")
        skews.append(AnsatzSkew(i, A.symbols[i].name, len(kind.left) % n,
                                len(kind.right) % n, comm, (1 - comm) % n,
                                f"r{len(skews)}"))
    if not skews:
        raise AnsatzError("no skew primitives to classify")
    return DiagonalActionAnsatz(H, n, gp, skews)


class _SymbolicModel:
    """L = F[u]/(u^n - v) with F = Q(zeta_N)(v, r0, r1, ...); elements are
    dicts u-exponent -> RatFunc."""

    def __init__(self, ansatz: DiagonalActionAnsatz):
        self.ansatz = ansatz
        H = ansatz.hopf
        self.n = ansatz.n
        names = ("v",) + tuple(s.unknown for s in ansatz.skews)
        self.F = FunctionField(H.scalar_order, names)
        self.v = self.F.var("v")
        self.zeta = CycNum.zeta(H.scalar_order, ansatz.grading_power)
        self.by_index = {s.index: s for s in ansatz.skews}
        self.g_index = next(i for i, k in H.kinds.items() if isinstance(k, Grouplike))

    def u_power(self, d: int) -> dict:
        q, r = divmod(d, self.n)
        return {r: self.v ** q}

    def apply_generator(self, i: int, elem: dict, values: Optional[dict] = None) -> dict:
        out: dict = {}
        if i == self.g_index:
            for d, c in elem.items():
                val = c * self.F.const(self.zeta ** (-d))
                if val:
                    out[d] = val
            return out
        s = self.by_index[i]
        r_val = self.F.var(s.unknown) if not values or s.unknown not in values else values[s.unknown]
        for d, c in elem.items():
            if d == 0:
                continue
            # x.(u^d) = sum_j (g^a.u)^j (x.u) (g^b.u)^(d-1-j)
            #         = r zeta^(-b(d-1)) gauss(d, zeta^(b-a)) u^(d-1+e)
            coeff = CycNum.rational(0, self.F.order)
            base = self.zeta ** (s.right_exp - s.left_exp)
            acc = CycNum.rational(1, self.F.order)
            for j in range(d):
                coeff = coeff + acc
                acc = acc * base
            coeff = coeff * self.zeta ** (-s.right_exp * (d - 1))
            val = c * r_val * self.F.const(coeff)
            if not val:
                continue
            target = d - 1 + s.image_exp
            q, rem = divmod(target, self.n)
            val = val * self.v ** q
            got = out.get(rem)
            got = val if got is None else got + val
            if got:
                out[rem] = got
            else:
                out.pop(rem, None)
        return out

    def apply(self, h: NCPoly, elem: dict, values: Optional[dict] = None) -> dict:
        out: dict = {}
        for w, c in h.terms.items():
            cur = dict(elem)
            for i in reversed(w):
                cur = self.apply_generator(i, cur, values)
            for d, cc in cur.items():
                val = cc * self.F.const(c)
                got = out.get(d)
                got = val if got is None else got + val
                if got:
                    out[d] = got
                else:
                    out.pop(d, None)
        return out


def classify_cyclic(H: HopfPresentation):
    """Feasible(action family) or Infeasible(certificate) for the cyclic
    diagonal ansatz; see the module docstring for the solved model."""
    ansatz = build_ansatz(H)
    model = _SymbolicModel(ansatz)
    F = model.F
    n = ansatz.n
    trace = [f"ansatz: g.u = zeta^-1 u on L = F[u]/(u^{n} - v), "
             + "; ".join(f"{s.name}.u = {s.unknown} u^{s.image_exp}" for s in ansatz.skews)]
    values: dict = {}
    normalized = None
    for s in ansatz.skews:
        if s.image_exp == 0:
            normalized = s.unknown
            values[s.unknown] = F.one()
            trace.append(f"scaling u -> w^-1 u normalizes {s.name}.u = 1 ({s.unknown} = 1)")
            break

    def substitute(f: RatFunc) -> RatFunc:
        out_num = _subst_poly(f.num, values, F)
        out_den = _subst_poly(f.den, values, F)
        return out_num / out_den

    for ridx, rel in enumerate(H.relations):
        for d in range(n):
            expr = model.apply(rel, model.u_power(d))
            eps = H.counit(rel)
            if eps:
                base = model.u_power(d)
                for dd, c in base.items():
                    got = expr.get(dd, F.zero()) - c * F.const(eps)
                    if got:
                        expr[dd] = got
                    else:
                        expr.pop(dd, None)
            for dd, coefficient in expr.items():
                eq = substitute(coefficient)
                if not eq:
                    continue
                # the numerator polynomial in (v, r0, r1, ...) must vanish;
                # the catalog relations produce at most two monomials
                monos = list(eq.num.items())
                if len(monos) == 1:
                    (exps, c), = monos
                    if not any(exps[1:]):
                        ident = (f"relation {ridx} on u^{d}: nonzero term "
                                 f"{eq!r} must vanish")
                        return _infeasible("inconsistent-constant", ident, ridx, d,
                                           model, H, values, trace)
                    names = [ansatz.unknowns[k - 1] for k, p in enumerate(exps) if k and p]
                    ident = (f"relation {ridx} on u^{d} forces "
                             f"{'*'.join(names)} = 0, killing a skew primitive")
                    trace.append(ident)
                    return _infeasible("forced-zero", ident, ridx, d, model, H,
                                       dict(values), trace,
                                       extra={nm: F.one() for nm in names})
                if len(monos) == 2:
                    (e1, c1), (e2, c2) = monos
                    diff = [a - b for a, b in zip(e1, e2)]
                    active = [k for k, p in enumerate(diff) if k and p]
                    if not active:
                        # c1 v^a = -c2 v^b with a != b and v transcendental
                        ident = (f"relation {ridx} on u^{d}: v-identity {eq!r} "
                                 f"has no solution with v transcendental")
                        return _infeasible("inconsistent-constant", ident, ridx, d,
                                           model, H, values, trace)
                    if len(active) > 1:
                        raise AnsatzError("coupled unknowns outside the solved ansatz")
                    k = active[0]
                    name = ansatz.unknowns[k - 1]
                    p = diff[k]
                    # c1 v^(a1) r^(e1) + c2 v^(a2) r^(e2) = 0
                    #   =>  r_k^p = (-c2/c1) v^(a2 - a1)
                    E = F.const(CycNum.rational(0) - c2) / F.const(c1)
                    shift = e2[0] - e1[0]
                    E = E * F.var("v") ** shift if shift >= 0 else E / F.var("v") ** (-shift)
                    if abs(p) == 1:
                        sol = E if p == 1 else F.one() / E
                        values[name] = sol
                        trace.append(f"relation {ridx} on u^{d} pins {name} = {sol!r}")
                        continue
                    pp = abs(p)
                    if ratfunc_is_nth_power(E, pp):
                        raise AnsatzError("solvable power constraint left unresolved "
                                          "(outside the catalog ansatz)")
                    ident = (f"relation {ridx} on u^{d} forces {name}^{p} = {E!r}, "
                             f"whose v-content is not a {pp}-th power: v would become "
                             f"a forbidden power in F")
                    trace.append(ident)
                    return _infeasible("power-pattern", ident, ridx, d, model, H,
                                       dict(values), trace, extra={name: F.one()})
                raise AnsatzError("more than two monomials; outside the solved ansatz")
    free = [u for u in ansatz.unknowns if u not in values or u == normalized]
    trace.append("all relations satisfied; remaining unknowns are free in F^x")
    return Feasible(ansatz, {k: v for k, v in values.items() if k != normalized},
                    free, normalized, trace)


def _subst_poly(poly: dict, values: dict, F: FunctionField) -> RatFunc:
    out = F.zero()
    for exps, c in poly.items():
        term = F.const(c)
        for k, p in enumerate(exps):
            if not p:
                continue
            name = F.vars[k]
            if name in values:
                term = term * values[name] ** p
            else:
                term = term * F.var(name) ** p
        out = out + term
    return out


def _infeasible(kind, ident, ridx, d, model, H, values, trace, extra=None):
    witness = dict(values)
    if extra:
        witness.update(extra)
    for s in model.ansatz.skews:
        witness.setdefault(s.unknown, model.F.one())

    def recheck():
        expr = model.apply(H.relations[ridx], model.u_power(d), witness)
        eps = H.counit(H.relations[ridx])
        if eps:
            for dd, c in model.u_power(d).items():
                got = expr.get(dd, model.F.zero()) - c * model.F.const(eps)
                if got:
                    expr[dd] = got
                else:
                    expr.pop(dd, None)
        return any(bool(c) for c in expr.values())

    cert = ObstructionCertificate(kind, ident, ridx, witness, trace, recheck)
    return Infeasible(cert)


def materialize(feasible: Feasible) -> ExtActionSpec:
    """Turn a feasible family into a concrete action on F[u]/(u^n - v) with
    the free images set to distinct v-powers."""
    H = feasible.ansatz.hopf
    n = feasible.ansatz.n
    model = ExtFieldModel(H.scalar_order, ("u",), (n,))
    F = model.field
    zeta = CycNum.zeta(H.scalar_order, feasible.ansatz.grading_power)
    choices = {}
    power = 1
    for s in feasible.ansatz.skews:
        name = s.unknown
        if name == feasible.normalized:
            choices[name] = F.one()
        elif name in feasible.values:
            val = feasible.values[name]
            choices[name] = _transport(val, F)
        else:
            choices[name] = F.var("v") ** power
            power += 1
    mats = {}
    g_index = next(i for i, k in H.kinds.items() if isinstance(k, Grouplike))
    mats[g_index] = {(d,): {(d,): F.const(zeta ** (-d))} for d in range(n)}
    for s in feasible.ansatz.skews:
        M = {}
        for d in range(n):
            if d == 0:
                M[(d,)] = {}
                continue
            coeff = CycNum.rational(0, H.scalar_order)
            base = zeta ** (s.right_exp - s.left_exp)
            acc = CycNum.rational(1, H.scalar_order)
            for j in range(d):
                coeff = coeff + acc
                acc = acc * base
            coeff = coeff * zeta ** (-s.right_exp * (d - 1))
            target = d - 1 + s.image_exp
            q, rem = divmod(target, n)
            val = choices[s.unknown] * F.const(coeff) * F.var("v") ** q
            M[(d,)] = {(rem,): val} if val else {}
        mats[s.index] = M
    return ExtActionSpec(H, model, mats)


def _transport(val: RatFunc, F: FunctionField) -> RatFunc:
    """Re-express a value from the solver field (v, r0, ...) in F = k(v);
    only v may occur."""
    def conv(poly):
        out = F.zero()
        for exps, c in poly.items():
            if any(exps[1:]):
                raise AnsatzError("value depends on an unsolved unknown")
            out = out + F.const(c) * F.var("v") ** exps[0]
        return out
    return conv(val.num) / conv(val.den)


def book_feasibility(n: int, p: int):
    """Specialize the solver to the two-skew-primitive book family; for
    p != 1 the certificate is the nonvanishing of the one-sided sum
    1 + zeta^-1 + ... + zeta^-(n-p)."""
    from .catalog import book
    H = book(n, p)
    res = classify_cyclic(H)
    if isinstance(res, Infeasible):
        z = CycNum.zeta(n)
        s = gauss_sum(n + 1 - p, z.inverse())
        res.certificate.trace.append(
            f"gauss_sum({n + 1 - p}, zeta_{n}^-1) = {s!r} is nonzero, so the "
            f"commutator forces the second skew primitive image to vanish")
    return res


def binomial_irreducible(n: int, v: RatFunc) -> bool:
    """t^n - v is irreducible over F iff v is not an n'-th power for any
    n' > 1 dividing n."""
    if n < 1:
        raise ValueError("n must be positive")
    for np in range(2, n + 1):
        if n % np == 0 and ratfunc_is_nth_power(v, np):
            return False
    return True
