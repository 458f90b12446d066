"""Finite field-extension models L = F[u_1..u_k]/(u_i^n_i - v_i) over
rational function fields F = Q(zeta)(v_1..v_k), actions on them as matrices
over F, invariant subspaces, and fixed subfields of central grouplikes.

A polynomial action localizes to such a model when each declared invariant
denominator is a pure power z_i^{n_i} of a distinct variable: the v_i track
those powers and z_i^e maps to v_i^(e div n_i) u_i^(e mod n_i)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .action import ActionSpec, ActionError, Automorphism, Check, Report, SkewDerivation
from .hopf import Grouplike, HopfPresentation, SkewPrimitive, central_quotient
from .ncalg import NCPoly, Word
from .scalars import CycNum, FunctionField, RatFunc


class ExtFieldModel:
    """F-algebra with basis u^e, e_i < n_i, and u_i^{n_i} = v_i."""

    def __init__(self, order: int, u_names: Sequence[str], u_orders: Sequence[int],
                 v_names: Optional[Sequence[str]] = None,
                 basis: Optional[list] = None):
        self.order = order
        self.u_names = tuple(u_names)
        self.u_orders = tuple(u_orders)
        if v_names is None:
            v_names = ("v",) if len(u_names) == 1 else tuple(f"v{i+1}" for i in range(len(u_names)))
        self.field = FunctionField(order, v_names)
        full = [t for t in itertools.product(*(range(n) for n in self.u_orders))]
        self.basis = list(basis) if basis is not None else full
        self._pos = {e: k for k, e in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def zero(self) -> dict:
        return {}

    def one(self) -> dict:
        return {(0,) * len(self.u_names): self.field.one()}

    def from_basis(self, e, coeff=None) -> dict:
        if e not in self._pos:
            raise ActionError("not a basis exponent")
        return {tuple(e): coeff if coeff is not None else self.field.one()}

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
            c = self.field.const(c)
        if not c:
            return {}
        return {e: x * c for e, x in a.items()}

    def mul(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                carry = self.field.one()
                e = []
                for i, (x, y) in enumerate(zip(ea, eb)):
                    s = x + y
                    e.append(s % self.u_orders[i])
                    if s >= self.u_orders[i]:
                        carry = carry * self.field.var(self.field.vars[i])
                e = tuple(e)
                c = ca * cb * carry
                sacc = out.get(e)
                sacc = c if sacc is None else sacc + c
                if sacc:
                    out[e] = sacc
                else:
                    out.pop(e, None)
        return out

    def eq(self, a: dict, b: dict) -> bool:
        if a.keys() != b.keys():
            return False
        return all(not (c - b[e]) for e, c in a.items())

    def repr_elem(self, a: dict) -> str:
        if not a:
            return "0"
        parts = []
        for e in sorted(a):
            mono = "*".join(f"{n}^{k}" if k > 1 else n for n, k in zip(self.u_names, e) if k)
            parts.append(f"({a[e]!r})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


class ExtActionSpec:
    """Generator operators as F-linear maps on an ExtFieldModel basis."""

    def __init__(self, hopf: HopfPresentation, model: ExtFieldModel, mats: dict):
        self.hopf = hopf
        self.model = model
        self.mats = dict(mats)  # generator index -> {basis exponent -> element}

    def apply_generator(self, i: int, a: dict) -> dict:
        M = self.mats[i]
        out: dict = {}
        for e, c in a.items():
            img = M[e]
            for e2, c2 in img.items():
                v = c * c2
                s = out.get(e2)
                s = v if s is None else s + v
                if s:
                    out[e2] = s
                else:
                    out.pop(e2, None)
        return out

    def apply(self, h: NCPoly, a: dict) -> dict:
        out: dict = {}
        for w, c in h.terms.items():
            cur = a
            for i in reversed(w):
                cur = self.apply_generator(i, cur)
            out = self.model.add(out, self.model.scale(cur, c_to_rat(self.model.field, c)))
        return out

    def group_word_apply(self, w: Word, a: dict) -> dict:
        for i in reversed(w):
            a = self.apply_generator(i, a)
        return a


def c_to_rat(field: FunctionField, c) -> RatFunc:
    if isinstance(c, RatFunc):
        return c
    return field.const(c)


def localize_action(action: ActionSpec, denominators: Sequence[dict]) -> ExtActionSpec:
    """Extend a polynomial action to the finite extension model determined by
    the declared invariant denominators, which must be pure powers z_i^{n_i}
    covering each variable once.  Non-invariant denominators are rejected."""
    H, T = action.hopf, action.target
    powers: dict = {}
    for d in denominators:
        if len(d) != 1:
            raise ActionError("denominators must be monomials")
        (exps, c), = d.items()
        active = [i for i, e in enumerate(exps) if e]
        if len(active) != 1 or exps[active[0]] <= 0:
            raise ActionError("denominators must be positive pure powers of single variables")
        i = active[0]
        if i in powers:
            raise ActionError(f"variable {T.vars[i]} declared twice")
        powers[i] = exps[active[0]]
        for gi, kind in H.kinds.items():
            img = action.apply_generator(gi, d)
            expected = d if isinstance(kind, Grouplike) else {}
            if not T.eq(img, expected):
                raise ActionError(
                    f"denominator {T.repr_elem(d)} is not invariant under "
                    f"{H.algebra.symbols[gi].name}")
    if sorted(powers) != list(range(len(T.vars))):
        raise ActionError("denominators must cover every variable")
    # commutativity of the underlying target is required for a field model
    one = CycNum.rational(1, T.order)
    for i in range(len(T.vars)):
        for j in range(len(T.vars)):
            if i != j and T.gamma[i][j] != one:
                raise ActionError("field models need a commutative polynomial target")

    orders = [powers[i] for i in range(len(T.vars))]
    model = ExtFieldModel(H.scalar_order, T.vars, orders)
    F = model.field

    def to_model(poly: dict) -> dict:
        out: dict = {}
        for exps, c in poly.items():
            carry = F.const(c)
            e = []
            for i, x in enumerate(exps):
                e.append(x % orders[i])
                q = x // orders[i]
                if q:
                    carry = carry * F.var(F.vars[i]) ** q
            e = tuple(e)
            s = out.get(e)
            s = carry if s is None else s + carry
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return out

    mats = {}
    for gi in H.kinds:
        M = {}
        for e in model.basis:
            M[e] = to_model(action.apply_generator(gi, T.monomial(e)))
        mats[gi] = M
    return ExtActionSpec(H, model, mats)


# -- fraction-free kernels -------------------------------------------------------


def kernel_basis(rows: list, ncols: int, field: FunctionField) -> list:
    """Nullspace basis of a matrix over F; rows are dense lists of RatFunc.
    Denominators are cleared per row, then Bareiss fraction-free elimination
    keeps every intermediate entry polynomial."""
    m = []
    for row in rows:
        den = field.one()
        for x in row:
            if x:
                den = den * RatFunc(x.order, x.vars, dict(x.den),
                                    {(0,) * len(x.vars): CycNum.rational(1, x.order)},
                                    normalize=False)
        m.append([x * den for x in row])
    nrows = len(m)
    piv_cols = []
    prev = field.one()
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            for j in range(ncols):
                if j == c:
                    continue
                num = m[r][c] * m[i][j] - m[i][c] * m[r][j]
                m[i][j] = num / prev
            m[i][c] = field.zero()
        prev = m[r][c]
        piv_cols.append(c)
        r += 1
    free_cols = [c for c in range(ncols) if c not in piv_cols]
    basis = []
    for fc in free_cols:
        sol = [field.zero()] * ncols
        sol[fc] = field.one()
        for k in range(len(piv_cols) - 1, -1, -1):
            pc = piv_cols[k]
            acc = field.zero()
            for c in range(pc + 1, ncols):
                if m[k][c]:
                    acc = acc + m[k][c] * sol[c]
            sol[pc] = -acc / m[k][pc]
        basis.append(sol)
    return basis


@dataclass
class InvariantSubspace:
    basis: list               # vectors as model elements
    group_basis: list         # fixed space of the grouplike group alone
    equals_group_fixed: bool
    is_base_field_line: bool  # equal to F multiples of 1


def invariant_subspace(ext: ExtActionSpec) -> InvariantSubspace:
    """Joint kernel of (op(h) - counit(h) id) over all generators, plus the
    fixed space of the grouplike subgroup alone; the two must agree for
    pointed actions on fields."""
    H, model = ext.hopf, ext.model
    F = model.field
    D = model.dim
    idx = {e: k for k, e in enumerate(model.basis)}

    def kernel_of(gens) -> list:
        # build constraint matrix: for each generator, each output coordinate
        mats = []
        for gi in gens:
            eps = c_to_rat(F, H.counit(H.algebra.from_word((gi,))))
            M = [[F.zero()] * D for _ in range(D)]
            for col, e in enumerate(model.basis):
                img = ext.apply_generator(gi, model.from_basis(e))
                for e2, c in img.items():
                    M[idx[e2]][col] = M[idx[e2]][col] + c
                if eps:
                    M[col][col] = M[col][col] - eps
            mats.extend(M)
        sols = kernel_basis(mats, D, F)
        return [{model.basis[k]: c for k, c in enumerate(sol) if c} for sol in sols]

    all_gens = list(H.kinds)
    group_gens = [i for i, k in H.kinds.items() if isinstance(k, Grouplike)]
    full = kernel_of(all_gens)
    grp = kernel_of(group_gens)
    equals = _same_span(full, grp, model)
    base_line = len(full) == 1 and set(full[0]) == {(0,) * len(model.u_names)}
    return InvariantSubspace(full, grp, equals, base_line)


def _same_span(b1: list, b2: list, model: ExtFieldModel) -> bool:
    if len(b1) != len(b2):
        return False

    def reduce_against(vecs, v):
        v = dict(v)
        for lead, row in vecs:
            c = v.get(lead)
            if c:
                for k, rc in row.items():
                    s = v.get(k)
                    s = -(rc * c) if s is None else s - rc * c
                    if s:
                        v[k] = s
                    else:
                        v.pop(k, None)
        return v

    def echelon(basis):
        rows = []
        for vec in basis:
            v = reduce_against(rows, vec)
            if v:
                lead = next(iter(sorted(v)))
                c = v[lead]
                rows.append((lead, {k: x / c for k, x in v.items()}))
        return rows

    rows = echelon(b1)
    return all(not reduce_against(rows, v) for v in b2)


def galois_data(ext: ExtActionSpec) -> dict:
    """Grouplike group order versus model dimension, and the group-fixed
    space; for the catalog module fields these agree and the fixed space is
    the base-field line."""
    inv = invariant_subspace(ext)
    group_order = len(ext.hopf.group_elements())
    return {
        "dim_over_F": ext.model.dim,
        "group_order": group_order,
        "invariants": inv,
        "galois": group_order == ext.model.dim and inv.is_base_field_line and inv.equals_group_fixed,
    }


def fixed_subfield(ext: ExtActionSpec, c: Word, s: int) -> ExtActionSpec:
    """Restrict to {a : c^s . a = a} with the central quotient Hopf algebra
    acting; the eigenvalue-1 basis must be operator-closed."""
    H, model = ext.hopf, ext.model
    word = tuple(c) * s
    keep = []
    for e in model.basis:
        img = ext.group_word_apply(word, model.from_basis(e))
        if model.eq(img, model.from_basis(e)):
            keep.append(e)
    Hq = central_quotient(H, c, s)
    sub = ExtFieldModel(model.order, model.u_names, model.u_orders,
                        model.field.vars, basis=keep)
    mats = {}
    keep_set = set(keep)
    for gi in H.kinds:
        M = {}
        for e in keep:
            img = ext.apply_generator(gi, ext.model.from_basis(e))
            if any(e2 not in keep_set for e2 in img):
                raise ActionError("fixed subfield is not operator-closed")
            M[e] = img
        mats[gi] = M
    return ExtActionSpec(Hq, sub, mats)


def _ext_leibniz_pair(ext: ExtActionSpec, i: int, a: dict, b: dict) -> dict:
    H, model = ext.hopf, ext.model
    kind = H.kinds[i]
    if isinstance(kind, Grouplike):
        return model.mul(ext.apply_generator(i, a), ext.apply_generator(i, b))
    ga = ext.group_word_apply(kind.left, a)
    gpb = ext.group_word_apply(kind.right, b)
    return model.add(model.mul(ga, ext.apply_generator(i, b)),
                     model.mul(ext.apply_generator(i, a), gpb))


def ext_verify_all(ext: ExtActionSpec) -> Report:
    """Relation operators annihilate every basis element and the
    module-algebra rule holds on all basis pairs; the model is closed, so no
    degree cap is involved."""
    H, model = ext.hopf, ext.model
    checks = []
    for ridx, rel in enumerate(H.relations):
        eps = H.counit(rel)
        bad = None
        for e in model.basis:
            a = model.from_basis(e)
            got = ext.apply(rel, a)
            if eps:
                got = model.add(got, model.scale(a, model.field.const(eps) * (-1)))
            if got:
                bad = f"relation {ridx} on {model.repr_elem(a)}"
                break
        checks.append(Check(f"model-relation-{ridx}", "fail" if bad else "pass", bad))
    for i in H.kinds:
        name = H.algebra.symbols[i].name
        bad = None
        for ea in model.basis:
            for eb in model.basis:
                a, b = model.from_basis(ea), model.from_basis(eb)
                lhs = ext.apply_generator(i, model.mul(a, b))
                rhs = _ext_leibniz_pair(ext, i, a, b)
                if not model.eq(lhs, rhs):
                    bad = f"{name} on u^{ea} * u^{eb}"
                    break
            if bad:
                break
        checks.append(Check(f"model-module-algebra-{name}", "fail" if bad else "pass", bad))
    return Report(f"model[{H.name}]", checks)


def ext_inner_faithful(ext: ExtActionSpec) -> bool:
    """The pointed criterion on a field model: distinct diagonal group
    characters on the basis, and per-bucket independence of the skew
    primitive matrices together with the trivial primitive."""
    H, model = ext.hopf, ext.model
    group_idx = [i for i, k in H.kinds.items() if isinstance(k, Grouplike)]
    diag = {}
    for gi in group_idx:
        eig = []
        for e in model.basis:
            img = ext.apply_generator(gi, model.from_basis(e))
            if set(img) != {e}:
                raise ActionError("grouplikes must act diagonally on the model basis")
            val = img[e]
            if not val.is_constant():
                raise ActionError("grouplike eigenvalues must be constants")
            eig.append(val.constant_value())
        diag[gi] = eig
    seen = set()
    for elem in H.group_elements():
        key = []
        for k in range(model.dim):
            val = CycNum.rational(1, model.order)
            for gi, e in zip(group_idx, elem):
                val = val * diag[gi][k] ** e
            key.append(val.key())
        key = tuple(key)
        if key in seen:
            return False
        seen.add(key)
    buckets: dict = {}
    for i, k in H.kinds.items():
        if isinstance(k, SkewPrimitive):
            buckets.setdefault((H.group_word_exponents(k.left),
                                H.group_word_exponents(k.right)), []).append(i)
    for (left, right), idxs in buckets.items():
        vectors = []
        for i in idxs:
            vec = {}
            for e in model.basis:
                for e2, c in ext.apply_generator(i, model.from_basis(e)).items():
                    vec[(e, e2)] = c
            if not vec:
                return False
            vectors.append(vec)
        if left != right:
            lw, rw = H.group_word(left), H.group_word(right)
            vec = {}
            for e in model.basis:
                img = model.add(ext.group_word_apply(lw, model.from_basis(e)),
                                model.scale(ext.group_word_apply(rw, model.from_basis(e)), -1))
                for e2, c in img.items():
                    vec[(e, e2)] = c
            if vec:
                vectors.append(vec)
        if _rank_dicts(vectors) != len(vectors):
            return False
    return True


def _rank_dicts(vectors: list) -> int:
    """Rank over the base field k of matrices with entries in F: each entry
    f = num/den is spread over the k-basis of monomials after clearing the
    common denominator at its position, since inner faithfulness asks for
    independence over k, not over F."""
    from .scalars import _p_exact_div, _p_gcd, _p_mul

    positions = sorted({k for vec in vectors for k in vec})
    flat = [dict() for _ in vectors]
    for pos in positions:
        fs = [vec.get(pos) for vec in vectors]
        dens = [f.den for f in fs if f is not None]
        common = dens[0]
        for d in dens[1:]:
            g = _p_gcd(common, d)
            common = _p_exact_div(_p_mul(common, d), g)
        for i, f in enumerate(fs):
            if f is None:
                continue
            num = _p_mul(f.num, _p_exact_div(common, f.den))
            for mono, c in num.items():
                flat[i][(pos, mono)] = c
    rows = []
    for v in flat:
        v = dict(v)
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
            rows.append((lead, {k: x / c for k, x in v.items()}))
    return len(rows)
