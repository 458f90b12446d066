"""Command line surface: a small presentation/action DSL with positioned
diagnostics, named verification suites, and deterministic JSON reports.

Grammar::

    hopf <name> over cyclotomic(<m>) [params (<k>=<v>, ...)] {
        group <g> : order <n>;
        skew <x> : (<groupword>, <groupword>);
        rel <ncpoly> = <ncpoly>;
    }
    action on qpoly(<z1>, ...; commutation <scalar>; laurent <0/1 flags>) {
        <gen> . <var> = <poly>;
    }

Scalars are integers, ``zeta^k`` and ``q^k`` literals (``q`` defaults to
``zeta`` and can be redefined in params, e.g. ``q=zeta^2``), combined with
``*``, ``/`` and ``^``; ``1`` denotes the empty group word.  Reports are
bit-identical across runs: timings are only emitted under --timings.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .action import (ActionSpec, Automorphism, Check, QPolyRing, Report,
                     SkewDerivation, adjoint_action, book_action, h81_action,
                     hu_action, inner_faithful_pointed, nichols_action,
                     taft_action, uq_gl2_action, uq_prime_gl2_action,
                     uq_sl2_action, verify_all, verify_hopf_relations)
from .catalog import (adjoint_borel, book, borel, gen_taft, h81,
                      h81_xy_relations, kq, nichols_e, taft, uq_gl2, uq_gln,
                      uq_prime_gl2, uq_sl2)
from .classify import (Feasible, Infeasible, book_feasibility, classify_cyclic,
                       materialize)
from .fieldmodel import (ext_inner_faithful, ext_verify_all, galois_data,
                         invariant_subspace, localize_action)
from .hopf import (Grouplike, HopfPresentation, PresentationError,
                   SkewPrimitive, cartan_type, hopf_iso_check)
from .ncalg import FreeAlgebra, GenSymbol, NCPoly, truncated_quotient_dim
from .scalars import CycNum, gauss_sum
from .twist import (Bicharacter, Cocycle, FinAbGroup, Infeasible as JqInfeasible,
                    Solvable, TwistedHopf, TwistError, eigen_characters,
                    j_minus_cocycle, j_plus_cocycle, jq_exists,
                    jq_from_orientation, twist_algebra, twist_from_cocycle)


# -- DSL ------------------------------------------------------------------------


class ParseError(Exception):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col
        self.message = message


@dataclass
class Token:
    kind: str       # name | int | punct | end
    text: str
    line: int
    col: int


_PUNCT = ("(", ")", "{", "}", ";", ",", ":", "=", "^", "*", "/", ".", "-", "+")


def tokenize(text: str) -> list:
    toks = []
    line, col, i = 1, 1, 0
    while i < len(text):
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if c == "#":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(Token("int", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] in "_'"):
                j += 1
            toks.append(Token("name", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if c in _PUNCT:
            toks.append(Token("punct", c, line, start_col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {c!r}", line, col)
    toks.append(Token("end", "", line, col))
    return toks


@dataclass
class PresentationDoc:
    presentation: HopfPresentation
    actions: list
    source_params: dict


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.toks[self.pos]

    def next(self) -> Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def fail(self, message: str, tok: Optional[Token] = None):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.col)

    def expect(self, kind: str, text: Optional[str] = None) -> Token:
        t = self.peek()
        if t.kind != kind or (text is not None and t.text != text):
            want = text or kind
            self.fail(f"expected {want!r}, found {t.text!r}" if t.text else f"expected {want!r}")
        return self.next()

    def accept(self, kind: str, text: Optional[str] = None) -> Optional[Token]:
        t = self.peek()
        if t.kind == kind and (text is None or t.text == text):
            return self.next()
        return None

    # -- grammar ---------------------------------------------------------------

    def parse_document(self) -> PresentationDoc:
        if self.peek().kind == "end":
            self.fail("expected 'hopf'")
        self.expect("name", "hopf")
        name = self.expect("name").text
        self.expect("name", "over")
        self.expect("name", "cyclotomic")
        self.expect("punct", "(")
        order = int(self.expect("int").text)
        self.expect("punct", ")")
        params = {}
        q_power = 1
        if self.accept("name", "params"):
            self.expect("punct", "(")
            while True:
                key = self.expect("name").text
                self.expect("punct", "=")
                if key == "q":
                    self.expect("name", "zeta")
                    if self.accept("punct", "^"):
                        q_power = self._parse_signed_int()
                    else:
                        q_power = 1
                    params["q_power"] = q_power % order
                else:
                    params[key] = self._parse_scalar(order, q_power)
                if not self.accept("punct", ","):
                    break
            self.expect("punct", ")")
        self.expect("punct", "{")
        gen_specs = []     # (name, kind-spec)
        relations_src = []
        while not self.accept("punct", "}"):
            head = self.expect("name")
            if head.text == "group":
                gname = self.expect("name").text
                self.expect("punct", ":")
                self.expect("name", "order")
                gorder = int(self.expect("int").text)
                self.expect("punct", ";")
                gen_specs.append((gname, ("group", gorder)))
            elif head.text == "skew":
                xname = self.expect("name").text
                self.expect("punct", ":")
                self.expect("punct", "(")
                left = self._parse_group_word_src()
                self.expect("punct", ",")
                right = self._parse_group_word_src()
                self.expect("punct", ")")
                self.expect("punct", ";")
                gen_specs.append((xname, ("skew", left, right)))
            elif head.text == "rel":
                lhs = self._parse_poly_src()
                self.expect("punct", "=")
                rhs = self._parse_poly_src()
                self.expect("punct", ";")
                relations_src.append((lhs, rhs, head))
            else:
                self.fail("expected 'group', 'skew' or 'rel'", head)
        # build the presentation
        names = [n for n, _ in gen_specs]
        if len(set(names)) != len(names):
            self.fail("duplicate generator name")
        symbols = [GenSymbol(n, 0 if spec[0] == "group" else 1) for n, spec in gen_specs]
        algebra = FreeAlgebra(symbols, CycNum.rational(1, order))
        index = {n: i for i, n in enumerate(names)}
        kinds = {}
        for n, spec in gen_specs:
            if spec[0] == "group":
                kinds[index[n]] = Grouplike(spec[1])
            else:
                left = self._group_word(spec[1], index, gen_specs)
                right = self._group_word(spec[2], index, gen_specs)
                kinds[index[n]] = SkewPrimitive(left, right)
        relations = []
        for lhs, rhs, tok in relations_src:
            l = self._poly(lhs, algebra, index, order, q_power)
            r = self._poly(rhs, algebra, index, order, q_power)
            relations.append(l - r)
        try:
            pres = HopfPresentation(name, algebra, kinds, relations, order,
                                    params={"q_power": q_power, **params})
        except PresentationError as ex:
            self.fail(str(ex), self.toks[0])
        actions = []
        while self.peek().kind != "end":
            actions.append(self._parse_action(pres, order, q_power))
        return PresentationDoc(pres, actions, params)

    def _parse_signed_int(self) -> int:
        sign = -1 if self.accept("punct", "-") else 1
        return sign * int(self.expect("int").text)

    def _parse_scalar(self, order: int, q_power: int):
        """Product of integer / fraction / zeta^k / q^k literals."""
        acc = CycNum.rational(1, order)
        sign = 1
        while self.accept("punct", "-"):
            sign = -sign
        while True:
            t = self.peek()
            if t.kind == "int":
                self.next()
                val = Fraction(int(t.text))
                if self.accept("punct", "/"):
                    val /= int(self.expect("int").text)
                acc = acc * val
            elif t.kind == "name" and t.text in ("zeta", "q"):
                self.next()
                p = 1
                if self.accept("punct", "^"):
                    p = self._parse_signed_int()
                if t.text == "q":
                    p *= q_power
                acc = acc * CycNum.zeta(order, p % order)
            else:
                self.fail("expected a scalar literal")
            if not self.accept("punct", "*"):
                break
            # peek: scalar continues only with another literal
            t = self.peek()
            if not (t.kind == "int" or (t.kind == "name" and t.text in ("zeta", "q"))):
                self.fail("expected a scalar literal after '*'")
        return acc * sign

    def _parse_group_word_src(self):
        toks = []
        if self.accept("int", "1"):
            return toks
        while True:
            n = self.expect("name")
            p = 1
            if self.accept("punct", "^"):
                p = int(self.expect("int").text)
            toks.append((n, p))
            if not self.accept("punct", "*"):
                break
        return toks

    def _group_word(self, src, index, gen_specs):
        word = []
        spec_by_name = dict(gen_specs)
        for tok, p in src:
            if tok.text not in index:
                raise ParseError(f"undeclared generator {tok.text!r}", tok.line, tok.col)
            if spec_by_name[tok.text][0] != "group":
                raise ParseError(f"{tok.text!r} is not grouplike", tok.line, tok.col)
            word.extend([index[tok.text]] * p)
        return tuple(word)

    def _parse_poly_src(self):
        """Sum of terms; each term is an optional scalar times a word."""
        terms = []
        sign = 1
        while True:
            factors = []
            scalar_toks_present = False
            while True:
                t = self.peek()
                if t.kind == "int" or (t.kind == "name" and t.text in ("zeta", "q")):
                    factors.append(("scalar", self._parse_scalar_token()))
                    scalar_toks_present = True
                elif t.kind == "name":
                    self.next()
                    p = 1
                    if self.accept("punct", "^"):
                        p = self._parse_signed_int()
                    factors.append(("gen", t, p))
                else:
                    break
                if not self.accept("punct", "*"):
                    break
            if not factors:
                self.fail("expected a term")
            terms.append((sign, factors))
            if self.accept("punct", "+"):
                sign = 1
            elif self.accept("punct", "-"):
                sign = -1
            else:
                break
        return terms

    def _parse_scalar_token(self):
        t = self.next()
        if t.kind == "int":
            num = int(t.text)
            den = 1
            if self.accept("punct", "/"):
                den = int(self.expect("int").text)
            return ("num", Fraction(num, den), t)
        p = 1
        if self.accept("punct", "^"):
            p = self._parse_signed_int()
        return ("root", t.text, p, t)

    def _eval_scalar_factor(self, f, order, q_power):
        if f[0] == "num":
            return CycNum.rational(f[1], order)
        _, name, p, _ = f
        if name == "q":
            p *= q_power
        return CycNum.zeta(order, p % order)

    def _poly(self, src, algebra, index, order, q_power) -> NCPoly:
        acc = algebra.zero()
        for sign, factors in src:
            coeff = CycNum.rational(sign, order)
            word = []
            for f in factors:
                if f[0] == "scalar":
                    coeff = coeff * self._eval_scalar_factor(f[1], order, q_power)
                else:
                    _, tok, p = f
                    if tok.text not in index:
                        raise ParseError(f"undeclared generator {tok.text!r}", tok.line, tok.col)
                    if p < 0:
                        raise ParseError("negative generator powers are not allowed here",
                                         tok.line, tok.col)
                    word.extend([index[tok.text]] * p)
            acc = acc + algebra.from_word(tuple(word), coeff)
        return acc

    def _parse_action(self, pres: HopfPresentation, order: int, q_power: int):
        self.expect("name", "action")
        self.expect("name", "on")
        self.expect("name", "qpoly")
        self.expect("punct", "(")
        variables = [self.expect("name").text]
        while self.accept("punct", ","):
            variables.append(self.expect("name").text)
        comm_scalar = None
        laurent = [False] * len(variables)
        while self.accept("punct", ";"):
            key = self.expect("name")
            if key.text == "commutation":
                comm_scalar = self._parse_scalar(order, q_power)
            elif key.text == "laurent":
                laurent = []
                for _ in variables:
                    laurent.append(bool(int(self.expect("int").text)))
            else:
                self.fail("expected 'commutation' or 'laurent'", key)
        self.expect("punct", ")")
        if comm_scalar is None or comm_scalar == CycNum.rational(1, order):
            ring = QPolyRing.commutative(variables, laurent, order)
        else:
            ring = QPolyRing.quantum_plane(variables, comm_scalar, laurent)
        self.expect("punct", "{")
        var_index = {v: i for i, v in enumerate(variables)}
        images: dict = {}
        while not self.accept("punct", "}"):
            gname = self.expect("name")
            if gname.text not in pres.algebra.index:
                self.fail(f"undeclared generator {gname.text!r}", gname)
            self.expect("punct", ".")
            vname = self.expect("name")
            if vname.text not in var_index:
                self.fail(f"undeclared variable {vname.text!r}", vname)
            self.expect("punct", "=")
            poly = self._parse_target_poly(ring, var_index, order, q_power)
            self.expect("punct", ";")
            images.setdefault(pres.algebra.index[gname.text], {})[var_index[vname.text]] = poly
        ops = {}
        for i, kind in pres.kinds.items():
            imgs = images.get(i, {})
            images_list = []
            for v in range(len(variables)):
                if v in imgs:
                    images_list.append(imgs[v])
                elif isinstance(kind, Grouplike):
                    images_list.append(ring.gen(variables[v]))
                else:
                    images_list.append(ring.zero())
            ops[i] = Automorphism(images_list) if isinstance(kind, Grouplike) \
                else SkewDerivation(images_list)
        return ActionSpec(pres, ring, ops)

    def _parse_target_poly(self, ring: QPolyRing, var_index, order, q_power) -> dict:
        src = self._parse_poly_src()
        acc = ring.zero()
        for sign, factors in src:
            coeff = CycNum.rational(sign, order)
            exps = [0] * len(ring.vars)
            for f in factors:
                if f[0] == "scalar":
                    coeff = coeff * self._eval_scalar_factor(f[1], order, q_power)
                else:
                    _, tok, p = f
                    if tok.text not in var_index:
                        raise ParseError(f"undeclared variable {tok.text!r}", tok.line, tok.col)
                    exps[var_index[tok.text]] += p
            acc = ring.add(acc, ring.monomial(tuple(exps), coeff))
        return acc


def parse_presentation(text: str) -> PresentationDoc:
    return _Parser(text).parse_document()


def print_presentation(doc: PresentationDoc) -> str:
    """Canonical form: parse(print(parse(text))) == parse(text)."""
    H = doc.presentation
    lines = [f"hopf {H.name} over cyclotomic({H.scalar_order}) {{"]
    for i, s in enumerate(H.algebra.symbols):
        kind = H.kinds[i]
        if isinstance(kind, Grouplike):
            lines.append(f"  group {s.name} : order {kind.order};")
        else:
            lw = H.algebra.word_str(kind.left)
            rw = H.algebra.word_str(kind.right)
            lines.append(f"  skew {s.name} : ({lw}, {rw});")
    for r in H.relations:
        lines.append(f"  rel {_poly_str(H, r)} = 0;")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _poly_str(H: HopfPresentation, p: NCPoly) -> str:
    if not p.terms:
        return "0"
    parts = []
    for w in sorted(p.terms, key=H.algebra.word_key, reverse=True):
        c = p.terms[w]
        parts.append(f"{_scalar_str(c, H.scalar_order)}" +
                     ("" if not w else " * " + H.algebra.word_str(w).replace("*", " * ")))
    return " + ".join(parts)


def _scalar_str(c: CycNum, order: int) -> str:
    if c.is_rational():
        v = c.rational_value()
        return str(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    parts = []
    for k, coef in enumerate(c.coeffs):
        if not coef:
            continue
        base = "1" if k == 0 else ("zeta" if k == 1 else f"zeta^{k}")
        if k == 0:
            parts.append(str(coef))
        elif coef == 1:
            parts.append(base)
        else:
            parts.append(f"{coef} * {base}")
    return " + ".join(parts)


# -- suites -----------------------------------------------------------------------


CATALOG_ACTIONS = {
    "taft": (lambda **kw: taft(kw["n"]), taft_action, lambda kw: [("z", kw["n"])]),
    "nichols_e": (lambda **kw: nichols_e(kw["n"]), nichols_action, lambda kw: [("z", 2)]),
    "book": (lambda **kw: book(kw["n"], kw.get("p", 1)), book_action, lambda kw: [("z", kw["n"])]),
    "h81": (lambda **kw: h81(), h81_action, lambda kw: [("z", 3)]),
    "uq_sl2": (lambda **kw: uq_sl2(kw["m"], kw.get("lam", 1)), uq_sl2_action,
               lambda kw: [("z", kw["m"])]),
    "uq_gl2": (lambda **kw: uq_gl2(kw["m"]), uq_gl2_action,
               lambda kw: [("z", kw["m"]), ("w", kw["m"])]),
    "uq_prime_gl2": (lambda **kw: uq_prime_gl2(kw["m"]), uq_prime_gl2_action,
                     lambda kw: [("z1", kw["m"]), ("z2", kw["m"])]),
    "uq_gl3": (lambda **kw: uq_gln(3, kw["m"]), hu_action, lambda kw: None),
    "adjoint_borel_a1": (lambda **kw: adjoint_borel(cartan_type("A1"), kw["m"]),
                         adjoint_action, lambda kw: [("z1", kw["m"])]),
    "adjoint_borel_a2": (lambda **kw: adjoint_borel(cartan_type("A2"), kw["m"]),
                         adjoint_action, lambda kw: None),
}


def _mk_check(cid: str, ok: bool, witness: Optional[str] = None, ref: str = "") -> dict:
    return {"id": cid, "status": "pass" if ok else "fail",
            "witness": witness if not ok else None, "ref": ref or cid}


def suite_catalog_verify(params: dict, degree_cap: int = 6, seed: int = 0) -> list:
    name = params.get("algebra", "taft")
    if name not in CATALOG_ACTIONS:
        raise ValueError(f"unknown catalog algebra {name!r}; choose from {sorted(CATALOG_ACTIONS)}")
    mk, actmk, dens = CATALOG_ACTIONS[name]
    kw = {k: int(v) for k, v in params.items() if k != "algebra"}
    H = mk(**kw)
    act = actmk(H)
    checks = []
    rep = verify_all(act, degree_cap)
    for c in rep.checks:
        checks.append(_mk_check(f"{name}/{c.check_id}", c.status == "pass", c.witness,
                                ref=f"catalog/{name}"))
    checks.append(_mk_check(f"{name}/inner-faithful", inner_faithful_pointed(act),
                            ref=f"catalog/{name}"))
    return checks


def suite_dimensions(params: dict, degree_cap: int = 6, seed: int = 0) -> list:
    checks = []
    jobs = []
    if params:
        jobs.append(params)
    else:
        jobs = [{"algebra": "taft", "n": n} for n in range(2, 7)] + \
               [{"algebra": "nichols_e", "n": n} for n in range(1, 5)] + \
               [{"algebra": "gen_taft", "n": n, "m": m} for (n, m) in ((4, 2), (6, 3), (9, 3))] + \
               [{"algebra": "book", "n": n} for n in (2, 3)] + \
               [{"algebra": "h81_xy"}, {"algebra": "uq_sl2", "m": 3}]
    for job in jobs:
        name = job["algebra"]
        if name == "taft":
            H = taft(job["n"])
            cap = 2 * job["n"] + 1
        elif name == "nichols_e":
            H = nichols_e(job["n"])
            cap = job["n"] + 3
        elif name == "gen_taft":
            H = gen_taft(job["n"], job["m"], job.get("alpha", 1))
            cap = job["n"] + job["m"] + 2
        elif name == "book":
            H = book(job["n"], job.get("p", 1))
            cap = 3 * (job["n"] - 1) + 2
        elif name == "uq_sl2":
            H = uq_sl2(job["m"])
            cap = 3 * (job["m"] - 1) + 2
        elif name == "h81_xy":
            A, rels = h81_xy_relations()
            from .ncalg import orient_relations
            rs = orient_relations(A, rels)
            res = truncated_quotient_dim(rs, rels, int(job.get("cap", 12)))
            ok = res.stabilized and res.dim == 27
            checks.append(_mk_check("dim/h81-xy-part-27", ok,
                                    None if ok else repr(res), ref="dim/h81"))
            checks.append(_mk_check("dim/h81-total-81", ok and 3 * res.dim == 81,
                                    ref="dim/h81"))
            continue
        else:
            raise ValueError(f"unknown dimension target {name!r}")
        cap = int(job.get("cap", cap))
        res = truncated_quotient_dim(H.rewrite, H.relations, cap)
        ok = res.stabilized and res.dim == H.claimed_dim
        checks.append(_mk_check(f"dim/{H.name}-{H.claimed_dim}", ok,
                                None if ok else repr(res), ref=f"dim/{name}"))
    return checks


def suite_twists(params: dict, degree_cap: int = 6, seed: int = 0) -> list:
    import random
    checks = []
    ms = [int(params["m"])] if "m" in params else [3, 5]
    ns = [int(params["n"])] if "n" in params else [2, 3]
    for m in ms:
        q = CycNum.zeta(m)
        for n in ns:
            sp = j_plus_cocycle(n, m)
            J = twist_from_cocycle(sp)
            checks.append(_mk_check(f"twist/J+-counit-{n}-{m}", J.counit_sides_are_one(),
                                    ref="twist/axioms"))
            if n == 2 and m == 3:
                checks.append(_mk_check("twist/J+-axioms-raw-2-3",
                                        J.satisfies_twist_axioms_raw(), ref="twist/axioms"))
            chars = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
            Aq = QPolyRing.quantum_plane(tuple(f"z{i+1}" for i in range(n)), q)
            comm = QPolyRing.commutative(tuple(f"z{i+1}" for i in range(n)), order=m)
            tw = twist_algebra(comm, chars, J.inverse(), check_raw=True)
            ok = all(tw.gamma[i][j] == Aq.gamma[i][j] for i in range(n) for j in range(n))
            checks.append(_mk_check(f"twist/k[z]-Jplus-inverse-is-Aq-{n}-{m}", ok,
                                    ref="twist/directions"))
            back = twist_algebra(Aq, chars, J, check_raw=True)
            one = CycNum.rational(1, m)
            ok = all(back.gamma[i][j] == one for i in range(n) for j in range(n) if i != j)
            checks.append(_mk_check(f"twist/Aq-Jplus-commutative-{n}-{m}", ok,
                                    ref="twist/directions"))
        # random bicharacter roundtrips on (Z/m)^3
        rng = random.Random(seed or 20240 + m)
        G3 = FinAbGroup((m,) * 3)
        chars3 = [tuple(1 if k == i else 0 for k in range(3)) for i in range(3)]
        base = QPolyRing.quantum_plane(("z1", "z2", "z3"), q)
        ok_all = True
        for _ in range(20):
            B = [[0] * 3 for _ in range(3)]
            for i in range(3):
                for j in range(i + 1, 3):
                    B[i][j] = rng.randrange(m)
                    B[j][i] = (-B[i][j]) % m
            b = Bicharacter(G3, B)
            binv = Bicharacter(G3, [[(-x) % m for x in row] for row in B])
            rt = twist_algebra(twist_algebra(base, chars3, b), chars3, binv)
            if not all(rt.gamma[i][j] == base.gamma[i][j] for i in range(3) for j in range(3)):
                ok_all = False
        checks.append(_mk_check(f"twist/roundtrip-random-bichar-(Z{m})^3", ok_all,
                                ref="twist/roundtrip"))
    checks.extend(suite_isomorphisms({}, degree_cap, seed))
    return checks


def suite_isomorphisms(params: dict, degree_cap: int = 6, seed: int = 0) -> list:
    checks = []
    m = int(params.get("m", 3))
    q = CycNum.zeta(m)
    K = kq(m, exp=2 % m if m > 2 else 1)
    U = uq_sl2(m, lam=1)
    phi = {"g": U.gen("k"), "x": U.gen("e"),
           "y": (U.gen("k") * U.gen("f")).scale(q - q.inverse())}
    inv = {"k": K.gen("g"), "e": K.gen("x"),
           "f": (K.gen("g") ** (m - 1) * K.gen("y")).scale((q - q.inverse()).inverse())}
    checks.append(_mk_check(f"iso/Kq2-uqsl2-m{m}", hopf_iso_check(phi, K, U, inverse=inv),
                            ref="iso/kq"))
    H2 = uq_gl2(m)
    Hp = uq_prime_gl2(m, exp=2 % m)
    Jp = twist_from_cocycle(j_plus_cocycle(2, m))
    Jinv_c = Cocycle(Jp.group, Jp.cocycle.inverse().matrix)
    Jinv = twist_from_cocycle(Jinv_c)
    tw = TwistedHopf(H2, Jinv, embedding=[(1, 0), (0, 1)])
    g1, g2, e, f = (H2.gen(s) for s in ("g1", "g2", "e", "f"))
    phi2 = {"c1": g1 * g1, "c2": g2 ** (m - 2), "x1": e * g1,
            "x2": (g2 ** (m - 1) * f).scale(q - q.inverse())}
    half = (m + 1) // 2
    inv2 = {"g1": Hp.gen("c1") ** half, "g2": Hp.gen("c2") ** (m - half),
            "e": Hp.gen("x1") * Hp.gen("c1") ** (m - half),
            "f": (Hp.gen("c2") ** (m - half) * Hp.gen("x2")).scale((q - q.inverse()).inverse())}
    ok = hopf_iso_check(phi2, Hp, H2, inverse=inv2, target_coproduct=tw.coproduct)
    checks.append(_mk_check(f"iso/uq-prime-gl2-twisted-gl2-m{m}", ok, ref="iso/gl2"))
    return checks


def suite_jq_solver(params: dict, degree_cap: int = 6, seed: int = 0) -> list:
    checks = []
    if params.get("type"):
        cd = cartan_type(params["type"])
        m = int(params["m"])
        res = jq_exists(cd, m)
        solvable = isinstance(res, Solvable)
        witness = None if solvable else res.witness
        checks.append({"id": f"jq/{params['type']}-m{m}",
                       "status": "pass",
                       "witness": f"{'Solvable' if solvable else 'Infeasible'}"
                                  + (f": {witness}" if witness else ""),
                       "ref": "jq/single"})
        return checks
    for n in range(2, 6):
        cd = cartan_type(f"A{n-1}")
        for m in range(3, 16, 2):
            res = jq_exists(cd, m)
            expect = math.gcd(m, n) == 1
            got = isinstance(res, Solvable)
            checks.append(_mk_check(f"jq/A{n-1}-m{m}-{'solvable' if expect else 'infeasible'}",
                                    got == expect,
                                    None if got == expect else repr(res), ref="jq/grid"))
    for name in ("A1", "A2", "A3"):
        for m in (3, 5):
            c = jq_from_orientation(cartan_type(name), m)
            cd = cartan_type(name)
            ok = True
            b = c.bicharacter()
            for (i, j) in cd.orientation:
                ei = tuple(1 if k == i else 0 for k in range(cd.rank))
                ej = tuple(1 if k == j else 0 for k in range(cd.rank))
                if b.exponent_of(ei, ej) != (cd.d[i] * cd.a[i][j]) % m:
                    ok = False
            checks.append(_mk_check(f"jq/adjoint-{name}-m{m}", ok, ref="jq/adjoint"))
    return checks


def suite_classify(params: dict, degree_cap: int = 6, seed: int = 0) -> list:
    checks = []
    jobs = []
    if params.get("family"):
        jobs.append(params)
    else:
        jobs = [{"family": "gen_taft", "n": n, "m": m, "alpha": a}
                for (n, m) in ((4, 2), (6, 3), (9, 3)) for a in (0, 1)] + \
               [{"family": "book", "n": n, "p": p} for (n, p) in ((5, 2), (5, 3), (7, 2), (5, 1))] + \
               [{"family": "uq_sl2", "m": m, "lam": lam} for m in (3, 5) for lam in (0, 1)] + \
               [{"family": "taft", "n": n} for n in (3, 4)]
    for job in jobs:
        fam = job["family"]
        if fam == "taft":
            H = taft(int(job["n"]))
            expect = True
        elif fam == "gen_taft":
            H = gen_taft(int(job["n"]), int(job["m"]), int(job.get("alpha", 0)))
            expect = int(job["n"]) == int(job["m"])
        elif fam == "book":
            H = book(int(job["n"]), int(job["p"]))
            expect = int(job["p"]) == 1
        elif fam == "uq_sl2":
            H = uq_sl2(int(job["m"]), int(job.get("lam", 1)))
            expect = int(job.get("lam", 1)) != 0
        elif fam == "nichols_e":
            H = nichols_e(int(job["n"]))
            expect = True
        elif fam == "h81":
            H = h81()
            expect = True
        else:
            raise ValueError(f"unknown family {fam!r}")
        res = classify_cyclic(H)
        got = isinstance(res, Feasible)
        ok = got == expect
        detail = "Feasible" if got else f"Infeasible[{res.certificate.kind}]"
        if got and ok:
            ext = materialize(res)
            ok = (ext_verify_all(ext).passed and ext_inner_faithful(ext)
                  and invariant_subspace(ext).is_base_field_line)
            detail += "; model verified" if ok else "; MODEL FAILED"
        if not got and ok:
            ok = res.certificate.recheck()
            detail += "; certificate rechecked" if ok else "; RECHECK FAILED"
        checks.append({"id": f"classify/{H.name}", "status": "pass" if ok else "fail",
                       "witness": detail, "ref": f"classify/{fam}"})
    return checks


def suite_invariants(params: dict, degree_cap: int = 6, seed: int = 0) -> list:
    checks = []
    jobs = [("taft", {"n": 4}), ("nichols_e", {"n": 2}), ("book", {"n": 3}),
            ("h81", {}), ("uq_sl2", {"m": 3}), ("uq_gl2", {"m": 3}),
            ("uq_prime_gl2", {"m": 3}), ("adjoint_borel_a1", {"m": 3})]
    if params.get("algebra"):
        jobs = [(params["algebra"], {k: int(v) for k, v in params.items() if k != "algebra"})]
    for name, kw in jobs:
        mk, actmk, dens_spec = CATALOG_ACTIONS[name]
        H = mk(**kw)
        act = actmk(H)
        dens = dens_spec(kw)
        if dens is None:
            continue  # noncommutative target: no field model
        T = act.target
        denominators = []
        for var, p in dens:
            i = T.vars.index(var)
            denominators.append(T.monomial(tuple(p if k == i else 0 for k in range(len(T.vars)))))
        ext = localize_action(act, denominators)
        data = galois_data(ext)
        inv = data["invariants"]
        checks.append(_mk_check(f"invariants/{H.name}/A^H=A^G", inv.equals_group_fixed,
                                ref="invariants/theorem"))
        checks.append(_mk_check(f"invariants/{H.name}/fixed=F1", inv.is_base_field_line,
                                ref="invariants/theorem"))
        checks.append(_mk_check(f"invariants/{H.name}/galois-degree",
                                data["group_order"] == data["dim_over_F"],
                                f"|G|={data['group_order']} dim={data['dim_over_F']}"
                                if data["group_order"] != data["dim_over_F"] else None,
                                ref="invariants/galois"))
    return checks


SUITES = {
    "catalog-verify": suite_catalog_verify,
    "dimensions": suite_dimensions,
    "twists": suite_twists,
    "jq-solver": suite_jq_solver,
    "classify": suite_classify,
    "invariants": suite_invariants,
}


def run_suite(name: str, params: dict, degree_cap: int = 6, seed: int = 0) -> dict:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    digest_src = json.dumps({"suite": name, "params": params, "cap": degree_cap,
                             "seed": seed}, sort_keys=True)
    t0 = time.monotonic()
    checks = SUITES[name](params, degree_cap, seed)
    elapsed = time.monotonic() - t0
    checks.sort(key=lambda c: c["id"])
    return {
        "tool_version": __version__,
        "input_digest": hashlib.sha256(digest_src.encode()).hexdigest(),
        "suite": name,
        "checks": checks,
        "timings": None,
        "_elapsed": elapsed,
    }


def report_to_json(report: dict, timings: bool = False) -> str:
    out = dict(report)
    elapsed = out.pop("_elapsed", None)
    out["timings"] = {"total_seconds": elapsed} if timings else None
    return json.dumps(out, indent=2, sort_keys=True) + "\n"


# -- entry point -----------------------------------------------------------------


def _parse_kv(pairs: Sequence[str]) -> dict:
    out = {}
    for p in pairs:
        if "=" not in p:
            raise ValueError(f"expected key=value, got {p!r}")
        k, v = p.split("=", 1)
        out[k] = v
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = argparse.ArgumentParser(prog="hopfact",
                                 description="exact checks for pointed Hopf algebra "
                                             "actions, twists, and invariants")
    ap.add_argument("--json", metavar="PATH", help="write the JSON report here")
    ap.add_argument("--degree-cap", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--timings", action="store_true",
                    help="include wall-clock timings in the report")
    sub = ap.add_subparsers(dest="command", required=True)

    p_parse = sub.add_parser("parse", help="parse a presentation DSL file and echo "
                                           "its canonical form")
    p_parse.add_argument("file")
    p_parse.add_argument("--verify", action="store_true",
                         help="also run the action checks found in the file")

    p_suite = sub.add_parser("suite", help="run a named verification suite")
    p_suite.add_argument("name", choices=sorted(SUITES))
    p_suite.add_argument("params", nargs="*", help="key=value suite parameters")

    p_classify = sub.add_parser("classify", help="classify a cyclic-ansatz family")
    p_classify.add_argument("params", nargs="+", help="family=... plus numeric arguments")

    p_twist = sub.add_parser("twist", help="build a twist from a named cocycle and "
                                           "print its bicharacter table")
    p_twist.add_argument("params", nargs="+",
                         help="kind=jplus|jminus n=... m=... | kind=jq type=A2 m=5")

    p_jq = sub.add_parser("solve-jq", help="decide orientation-twist existence")
    p_jq.add_argument("params", nargs="+", help="type=A2 m=3")

    args = ap.parse_args(argv)

    try:
        if args.command == "parse":
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
            try:
                doc = parse_presentation(text)
            except ParseError as ex:
                print(f"parse error: {ex}", file=sys.stderr)
                return 2
            sys.stdout.write(print_presentation(doc))
            if args.verify and doc.actions:
                ok = True
                for act in doc.actions:
                    rep = verify_all(act, args.degree_cap)
                    ok = ok and rep.passed
                    print(f"# action checks: {'pass' if rep.passed else 'FAIL'}")
                return 0 if ok else 1
            return 0

        if args.command == "suite":
            params = _parse_kv(args.params)
            report = run_suite(args.name, params, args.degree_cap, args.seed)
            payload = report_to_json(report, args.timings)
            if args.json:
                with open(args.json, "w", encoding="utf-8") as fh:
                    fh.write(payload)
            sys.stdout.write(payload)
            return 0 if all(c["status"] == "pass" for c in report["checks"]) else 1

        if args.command == "classify":
            params = _parse_kv(args.params)
            report = run_suite("classify", params, args.degree_cap, args.seed)
            payload = report_to_json(report, args.timings)
            if args.json:
                with open(args.json, "w", encoding="utf-8") as fh:
                    fh.write(payload)
            sys.stdout.write(payload)
            return 0 if all(c["status"] == "pass" for c in report["checks"]) else 1

        if args.command == "twist":
            params = _parse_kv(args.params)
            kind = params.get("kind", "jplus")
            m = int(params["m"])
            if kind in ("jplus", "jminus"):
                n = int(params.get("n", 2))
                c = j_plus_cocycle(n, m) if kind == "jplus" else j_minus_cocycle(n, m)
            elif kind == "jq":
                c = jq_from_orientation(cartan_type(params.get("type", "A2")), m)
            else:
                raise ValueError(f"unknown twist kind {kind!r}")
            J = twist_from_cocycle(c)
            b = c.bicharacter()
            payload = json.dumps({
                "tool_version": __version__,
                "kind": kind,
                "m": m,
                "cocycle_exponents": [list(r) for r in c.matrix],
                "bicharacter_exponents": [list(r) for r in b.matrix],
                "counit_normalized": J.counit_sides_are_one(),
            }, indent=2, sort_keys=True) + "\n"
            if args.json:
                with open(args.json, "w", encoding="utf-8") as fh:
                    fh.write(payload)
            sys.stdout.write(payload)
            return 0

        if args.command == "solve-jq":
            params = _parse_kv(args.params)
            report = run_suite("jq-solver", params, args.degree_cap, args.seed)
            payload = report_to_json(report, args.timings)
            if args.json:
                with open(args.json, "w", encoding="utf-8") as fh:
                    fh.write(payload)
            sys.stdout.write(payload)
            return 0 if all(c["status"] == "pass" for c in report["checks"]) else 1
    except (ValueError, PresentationError, TwistError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
