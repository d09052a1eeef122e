"""Evaluate parsed expressions against the exact algebra.

Values carry their kind: scalar (surd ring), coordinate octonion, abstract
matrix (optionally with an exact square-root prefactor, used by the vacuum
constructor), symbolic fermion matrix, fermion polynomial, or a pair from
split3.  The root prefactor keeps norm-type results exact: a matrix tagged
with scale2 = s stands for sqrt(s) times the stored matrix, and quadratic
operations (norm2, star of two tagged values) stay in the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from gmpy2 import isqrt, mpq

from ..scalar_ring import CoeffElem, fmt_q
from ..octonion_core import (OctCoord, SIGMA, Zorn, associator, quad_trace,
                             sigma_coordinates, split3)
from ..field_theory import U0_DIRECTION
from ..fermion_symbolic import (BilinearCombo, FermionPoly, doublet_bar_matrix,
                                doublet_matrix, promote_zorn)
from .expr import (Atom, Call, Chain, E_DOMAIN, E_TYPE, ExprError, Node,
                   ScalarLit, ScalarMul, Star, parse, scalar_value)


@dataclass
class Value:
    kind: str                     # scalar | coord | zorn | ferm | fpoly | pair
    data: object = None
    scale2: mpq = mpq(1)          # zorn only: squared root-prefactor
    parts: Optional[tuple] = None # pair only

    # -- rendering -----------------------------------------------------------

    def render(self) -> str:
        if self.kind == "scalar":
            return str(self.data)
        if self.kind == "coord":
            return str(self.data)
        if self.kind == "zorn":
            body = _render_zorn(self.data)
            if self.scale2 == 1:
                return body
            return "√(%s)·[%s]" % (fmt_q(self.scale2), body)
        if self.kind == "fpoly":
            return _render_fpoly(self.data)
        if self.kind == "ferm":
            return str(self.data)
        if self.kind == "pair":
            return "assoc = %s; nonassoc = %s" % (self.parts[0].render(),
                                                  self.parts[1].render())
        raise TypeError(self.kind)

    def json_data(self) -> dict:
        out = {"type": self.kind, "text": self.render()}
        if self.kind == "zorn" and self.scale2 != 1:
            out["scale2"] = fmt_q(self.scale2)
        if self.kind == "pair":
            out["assoc"] = self.parts[0].render()
            out["nonassoc"] = self.parts[1].render()
        if self.kind == "fpoly":
            p = self.data
            try:
                out["bilinears"] = BilinearCombo.from_poly(p).records()
            except ValueError:
                pass
        return out


def _render_zorn(u: Zorn) -> str:
    if u.is_zero():
        return "0"
    if u.octonionic():
        coords = sigma_coordinates(u)
        parts = []
        for k, x in enumerate(coords):
            if x.is_zero():
                continue
            s = str(x)
            if s == "1":
                parts.append("S%d" % k)
            elif s == "-1":
                parts.append("-S%d" % k)
            else:
                if " " in s:
                    s = "(%s)" % s
                parts.append("%s·S%d" % (s, k))
        out = parts[0]
        for p in parts[1:]:
            out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
        return out
    return str(u)


def _render_fpoly(p: FermionPoly) -> str:
    try:
        return str(BilinearCombo.from_poly(p))
    except ValueError:
        sc = p.scalar_part()
        if p == FermionPoly.const(sc):
            return str(sc)
        return str(p)


def _fail(node: Node, code: str, msg: str):
    raise ExprError(code, msg, node.line, node.col)


def _exact_sqrt(q: mpq) -> Optional[mpq]:
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return mpq(rn, rd)
    return None


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def evaluate(node: Node) -> Value:
    if isinstance(node, ScalarLit):
        return Value("scalar", scalar_value(node.text))
    if isinstance(node, Atom):
        return _atom(node)
    if isinstance(node, ScalarMul):
        s = evaluate(node.scalar)
        v = evaluate(node.factor)
        return _scale(node, s.data, v)
    if isinstance(node, Star):
        return _star(node, evaluate(node.lhs), evaluate(node.rhs))
    if isinstance(node, Chain):
        acc = evaluate(node.items[0][1])
        for sign, item in node.items[1:]:
            acc = _add(node, acc, evaluate(item), sign)
        return acc
    if isinstance(node, Call):
        return _call(node)
    raise TypeError("unknown node %r" % (node,))


def _atom(node: Atom) -> Value:
    name = node.name
    if name.startswith("e"):
        return Value("coord", OctCoord.generator(int(name[1:])))
    if name.startswith("S"):
        return Value("zorn", SIGMA[int(name[1:])])
    if name == "L":
        return Value("ferm", doublet_matrix())
    if name == "Lbar":
        return Value("ferm", doublet_bar_matrix())
    raise AssertionError(name)


def _scale(node: Node, c: CoeffElem, v: Value) -> Value:
    if v.kind == "scalar":
        return Value("scalar", c * v.data)
    if v.kind == "coord":
        return Value("coord", v.data.scale(c))
    if v.kind == "zorn":
        return Value("zorn", v.data.scale(c), v.scale2)
    if v.kind == "ferm":
        return Value("ferm", v.data.scale(FermionPoly.const(c)))
    if v.kind == "fpoly":
        return Value("fpoly", v.data * c)
    _fail(node, E_TYPE, "cannot scale a %s value" % v.kind)


def _star(node: Node, a: Value, b: Value) -> Value:
    if a.kind == "scalar" and b.kind == "scalar":
        return Value("scalar", a.data * b.data)
    if a.kind == "scalar":
        return _scale(node, a.data, b)
    if b.kind == "scalar":
        return _scale(node, b.data, a)
    if a.kind == "coord" and b.kind == "coord":
        return Value("coord", a.data * b.data)
    if a.kind == "zorn" and b.kind == "zorn":
        return Value("zorn", a.data * b.data, a.scale2 * b.scale2)
    if a.kind in ("zorn", "ferm") and b.kind in ("zorn", "ferm"):
        def lift(v: Value):
            if v.kind == "ferm":
                return v.data
            u = promote_zorn(v.data)
            if v.scale2 != 1:
                r = _exact_sqrt(v.scale2)
                if r is None:
                    _fail(node, E_DOMAIN,
                          "root-scaled matrix cannot enter a symbolic product")
                u = u.scale(FermionPoly.const(CoeffElem.from_rational(r)))
            return u
        return Value("ferm", lift(a) * lift(b))
    _fail(node, E_TYPE, "cannot star %s and %s values" % (a.kind, b.kind))


def _add(node: Node, a: Value, b: Value, sign: str) -> Value:
    if a.kind != b.kind:
        _fail(node, E_TYPE, "cannot add %s and %s values" % (a.kind, b.kind))
    if a.kind == "zorn" and a.scale2 != b.scale2:
        _fail(node, E_TYPE, "cannot add matrices with different root prefactors")
    if a.kind == "pair":
        _fail(node, E_TYPE, "cannot add split results")
    d = b.data if sign == "+" else -b.data
    if a.kind == "scalar":
        return Value("scalar", a.data + d)
    if a.kind == "coord":
        return Value("coord", a.data + d)
    if a.kind == "zorn":
        return Value("zorn", a.data + d, a.scale2)
    if a.kind == "ferm":
        return Value("ferm", a.data + d)
    if a.kind == "fpoly":
        return Value("fpoly", a.data + d)
    _fail(node, E_TYPE, "cannot add %s values" % a.kind)


def _call(node: Call) -> Value:
    fn = node.fn
    if fn == "Psi0":
        args = [evaluate(a) for a in node.args]
        vals = []
        for a, v in zip(node.args, args):
            if v.kind != "scalar":
                _fail(a, E_TYPE, "Psi0 takes rational arguments")
            r = v.data.as_rational()
            if r is None:
                _fail(a, E_TYPE, "Psi0 takes rational arguments")
            vals.append(r)
        m, f = vals
        if m <= 0 or f <= 0:
            _fail(node, E_DOMAIN, "Psi0 needs positive parameters")
        return Value("zorn", U0_DIRECTION, m * m / (2 * f))
    if fn == "eps4":
        idx = []
        for a in node.args:
            v = evaluate(a)
            r = v.data.as_rational() if v.kind == "scalar" else None
            if r is None or r.denominator != 1 or not 0 <= r <= 7:
                _fail(a, E_TYPE, "eps4 takes indices 0..7")
            idx.append(int(r))
        return Value("scalar", CoeffElem.from_rational(quad_trace(*idx)))
    if fn == "conj":
        v = evaluate(node.args[0])
        if v.kind in ("scalar",):
            return Value("scalar", v.data.conj())
        if v.kind == "coord":
            return Value("coord", v.data.conj())
        if v.kind == "zorn":
            return Value("zorn", v.data.conj(), v.scale2)
        if v.kind == "ferm":
            return Value("ferm", v.data.conj())
        if v.kind == "fpoly":
            return Value("fpoly", v.data.conj())
        _fail(node, E_TYPE, "cannot conjugate a %s value" % v.kind)
    if fn == "tr":
        v = evaluate(node.args[0])
        if v.kind == "zorn":
            t = v.data.trace()
            if v.scale2 != 1:
                r = _exact_sqrt(v.scale2)
                if r is None:
                    _fail(node, E_DOMAIN,
                          "trace of this root-scaled matrix is irrational; "
                          "use norm2 or a star product instead")
                t = t * r
            return Value("scalar", t)
        if v.kind == "ferm":
            return Value("fpoly", v.data.trace())
        _fail(node, E_TYPE, "tr needs a matrix value, got %s" % v.kind)
    if fn == "norm2":
        v = evaluate(node.args[0])
        if v.kind == "zorn":
            n = (v.data.conj() * v.data).trace()
            return Value("scalar", n * v.scale2)
        if v.kind == "coord":
            # octonion norm via conjugate product; result is the e0 part
            prod = v.data.conj() * v.data
            return Value("scalar", prod.alpha[0])
        _fail(node, E_TYPE, "norm2 needs a matrix or coordinate value")
    if fn in ("assoc", "split3"):
        vals = [evaluate(a) for a in node.args]
        kinds = {v.kind for v in vals}
        if kinds == {"coord"}:
            xs = [v.data for v in vals]
        elif kinds == {"zorn"}:
            if any(v.scale2 != 1 for v in vals):
                _fail(node, E_DOMAIN, "associator arguments must be unscaled")
            xs = [v.data for v in vals]
        else:
            _fail(node, E_TYPE,
                  "%s needs three values of one octonion kind" % fn)
        if fn == "assoc":
            return Value(vals[0].kind, associator(*xs))
        sa, sn = split3(*xs)
        return Value("pair", parts=(Value(vals[0].kind, sa),
                                    Value(vals[0].kind, sn)))
    raise AssertionError(fn)


def eval_source(src: str) -> Value:
    return evaluate(parse(src))
