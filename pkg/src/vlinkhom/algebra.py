"""Rank-two extended Frobenius algebras over an exact field.

The algebra is V = R{1, x} with

    x*x = h*x + t*1,          h = beta - a*lambda^2 - a*mu^2*t,
    eps(1) = 0, eps(x) = a,   i(1) = 1,
    Delta(1) = f*(1(x)x + x(x)1) - h*f*1(x)1,
    Delta(x) = f*x(x)x + f*t*1(x)1,            f = a^(-1),
    theta = lambda*1 + mu*x,
    phi(1) = 1, phi(x) = beta*1 + x,

subject to the defining constraints

    (eq1)  mu*beta = 0 and lambda*beta = 0,
    (eq2)  2*a*lambda*mu - a^2*mu^2*lambda^2 - a^2*mu^4*t = 2.

Every operation takes the theory explicitly; elements are immutable.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field

from .errors import ConstraintViolated, NotInvertible, UnknownPreset
from .fields import GF2, QQ


# ---------------------------------------------------------------------------
# elements

@dataclass(frozen=True)
class AlgebraElement:
    """An element c1*1 + cx*x of V, with exact coefficients."""

    field: object
    c1: object
    cx: object

    def __add__(self, other):
        F = self.field
        return AlgebraElement(F, F.add(self.c1, other.c1), F.add(self.cx, other.cx))

    def __sub__(self, other):
        F = self.field
        return AlgebraElement(F, F.sub(self.c1, other.c1), F.sub(self.cx, other.cx))

    def scale(self, scalar):
        F = self.field
        return AlgebraElement(F, F.mul(scalar, self.c1), F.mul(scalar, self.cx))

    def is_zero(self):
        return self.field.is_zero(self.c1) and self.field.is_zero(self.cx)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        F = self.field
        return (F.is_zero(F.sub(self.c1, other.c1))
                and F.is_zero(F.sub(self.cx, other.cx)))

    def __hash__(self):
        return hash((self.field, self.c1, self.cx))

    def __repr__(self):
        F = self.field
        parts = []
        if not F.is_zero(self.c1):
            parts.append(f"{F.to_str(self.c1)}*1")
        if not F.is_zero(self.cx):
            parts.append(f"{F.to_str(self.cx)}*x")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class TensorElement:
    """An element of V^(x)rank, stored as a map from index tuples to scalars.

    Index 0 stands for the basis vector 1 and index 1 for x.  Zero
    coefficients are never stored; rank-0 tensors are scalars.
    """

    field: object
    rank: int
    terms: tuple  # sorted tuple of (index-tuple, scalar)

    @staticmethod
    def make(field, rank, term_map):
        terms = tuple(sorted((idx, c) for idx, c in term_map.items()
                             if not field.is_zero(c)))
        return TensorElement(field, rank, terms)

    def term_map(self):
        return dict(self.terms)

    def __add__(self, other):
        assert self.rank == other.rank
        F = self.field
        out = self.term_map()
        for idx, c in other.terms:
            out[idx] = F.add(out.get(idx, F.zero), c)
        return TensorElement.make(F, self.rank, out)

    def scale(self, scalar):
        F = self.field
        return TensorElement.make(
            F, self.rank, {idx: F.mul(scalar, c) for idx, c in self.terms})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, self.terms))

    def __repr__(self):
        if not self.terms:
            return "0"
        names = {0: "1", 1: "x"}
        bits = []
        for idx, c in self.terms:
            word = "(x)".join(names[i] for i in idx) if idx else "scalar"
            coeff = self.field.to_str(c)
            bits.append(word if coeff == "1" else f"{coeff}*{word}")
        return " + ".join(bits)


def tensor_of(*elements):
    """Tensor product of AlgebraElements, as a TensorElement."""
    F = elements[0].field
    out = {(): F.one}
    for e in elements:
        nxt = {}
        for idx, c in out.items():
            for i, coeff in ((0, e.c1), (1, e.cx)):
                if F.is_zero(coeff):
                    continue
                key = idx + (i,)
                nxt[key] = F.add(nxt.get(key, F.zero), F.mul(c, coeff))
        out = nxt
    return TensorElement.make(F, len(elements), out)


# ---------------------------------------------------------------------------
# theories

@dataclass(frozen=True)
class TheoryParams:
    """The validated tuple (a, t, lambda, mu, beta) with derived f and h."""

    field: object
    a: object
    t: object
    lam: object
    mu: object
    beta: object
    f: object = dc_field(repr=False, default=None)
    h: object = dc_field(repr=False, default=None)
    name: str = dc_field(default="", compare=False)

    def basis(self):
        return (unit(self), x_element(self))

    def describe(self):
        F = self.field
        vals = {k: F.to_str(getattr(self, k)) for k in ("a", "t", "lam", "mu", "beta")}
        return {"field": F.name, "params": vals, **({"preset": self.name} if self.name else {})}


def _derive(field, a, t, lam, mu, beta):
    try:
        f = field.inv(a)
    except NotInvertible:
        raise NotInvertible("a", a) from None
    # h = beta - a*lam^2 - a*mu^2*t
    h = field.sub(field.sub(beta, field.mul(a, field.mul(lam, lam))),
                  field.mul(a, field.mul(field.mul(mu, mu), t)))
    return f, h


def constraint_residuals(field, a, t, lam, mu, beta):
    """Residuals of the two defining equations (all zero for a valid theory)."""
    F = field
    mu2 = F.mul(mu, mu)
    a2 = F.mul(a, a)
    lhs = F.sub(
        F.sub(F.mul(F.from_int(2), F.mul(a, F.mul(lam, mu))),
              F.mul(a2, F.mul(mu2, F.mul(lam, lam)))),
        F.mul(a2, F.mul(F.mul(mu2, mu2), t)))
    return {
        "eq1": (F.mul(mu, beta), F.mul(lam, beta)),
        "eq2": F.sub(lhs, F.from_int(2)),
    }


def theory_from_params(a, t, lam, mu, beta, field=None, name=""):
    """Build and validate a theory from the full 5-tuple of parameters."""
    F = field if field is not None else QQ
    f, h = _derive(F, a, t, lam, mu, beta)
    res = constraint_residuals(F, a, t, lam, mu, beta)
    r1a, r1b = res["eq1"]
    if not (F.is_zero(r1a) and F.is_zero(r1b)):
        raise ConstraintViolated("eq1", r1a if not F.is_zero(r1a) else r1b)
    if not F.is_zero(res["eq2"]):
        raise ConstraintViolated("eq2", res["eq2"])
    return TheoryParams(F, a, t, lam, mu, beta, f, h, name)


def theory_from_triple(a, lam, mu, field=None, name=""):
    """Build the theory with beta = 0, solving eq2 for t.

    Requires a and mu invertible; works over any field.
    """
    F = field if field is not None else QQ
    try:
        F.inv(a)
    except NotInvertible:
        raise NotInvertible("a", a) from None
    try:
        mu_inv = F.inv(mu)
    except NotInvertible:
        raise NotInvertible("mu", mu) from None
    a_inv = F.inv(a)
    # t = (2*a*lam*mu - a^2*lam^2*mu^2 - 2) / (a^2*mu^4)
    num = F.sub(
        F.sub(F.mul(F.from_int(2), F.mul(a, F.mul(lam, mu))),
              F.mul(F.mul(a, a), F.mul(F.mul(lam, lam), F.mul(mu, mu)))),
        F.from_int(2))
    den_inv = F.mul(F.mul(a_inv, a_inv), F.mul(F.mul(mu_inv, mu_inv),
                                               F.mul(mu_inv, mu_inv)))
    t = F.mul(num, den_inv)
    return theory_from_params(a, t, lam, F.mul(mu, F.one), F.zero, field=F, name=name)


# the eight GF(2) theories, rows of (lambda, mu, t, beta)
_F2_TABLE = {
    "f2_row1": (0, 0, 0, 0),
    "f2_row2": (0, 0, 0, 1),
    "f2_row3": (1, 0, 0, 0),
    "f2_row4": (0, 0, 1, 0),
    "f2_row5": (0, 0, 1, 1),
    "f2_row6": (1, 0, 1, 0),
    "f2_row7": (0, 1, 0, 0),
    "f2_row8": (1, 1, 1, 0),
}

PRESET_NAMES = tuple(_F2_TABLE) + ("manturov",)


def preset(name):
    """Look up one of the tabulated GF(2) theories by its stable name."""
    key = name.strip().lower()
    if key == "manturov":
        key = "f2_row1"
        name = "manturov"
    if key not in _F2_TABLE:
        raise UnknownPreset(name)
    lam, mu, t, beta = _F2_TABLE[key]
    return theory_from_params(1, t, lam, mu, beta, field=GF2, name=name.strip().lower())


def all_presets():
    return [preset(n) for n in _F2_TABLE]


# ---------------------------------------------------------------------------
# structure maps

def unit(th):
    return AlgebraElement(th.field, th.field.one, th.field.zero)


def x_element(th):
    return AlgebraElement(th.field, th.field.zero, th.field.one)


def multiply(th, u, v):
    """Bilinear product: 1 is the unit and x*x = h*x + t*1."""
    F = th.field
    xx = F.mul(u.cx, v.cx)
    c1 = F.add(F.mul(u.c1, v.c1), F.mul(th.t, xx))
    cx = F.add(F.add(F.mul(u.c1, v.cx), F.mul(u.cx, v.c1)), F.mul(th.h, xx))
    return AlgebraElement(F, c1, cx)


def comultiply(th, v):
    """Coproduct as a rank-2 tensor."""
    F = th.field
    terms = {}

    def put(idx, c):
        if not F.is_zero(c):
            terms[idx] = F.add(terms.get(idx, F.zero), c)

    # Delta(1) = f(1(x)x + x(x)1) - h f 1(x)1
    put((0, 1), F.mul(v.c1, th.f))
    put((1, 0), F.mul(v.c1, th.f))
    put((0, 0), F.neg(F.mul(v.c1, F.mul(th.h, th.f))))
    # Delta(x) = f x(x)x + f t 1(x)1
    put((1, 1), F.mul(v.cx, th.f))
    put((0, 0), F.mul(v.cx, F.mul(th.f, th.t)))
    return TensorElement.make(F, 2, terms)


def counit(th, v):
    """eps(c1*1 + cx*x) = cx * a."""
    return th.field.mul(v.cx, th.a)


def phi(th, v):
    """The flip involution: 1 -> 1, x -> beta*1 + x."""
    F = th.field
    return AlgebraElement(F, F.add(v.c1, F.mul(th.beta, v.cx)), v.cx)


def theta(th):
    """The crosscap element lambda*1 + mu*x."""
    return AlgebraElement(th.field, th.lam, th.mu)


def handle_element(th):
    """H = m(Delta(1)), the value of adding a handle: 2f*x - h*f*1."""
    return multiply_tensor2(th, comultiply(th, unit(th)))


def multiply_tensor2(th, tensor):
    """Apply m to a rank-2 tensor."""
    assert tensor.rank == 2
    F = th.field
    basis = (unit(th), x_element(th))
    out = AlgebraElement(F, F.zero, F.zero)
    for (i, j), c in tensor.terms:
        out = out + multiply(th, basis[i], basis[j]).scale(c)
    return out


def tensor_apply(tensor, position, linear_map):
    """Apply a map V -> V (given on basis elements) to one tensor factor."""
    F = tensor.field
    out = {}
    for idx, c in tensor.terms:
        image = linear_map[idx[position]]
        for k, coeff in ((0, image.c1), (1, image.cx)):
            if F.is_zero(coeff):
                continue
            key = idx[:position] + (k,) + idx[position + 1:]
            out[key] = F.add(out.get(key, F.zero), F.mul(c, coeff))
    return TensorElement.make(F, tensor.rank, out)


def phi_on_factor(th, tensor, position):
    return tensor_apply(tensor, position, (phi(th, unit(th)), phi(th, x_element(th))))


def element_power(th, v, n):
    out = unit(th)
    for _ in range(n):
        out = multiply(th, out, v)
    return out


# ---------------------------------------------------------------------------
# verification

@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    witness: str = ""


@dataclass(frozen=True)
class AxiomReport:
    checks: tuple

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def __repr__(self):
        lines = [f"[{'ok' if c.passed else 'FAIL'}] {c.name}"
                 + (f"  ({c.witness})" if c.witness and not c.passed else "")
                 for c in self.checks]
        return "\n".join(lines)


def verify_axioms(th):
    """Check the extended-Frobenius axioms by evaluation on the basis.

    Failures are recorded with witnesses instead of raising, so that
    classification experiments get full diagnostics.
    """
    F = th.field
    one, x = th.basis()
    basis = (one, x)
    th_el = theta(th)
    checks = []

    def check(name, ok, witness=""):
        checks.append(AxiomCheck(name, bool(ok), witness))

    for v in basis:
        w = phi(th, phi(th, v))
        if w != v:
            check("phi_involution", False, f"phi(phi({v})) = {w}")
            break
    else:
        check("phi_involution", True)

    bad = None
    for u, v in itertools.product(basis, repeat=2):
        lhs = phi(th, multiply(th, u, v))
        rhs = multiply(th, phi(th, u), phi(th, v))
        if lhs != rhs:
            bad = f"phi({u}*{v}): {lhs} != {rhs}"
            break
    check("phi_product", bad is None, bad or "")

    bad = None
    for v in basis:
        lhs = phi_on_factor(th, phi_on_factor(th, comultiply(th, v), 0), 1)
        rhs = comultiply(th, phi(th, v))
        if lhs != rhs:
            bad = f"(phi(x)phi)Delta({v}) = {lhs} != Delta(phi) = {rhs}"
            break
    check("phi_coproduct", bad is None, bad or "")

    bad = None
    for v in basis:
        if not F.is_zero(F.sub(counit(th, phi(th, v)), counit(th, v))):
            bad = f"eps(phi({v})) != eps({v})"
            break
    check("phi_counit", bad is None, bad or "")

    check("phi_unit", phi(th, one) == one, "phi(1) != 1")

    bad = None
    for v in basis:
        tv = multiply(th, th_el, v)
        if phi(th, tv) != tv:
            bad = f"phi(theta*{v}) = {phi(th, tv)} != {tv}"
            break
    check("extended_axiom_theta", bad is None, bad or "")

    klein = multiply_tensor2(th, phi_on_factor(th, comultiply(th, one), 0))
    theta_sq = multiply(th, th_el, th_el)
    check("extended_axiom_klein", klein == theta_sq,
          f"m(phi(x)Id)Delta(1) = {klein} != theta^2 = {theta_sq}")

    bad = None
    for v in basis:
        lhs = multiply_tensor2(th, phi_on_factor(th, comultiply(th, v), 0))
        rhs = multiply(th, theta_sq, v)
        if lhs != rhs:
            bad = f"m(phi(x)Id)Delta({v}) = {lhs} != theta^2*{v} = {rhs}"
            break
    check("theta_square_action", bad is None, bad or "")

    cube_lhs = multiply_tensor2(th, comultiply(th, th_el))
    cube_rhs = element_power(th, th_el, 3)
    check("theta_cube", cube_lhs == cube_rhs,
          f"m(Delta(theta)) = {cube_lhs} != theta^3 = {cube_rhs}")

    res = constraint_residuals(F, th.a, th.t, th.lam, th.mu, th.beta)
    r1a, r1b = res["eq1"]
    check("eq1", F.is_zero(r1a) and F.is_zero(r1b),
          f"mu*beta = {F.to_str(r1a)}, lambda*beta = {F.to_str(r1b)}")
    check("eq2", F.is_zero(res["eq2"]), f"residual {F.to_str(res['eq2'])}")

    # Gram matrix [[eps(1*1), eps(1*x)], [eps(x*1), eps(x*x)]]; det = -a^2
    g = [[counit(th, multiply(th, u, v)) for v in basis] for u in basis]
    det = F.sub(F.mul(g[0][0], g[1][1]), F.mul(g[0][1], g[1][0]))
    check("counit_nondegenerate", not F.is_zero(det),
          f"Gram determinant {F.to_str(det)}")

    check("aspherical", F.is_zero(counit(th, one)),
          f"eps(i(1)) = {F.to_str(counit(th, one))}")

    return AxiomReport(tuple(checks))


def four_tube_sides(delta1):
    """The two rank-4 tensors compared by the 4-Tu identity.

    Writing Delta(1) = sum a'(x)a'', the identity is

        sum a'(x)a''(x)1(x)1 + sum 1(x)1(x)a'(x)a''
          = sum a'(x)1(x)a''(x)1 + sum 1(x)a'(x)1(x)a''.
    """
    F = delta1.field

    def embed(p, q):
        terms = {}
        for (i, j), c in delta1.terms:
            idx = [0, 0, 0, 0]
            idx[p], idx[q] = i, j
            key = tuple(idx)
            terms[key] = F.add(terms.get(key, F.zero), c)
        return TensorElement.make(F, 4, terms)

    lhs = embed(0, 1) + embed(2, 3)
    rhs = embed(0, 2) + embed(1, 3)
    return lhs, rhs


def verify_4tu(th):
    """Check the 4-Tu relation for this theory; returns (passed, witness)."""
    lhs, rhs = four_tube_sides(comultiply(th, unit(th)))
    if lhs == rhs:
        return True, ""
    diff = lhs + rhs.scale(th.field.neg(th.field.one))
    return False, f"lhs - rhs = {diff}"


# ---------------------------------------------------------------------------
# sampling helpers (used by tests and the verification harness)

def random_rational_triples(count, seed, bound=6):
    """Deterministic stream of (a, lam, mu) over QQ with a, mu nonzero."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a = rng.randint(-bound, bound)
        lam = rng.randint(-bound, bound)
        mu = rng.randint(-bound, bound)
        if a == 0 or mu == 0:
            continue
        out.append((QQ.from_int(a), QQ.from_int(lam), QQ.from_int(mu)))
    return out
