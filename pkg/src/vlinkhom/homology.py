"""The chain complex of a diagram under a chosen theory, and its homology.

Chain groups live in homological degrees i = r(s) - n_minus.  The group at
degree i is the direct sum over states s with r(s) = i + n_minus of
V^(x)k(s), with states in lexicographic order, circles in canonical order
and decorations ordered with the unit before x.  Each cube edge contributes
(-1)^<s,t> times its elementary cobordism map, identity-padded over the
unaffected circles; d o d = 0 is asserted eagerly at build time because it
is the one global check on the twist convention.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import tqft
from ._linalg import matrix_rank
from .diagram import all_smoothings, cube_edges
from .errors import DSquaredNonzero, NotGraded
from .jones import LaurentPoly
from .tqft import ExactLinearMap, Merge, SingleCycle, Split, StateSpaceBasis


@dataclass(frozen=True)
class ChainGroup:
    degree: int
    states: tuple            # lexicographically sorted state strings
    bases: dict              # state -> StateSpaceBasis
    offsets: dict            # state -> first index of its block
    dim: int

    def label(self, index):
        state = None
        for s in self.states:
            if self.offsets[s] <= index:
                state = s
            else:
                break
        basis = self.bases[state]
        dec = basis.decoration(index - self.offsets[state])
        return state, "".join("x" if b else "1" for b in dec)


@dataclass(frozen=True)
class ChainComplex:
    diagram: object
    theory: object
    min_degree: int
    max_degree: int
    groups: dict             # degree -> ChainGroup
    differentials: dict      # degree -> ExactLinearMap C^i -> C^(i+1)
    smoothings: dict
    edges: tuple

    @property
    def degrees(self):
        return range(self.min_degree, self.max_degree + 1)

    def dims(self):
        return [self.groups[i].dim for i in self.degrees]


@dataclass(frozen=True)
class HomologyResult:
    betti: dict              # degree -> nonzero Betti number
    euler: int
    qtable: dict = None      # (degree, qdegree) -> dimension, graded runs only

    def total_rank(self):
        return sum(self.betti.values())


def _edge_cobordism(sd):
    if sd.kind == "merge":
        return Merge(twist_in=sd.twist_in, twist_out=sd.twist_out[0])
    if sd.kind == "split":
        return Split(twist_in=sd.twist_in[0], twist_out=sd.twist_out)
    return SingleCycle()


def _edge_map(th, sd, ss, st):
    """The full map V^(x)k(s) -> V^(x)k(t) of one cube edge (no sign)."""
    src_keys = ss.circle_keys()
    tgt_keys = st.circle_keys()
    src_basis = StateSpaceBasis(src_keys)
    tgt_basis = StateSpaceBasis(tgt_keys)
    in_pos = tuple(src_keys.index(k) for k in sd.bottom)
    out_pos = tuple(tgt_keys.index(k) for k in sd.top)
    spectators_src = [k for k in src_keys if k not in sd.bottom]
    spectators_tgt = [k for k in tgt_keys if k not in sd.top]
    assert spectators_src == spectators_tgt, \
        "unaffected circles must match across the edge"
    block = tqft.elementary_map(th, _edge_cobordism(sd))
    return tqft.tensor_extend(block, in_pos, src_basis, out_pos, tgt_basis)


def _flip_operator(th, basis, flipped_keys):
    """Tensor product of phi on the flipped factors, identity elsewhere."""
    out = ExactLinearMap.identity(th.field, basis.dim)
    for key in flipped_keys:
        pos = basis.position(key)
        out = tqft.tensor_extend(tqft.phi_matrix(th), pos, basis).compose(out)
    return out


def build_complex(d, th, anchor_flips=(), check=True):
    """Assemble the based chain complex of ``d`` under the theory ``th``.

    ``anchor_flips`` is a collection of (state, circle_key) pairs whose
    canonical orientation is reversed before building maps; the build is
    otherwise canonical.  Raises DSquaredNonzero if the differential fails
    to square to zero (which would signal a twist-convention bug).
    """
    F = th.field
    n, n_minus = d.n, d.n_minus
    smoothings = all_smoothings(d)
    flips = set()
    for state, key in anchor_flips:
        bits = state if isinstance(state, str) else "".join(str(b) for b in state)
        flips.add((bits, key))

    groups = {}
    for i in range(-n_minus, n - n_minus + 1):
        states = tuple(sorted(s for s, sm in smoothings.items() if sm.r == i + n_minus))
        bases, offsets, dim = {}, {}, 0
        for s in states:
            bases[s] = StateSpaceBasis(smoothings[s].circle_keys())
            offsets[s] = dim
            dim += bases[s].dim
        groups[i] = ChainGroup(i, states, bases, offsets, dim)

    edges = cube_edges(d, smoothings)
    entries_by_degree = {i: {} for i in range(-n_minus, n - n_minus)}
    minus_one = F.neg(F.one)
    for sd in edges:
        ss, st = smoothings[sd.from_state], smoothings[sd.to_state]
        i = ss.r - n_minus
        m = _edge_map(th, sd, ss, st)
        src_flips = [key for (state, key) in flips if state == sd.from_state
                     and key in ss.circle_keys()]
        tgt_flips = [key for (state, key) in flips if state == sd.to_state
                     and key in st.circle_keys()]
        if src_flips:
            m = m.compose(_flip_operator(th, StateSpaceBasis(ss.circle_keys()), src_flips))
        if tgt_flips:
            m = _flip_operator(th, StateSpaceBasis(st.circle_keys()), tgt_flips).compose(m)
        if sd.sign_exponent % 2:
            m = m.scale(minus_one)
        row0 = groups[i + 1].offsets[sd.to_state]
        col0 = groups[i].offsets[sd.from_state]
        acc = entries_by_degree[i]
        for (r, c), v in m.entries:
            key = (row0 + r, col0 + c)
            acc[key] = F.add(acc.get(key, F.zero), v)

    differentials = {
        i: ExactLinearMap.make(F, groups[i + 1].dim, groups[i].dim, acc)
        for i, acc in entries_by_degree.items()
    }

    complex_ = ChainComplex(d, th, -n_minus, n - n_minus, groups,
                            differentials, smoothings, tuple(edges))
    if check:
        _assert_d_squared_zero(complex_)
    return complex_


def _assert_d_squared_zero(c):
    for i in range(c.min_degree, c.max_degree - 1):
        prod = c.differentials[i + 1].compose(c.differentials[i])
        if not prod.is_zero():
            (r, col), v = prod.entries[0]
            src = c.groups[i].label(col)
            tgt = c.groups[i + 2].label(r)
            raise DSquaredNonzero(i, src, tgt, c.theory.field.to_str(v))


def homology(c):
    """Betti numbers by exact rank computation over the ground field."""
    ranks = {i: matrix_rank(c.differentials[i])
             for i in range(c.min_degree, c.max_degree)}
    betti = {}
    euler = 0
    for i in c.degrees:
        b = c.groups[i].dim - ranks.get(i, 0) - ranks.get(i - 1, 0)
        assert b >= 0
        if b:
            betti[i] = b
        euler += b if i % 2 == 0 else -b
    return HomologyResult(betti, euler)


# ---------------------------------------------------------------------------
# quantum grading (Manturov-type theories only)

def _qdegrees(c):
    """q-degree of every basis vector: sum of decoration degrees plus
    r(s) + n_plus - 2*n_minus, with deg(1) = 1 and deg(x) = -1."""
    d = c.diagram
    out = {}
    for i in c.degrees:
        grp = c.groups[i]
        degs = [0] * grp.dim
        for s in grp.states:
            shift = (i + d.n_minus) + d.n_plus - 2 * d.n_minus
            basis = grp.bases[s]
            for local in range(basis.dim):
                dec = basis.decoration(local)
                degs[grp.offsets[s] + local] = (basis.k - 2 * sum(dec)) + shift
        out[i] = degs
    return out


def graded_homology(c):
    """Homology with the quantum grading; requires a homogeneous theory.

    The theory must have h = t = 0 and theta = 0 (the Manturov preset);
    the differentials are additionally checked to be homogeneous of
    q-degree zero.
    """
    th = c.theory
    F = th.field
    if not (F.is_zero(th.h) and F.is_zero(th.t)
            and F.is_zero(th.lam) and F.is_zero(th.mu)):
        raise NotGraded("needs h = t = 0 and theta = 0 (preset manturov/f2_row1)")
    qdeg = _qdegrees(c)
    for i in range(c.min_degree, c.max_degree):
        for (r, col), _ in c.differentials[i].entries:
            if qdeg[i + 1][r] != qdeg[i][col]:
                raise NotGraded(
                    f"differential entry {c.groups[i].label(col)} -> "
                    f"{c.groups[i + 1].label(r)} changes q-degree")

    dims = {}
    index_in_layer = {}
    for i in c.degrees:
        for idx, q in enumerate(qdeg[i]):
            layer = dims.setdefault((i, q), 0)
            index_in_layer[(i, idx)] = layer
            dims[(i, q)] = layer + 1

    ranks = {}
    for i in range(c.min_degree, c.max_degree):
        per_q = {}
        for (r, col), v in c.differentials[i].entries:
            q = qdeg[i][col]
            per_q.setdefault(q, {})[(index_in_layer[(i + 1, r)],
                                     index_in_layer[(i, col)])] = v
        for q, ent in per_q.items():
            rows = 1 + max(rc[0] for rc in ent)
            cols = 1 + max(rc[1] for rc in ent)
            ranks[(i, q)] = matrix_rank(ExactLinearMap.make(F, rows, cols, ent))

    qtable = {}
    betti = {}
    for (i, q), dim in sorted(dims.items()):
        b = dim - ranks.get((i, q), 0) - ranks.get((i - 1, q), 0)
        assert b >= 0
        if b:
            qtable[(i, q)] = b
            betti[i] = betti.get(i, 0) + b
    euler = sum(b if i % 2 == 0 else -b for i, b in betti.items())
    return HomologyResult(betti, euler, qtable)


def graded_euler_poly(result):
    """The graded Euler characteristic as a Laurent polynomial in q."""
    terms = {}
    for (i, q), dim in (result.qtable or {}).items():
        terms[q] = terms.get(q, 0) + (dim if i % 2 == 0 else -dim)
    return LaurentPoly.make(terms)


def homology_of(d, th, graded=False, anchor_flips=()):
    """Convenience: build the complex and take (optionally graded) homology."""
    c = build_complex(d, th, anchor_flips=anchor_flips)
    return graded_homology(c) if graded else homology(c)


def betti_with_reversed_anchor(d, th, selector):
    """Homology with one circle's canonical orientation reversed.

    ``selector`` is a (state, circle_key) pair naming the circle whose
    reference orientation is flipped before the maps are built.
    """
    return homology_of(d, th, anchor_flips=(selector,))
