"""Evaluation rules of the unoriented TQFT on elementary cobordisms.

Orientable pieces evaluate through the Frobenius algebra, with the flip
involution inserted wherever a boundary identification disagrees with the
reference orientation of its circle (the twist bits).  The nonorientable
one-circle-to-one-circle piece acts by multiplication with the crosscap
element theta; by the axiom phi(theta*v) = theta*v this needs no twist data.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import algebra
from .errors import DimensionMismatch


# ---------------------------------------------------------------------------
# sparse exact matrices

@dataclass(frozen=True)
class ExactLinearMap:
    """A linear map stored as a sparse {(row, col): scalar} table."""

    field: object
    nrows: int
    ncols: int
    entries: tuple  # sorted tuple of ((row, col), scalar), zeros omitted

    @staticmethod
    def make(field, nrows, ncols, entry_map):
        entries = tuple(sorted((rc, v) for rc, v in entry_map.items()
                               if not field.is_zero(v)))
        return ExactLinearMap(field, nrows, ncols, entries)

    @staticmethod
    def identity(field, n):
        return ExactLinearMap.make(field, n, n, {(i, i): field.one for i in range(n)})

    @staticmethod
    def zero(field, nrows, ncols):
        return ExactLinearMap(field, nrows, ncols, ())

    @staticmethod
    def from_columns(field, nrows, columns):
        """Build from a list of {row: value} dicts, one per column."""
        ent = {}
        for c, col in enumerate(columns):
            for r, v in col.items():
                ent[(r, c)] = v
        return ExactLinearMap.make(field, nrows, len(columns), ent)

    def entry_map(self):
        return dict(self.entries)

    def columns(self):
        cols = [dict() for _ in range(self.ncols)]
        for (r, c), v in self.entries:
            cols[c][r] = v
        return cols

    def compose(self, other):
        """self o other (apply ``other`` first)."""
        if self.ncols != other.nrows:
            raise DimensionMismatch(
                f"compose: {self.nrows}x{self.ncols} after {other.nrows}x{other.ncols}")
        F = self.field
        rows_of = {}
        for (r, c), v in self.entries:
            rows_of.setdefault(c, []).append((r, v))
        out = {}
        for (mid, c), v in other.entries:
            for r, w in rows_of.get(mid, ()):
                key = (r, c)
                out[key] = F.add(out.get(key, F.zero), F.mul(w, v))
        return ExactLinearMap.make(F, self.nrows, other.ncols, out)

    def __add__(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("add: shapes differ")
        F = self.field
        out = self.entry_map()
        for rc, v in other.entries:
            out[rc] = F.add(out.get(rc, F.zero), v)
        return ExactLinearMap.make(F, self.nrows, self.ncols, out)

    def scale(self, scalar):
        F = self.field
        return ExactLinearMap.make(
            F, self.nrows, self.ncols,
            {rc: F.mul(scalar, v) for rc, v in self.entries})

    def kron(self, other):
        """Tensor product of maps (self on the first factor)."""
        F = self.field
        out = {}
        for (r1, c1), v1 in self.entries:
            for (r2, c2), v2 in other.entries:
                out[(r1 * other.nrows + r2, c1 * other.ncols + c2)] = F.mul(v1, v2)
        return ExactLinearMap.make(F, self.nrows * other.nrows,
                                   self.ncols * other.ncols, out)

    def apply(self, column):
        """Apply to a sparse column vector {index: value}."""
        F = self.field
        rows_of = {}
        for (r, c), v in self.entries:
            rows_of.setdefault(c, []).append((r, v))
        out = {}
        for c, v in column.items():
            for r, w in rows_of.get(c, ()):
                out[r] = F.add(out.get(r, F.zero), F.mul(w, v))
        return {r: v for r, v in out.items() if not F.is_zero(v)}

    def is_zero(self):
        return not self.entries

    def to_dense(self):
        F = self.field
        rows = [[F.zero] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries:
            rows[r][c] = v
        return rows


def compose(*maps):
    """compose(f, g, h) = f o g o h."""
    out = maps[0]
    for m in maps[1:]:
        out = out.compose(m)
    return out


# ---------------------------------------------------------------------------
# state spaces

@dataclass(frozen=True)
class StateSpaceBasis:
    """V^(x)k indexed by decorations of an ordered tuple of circles.

    A basis vector assigns 0 (the unit) or 1 (the element x) to every
    circle; indices are big-endian in the circle order.
    """

    circles: tuple

    @property
    def k(self):
        return len(self.circles)

    @property
    def dim(self):
        return 1 << len(self.circles)

    def index_of(self, decoration):
        idx = 0
        for d in decoration:
            idx = (idx << 1) | d
        return idx

    def decoration(self, index):
        k = len(self.circles)
        return tuple((index >> (k - 1 - i)) & 1 for i in range(k))

    def position(self, circle_id):
        return self.circles.index(circle_id)


def tensor_extend(block, position, basis, out_position=None, out_basis=None):
    """Pad a block map with identities on the unaffected tensor factors.

    ``position`` lists the domain factors consumed by ``block`` (an int is
    treated as a single factor); ``out_position``/``out_basis`` give the
    produced factors in the codomain, defaulting to the same factors of the
    same basis.  Unaffected factors are matched up in order.
    """
    in_pos = (position,) if isinstance(position, int) else tuple(position)
    out_basis = out_basis if out_basis is not None else basis
    if out_position is None:
        out_pos = in_pos
    else:
        out_pos = (out_position,) if isinstance(out_position, int) else tuple(out_position)
    if block.ncols != 1 << len(in_pos) or block.nrows != 1 << len(out_pos):
        raise DimensionMismatch("tensor_extend: block shape does not match positions")
    spectators_in = [p for p in range(basis.k) if p not in in_pos]
    spectators_out = [p for p in range(out_basis.k) if p not in out_pos]
    if len(spectators_in) != len(spectators_out):
        raise DimensionMismatch("tensor_extend: spectator factor counts differ")

    F = block.field
    out = {}
    n_spec = len(spectators_in)
    for spec in range(1 << n_spec):
        spec_bits = [(spec >> (n_spec - 1 - i)) & 1 for i in range(n_spec)]
        for (rb, cb), v in block.entries:
            col_dec = [0] * basis.k
            for i, p in enumerate(spectators_in):
                col_dec[p] = spec_bits[i]
            nb = len(in_pos)
            for i, p in enumerate(in_pos):
                col_dec[p] = (cb >> (nb - 1 - i)) & 1
            row_dec = [0] * out_basis.k
            for i, p in enumerate(spectators_out):
                row_dec[p] = spec_bits[i]
            mb = len(out_pos)
            for i, p in enumerate(out_pos):
                row_dec[p] = (rb >> (mb - 1 - i)) & 1
            out[(out_basis.index_of(row_dec), basis.index_of(col_dec))] = v
    return ExactLinearMap.make(F, out_basis.dim, basis.dim, out)


# ---------------------------------------------------------------------------
# structure maps as matrices (basis order 1, x; tensor factors big-endian)

def product_matrix(th):
    F = th.field
    return ExactLinearMap.make(F, 2, 4, {
        (0, 0): F.one,          # 1(x)1 -> 1
        (1, 1): F.one,          # 1(x)x -> x
        (1, 2): F.one,          # x(x)1 -> x
        (0, 3): th.t,           # x(x)x -> t*1 + h*x
        (1, 3): th.h,
    })


def coproduct_matrix(th):
    F = th.field
    return ExactLinearMap.make(F, 4, 2, {
        (0, 0): F.neg(F.mul(th.h, th.f)),   # Delta(1)
        (1, 0): th.f,
        (2, 0): th.f,
        (0, 1): F.mul(th.f, th.t),          # Delta(x)
        (3, 1): th.f,
    })


def phi_matrix(th):
    F = th.field
    return ExactLinearMap.make(F, 2, 2, {
        (0, 0): F.one, (0, 1): th.beta, (1, 1): F.one})


def theta_matrix(th):
    """Multiplication by theta = lam*1 + mu*x."""
    F = th.field
    return ExactLinearMap.make(F, 2, 2, {
        (0, 0): th.lam,
        (1, 0): th.mu,
        (0, 1): F.mul(th.mu, th.t),
        (1, 1): F.add(th.lam, F.mul(th.mu, th.h)),
    })


def counit_matrix(th):
    return ExactLinearMap.make(th.field, 1, 2, {(0, 1): th.a})


def unit_matrix(th):
    return ExactLinearMap.make(th.field, 2, 1, {(0, 0): th.field.one})


# ---------------------------------------------------------------------------
# elementary cobordisms

@dataclass(frozen=True)
class Merge:
    """Two circles fuse into one; twists flag orientation mismatches."""
    twist_in: tuple = (0, 0)
    twist_out: int = 0


@dataclass(frozen=True)
class Split:
    """One circle splits into two."""
    twist_in: int = 0
    twist_out: tuple = (0, 0)


@dataclass(frozen=True)
class SingleCycle:
    """One circle to one circle through a twice-punctured projective plane."""


@dataclass(frozen=True)
class Cylinder:
    twist: int = 0


@dataclass(frozen=True)
class Cap:
    """The disc as a cobordism from nothing to a circle (the unit)."""


@dataclass(frozen=True)
class Cup:
    """The disc as a cobordism from a circle to nothing (the counit)."""


def _phi_power(th, n):
    return phi_matrix(th) if n % 2 else ExactLinearMap.identity(th.field, 2)


def elementary_map(th, cob):
    """The matrix of an elementary cobordism on its affected tensor factors."""
    if isinstance(cob, Merge):
        pre = _phi_power(th, cob.twist_in[0]).kron(_phi_power(th, cob.twist_in[1]))
        return compose(_phi_power(th, cob.twist_out), product_matrix(th), pre)
    if isinstance(cob, Split):
        post = _phi_power(th, cob.twist_out[0]).kron(_phi_power(th, cob.twist_out[1]))
        return compose(post, coproduct_matrix(th), _phi_power(th, cob.twist_in))
    if isinstance(cob, SingleCycle):
        return theta_matrix(th)
    if isinstance(cob, Cylinder):
        return _phi_power(th, cob.twist)
    if isinstance(cob, Cap):
        return unit_matrix(th)
    if isinstance(cob, Cup):
        return counit_matrix(th)
    raise TypeError(f"not an elementary cobordism: {cob!r}")


# ---------------------------------------------------------------------------
# closed surfaces

def evaluate_closed_surface(th, genus, crosscaps):
    """Evaluate the closed surface with the given genus and crosscap count.

    ``crosscaps == 0`` means the orientable surface of that genus; otherwise
    the surface is nonorientable with ``crosscaps`` crosscaps and ``genus``
    extra handles.  The value is eps(H^genus * theta^crosscaps) where H is
    the handle element m(Delta(1)).
    """
    if genus < 0 or crosscaps < 0:
        raise DimensionMismatch("genus and crosscaps must be nonnegative")
    v = algebra.element_power(th, algebra.handle_element(th), genus)
    v = algebra.multiply(th, v, algebra.element_power(th, algebra.theta(th), crosscaps))
    return algebra.counit(th, v)
