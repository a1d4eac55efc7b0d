"""Virtual link diagrams as signed Gauss codes.

A diagram is a list of components, each a cyclic sequence of passages
(crossing label, over/under, sign).  Smoothing a state splices every
crossing according to its bit and sign, and the resulting circles are traced
with a canonical orientation (start at the minimal half-edge, forward).

Saddles between adjacent states are classified by how the circle count
changes; for the orientable kinds the twist bits are computed by coherently
orienting the bands of the saddle cobordism and comparing the induced
boundary directions against the canonical ones.  A consistent orientation
exists exactly when the saddle piece is orientable; the nonorientable case
is the one-circle-to-one-circle saddle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import (BadSyntax, DuplicateRole, LengthMismatch, MissingPassage,
                     NotCubeEdge, PatternNotFound, SignMismatch)


class Passage(NamedTuple):
    crossing: int
    over: bool
    sign: int  # +1 or -1

    def text(self):
        return f"{'O' if self.over else 'U'}{self.crossing}{'+' if self.sign > 0 else '-'}"


class _Crossing(NamedTuple):
    sign: int
    over: tuple   # (component, position)
    under: tuple


class VirtualLinkDiagram:
    """An immutable signed Gauss code with validated crossing structure."""

    def __init__(self, components, name="", classical=False):
        self.components = tuple(tuple(Passage(*p) for p in comp) for comp in components)
        self.name = name
        self.classical = bool(classical)
        self._validate()
        self._index()

    def _validate(self):
        seen = {}
        for ci, comp in enumerate(self.components):
            for pi, p in enumerate(comp):
                if p.crossing < 1:
                    raise BadSyntax((ci, pi), "crossing labels must be positive")
                if p.sign not in (1, -1):
                    raise BadSyntax((ci, pi), "sign must be +1 or -1")
                rec = seen.setdefault(p.crossing, {})
                role = "over" if p.over else "under"
                if role in rec:
                    raise DuplicateRole(p.crossing, role)
                rec[role] = (ci, pi, p.sign)
        n = len(seen)
        for label in range(1, n + 1):
            if label not in seen:
                raise MissingPassage(label)
        for label, rec in seen.items():
            if "over" not in rec or "under" not in rec:
                raise MissingPassage(label)
            if rec["over"][2] != rec["under"][2]:
                raise SignMismatch(label)
        self._seen = seen

    def _index(self):
        self._offsets = []
        total = 0
        for comp in self.components:
            self._offsets.append(total)
            total += len(comp)
        self.total_arcs = total
        self.crossings = {}
        for label, rec in self._seen.items():
            ci, pi, sign = rec["over"]
            cj, pj, _ = rec["under"]
            self.crossings[label] = _Crossing(sign, (ci, pi), (cj, pj))
        del self._seen
        self.n = len(self.crossings)
        self.n_plus = sum(1 for c in self.crossings.values() if c.sign > 0)
        self.n_minus = self.n - self.n_plus

    # -- arc bookkeeping ---------------------------------------------------
    # Arc (comp, pos) runs from passage pos to passage pos+1 (cyclically);
    # its tail end is 2*arc and its head end 2*arc+1.

    def arc_id(self, comp, pos):
        return self._offsets[comp] + pos % len(self.components[comp])

    def crossing_ends(self, label):
        """The four arc-ends at a crossing: (Oi, Oo, Ui, Uo)."""
        cr = self.crossings[label]
        oc, op = cr.over
        uc, up = cr.under
        oi = 2 * self.arc_id(oc, op - 1) + 1
        oo = 2 * self.arc_id(oc, op)
        ui = 2 * self.arc_id(uc, up - 1) + 1
        uo = 2 * self.arc_id(uc, up)
        return oi, oo, ui, uo

    # -- derived diagrams ----------------------------------------------------

    def relabeled(self, perm):
        """Apply a bijection old-label -> new-label to all crossings."""
        comps = [[Passage(perm[p.crossing], p.over, p.sign) for p in comp]
                 for comp in self.components]
        return VirtualLinkDiagram(comps, self.name, self.classical)

    def reversed_component(self, comp):
        comps = [list(c) for c in self.components]
        comps[comp] = list(reversed(comps[comp]))
        return VirtualLinkDiagram(comps, self.name, self.classical)

    # -- serialization -------------------------------------------------------

    def serialize(self):
        return ";".join(",".join(p.text() for p in comp) for comp in self.components)

    def to_json_obj(self):
        obj = {
            "name": self.name,
            "components": [[{"c": p.crossing, "o": p.over, "s": p.sign}
                            for p in comp] for comp in self.components],
        }
        if self.classical:
            obj["classical"] = True
        return obj

    def __eq__(self, other):
        return (isinstance(other, VirtualLinkDiagram)
                and self.components == other.components)

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        label = self.name or "diagram"
        return f"<{label}: {self.serialize() or '(unknot)'}>"


# ---------------------------------------------------------------------------
# parsing

def parse_gauss(text, name="", classical=False):
    """Parse the text grammar: components split by ';', passages by ','.

    A passage is ('O'|'U') label ('+'|'-'); an empty component is a
    zero-crossing unknot.  The unicode minus sign is accepted.
    """
    components = []
    pos = 0
    for chunk in text.split(";"):
        comp = []
        inner = 0
        for token in chunk.split(","):
            tok = token.strip()
            where = pos + inner
            if not tok:
                if chunk.strip() and len(chunk.split(",")) > 1:
                    raise BadSyntax(where, "empty passage")
                inner += len(token) + 1
                continue
            role = tok[0].upper()
            if role not in ("O", "U"):
                raise BadSyntax(where, f"expected O or U, got {tok[0]!r}")
            body = tok[1:].replace("−", "-")
            if not body or body[-1] not in "+-":
                raise BadSyntax(where, "passage must end in + or -")
            sign = 1 if body[-1] == "+" else -1
            digits = body[:-1].strip()
            if not digits.isdigit():
                raise BadSyntax(where, f"bad crossing label {digits!r}")
            comp.append(Passage(int(digits), role == "O", sign))
            inner += len(token) + 1
        components.append(comp)
        pos += len(chunk) + 1
    return VirtualLinkDiagram(components, name, classical)


def diagram_from_json_obj(obj):
    comps = [[Passage(int(p["c"]), bool(p["o"]), int(p["s"])) for p in comp]
             for comp in obj["components"]]
    return VirtualLinkDiagram(comps, obj.get("name", ""),
                              obj.get("classical", False))


def load_diagram(path):
    """Load a diagram file (JSON if it looks like JSON, text grammar else)."""
    import json
    import os

    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.read()
    stripped = raw.strip()
    stem = os.path.splitext(os.path.basename(path))[0]
    if stripped.startswith("{"):
        return diagram_from_json_obj(json.loads(stripped))
    return parse_gauss(stripped, name=stem)


# ---------------------------------------------------------------------------
# smoothings

@dataclass(frozen=True)
class Circle:
    """One circle of a smoothing: a cyclic list of directed arcs.

    ``steps`` holds (arc, direction) pairs; direction +1 traverses the arc
    from tail to head.  ``key`` is the minimal half-edge (2*arc for a
    forward traversal, 2*arc+1 backward), which identifies the circle and
    anchors its canonical orientation.  Free loops (components with no
    crossings) have no steps and carry a key beyond every half-edge.
    """

    steps: tuple
    key: int

    def arcs(self):
        return [a for a, _ in self.steps]


def normalize_circle(circle):
    """Rotate the step list so the minimal half-edge comes first."""
    steps = circle.steps
    if not steps:
        return circle
    half = [2 * a + (0 if d > 0 else 1) for a, d in steps]
    i = half.index(min(half))
    steps = steps[i:] + steps[:i]
    return Circle(steps, min(half))


def reverse_circle(circle):
    """The same circle traversed backwards (re-normalized)."""
    if not circle.steps:
        return circle
    steps = tuple((a, -d) for a, d in reversed(circle.steps))
    return normalize_circle(Circle(steps, 0))


@dataclass(frozen=True)
class Smoothing:
    """The state circles Gamma_s together with the splice pairing used."""

    diagram: VirtualLinkDiagram
    bits: tuple
    circles: tuple
    pairing: tuple     # pairing[end] = partner end, -1 for unused slots
    arc_circle: tuple  # arc -> index into circles

    @property
    def r(self):
        return sum(self.bits)

    @property
    def k(self):
        return len(self.circles)

    @property
    def state(self):
        return "".join(str(b) for b in self.bits)

    def circle_of_arc(self, arc):
        return self.arc_circle[arc]

    def circle_keys(self):
        return tuple(c.key for c in self.circles)


def coerce_state(d, state):
    if isinstance(state, str):
        text = state.strip()
        if any(ch not in "01" for ch in text):
            raise BadSyntax(0, f"state must be a 0/1 string, got {state!r}")
        bits = tuple(1 if ch == "1" else 0 for ch in text)
    else:
        bits = tuple(int(b) for b in state)
        if any(b not in (0, 1) for b in bits):
            raise BadSyntax(0, f"state bits must be 0/1, got {state!r}")
    if len(bits) != d.n:
        raise LengthMismatch(d.n, len(bits))
    return bits


def splice_pairing(d, bits):
    """End-to-end pairing of the smoothed diagram.

    At a positive crossing the 0-smoothing joins over-in to under-out and
    under-in to over-out (the flow-preserving splice); the 1-smoothing joins
    the two inputs and the two outputs.  At a negative crossing the roles
    swap, which reproduces the classical unoriented 0/1 convention.
    """
    pairing = [-1] * (2 * d.total_arcs)
    for label, cr in d.crossings.items():
        oi, oo, ui, uo = d.crossing_ends(label)
        oriented = (cr.sign > 0) == (bits[label - 1] == 0)
        pairs = ((oi, uo), (ui, oo)) if oriented else ((oi, ui), (oo, uo))
        for e1, e2 in pairs:
            pairing[e1] = e2
            pairing[e2] = e1
    return pairing


def smooth(d, state):
    """Smooth every crossing of ``d`` according to ``state`` and trace circles."""
    bits = coerce_state(d, state)
    pairing = splice_pairing(d, bits)
    visited = [False] * d.total_arcs
    circles = []
    for start in range(d.total_arcs):
        if visited[start]:
            continue
        steps = []
        arc, direction = start, 1
        while True:
            steps.append((arc, direction))
            visited[arc] = True
            exit_end = 2 * arc + (1 if direction > 0 else 0)
            enter_end = pairing[exit_end]
            arc = enter_end >> 1
            direction = 1 if (enter_end & 1) == 0 else -1
            if arc == start:
                assert direction == 1, "circle closed against its own direction"
                break
        circles.append(Circle(tuple(steps), 2 * start))
    for ci, comp in enumerate(d.components):
        if not comp:
            circles.append(Circle((), 2 * d.total_arcs + ci))
    circles.sort(key=lambda c: c.key)
    arc_circle = [-1] * d.total_arcs
    for idx, circ in enumerate(circles):
        for a in circ.arcs():
            arc_circle[a] = idx
    return Smoothing(d, bits, tuple(circles), tuple(pairing), tuple(arc_circle))


def all_smoothings(d):
    """All 2^n smoothings, keyed by state string, in lexicographic order."""
    out = {}
    for idx in range(1 << d.n):
        bits = tuple((idx >> (d.n - 1 - i)) & 1 for i in range(d.n))
        sm = smooth(d, bits)
        out[sm.state] = sm
    return out


# ---------------------------------------------------------------------------
# saddles

@dataclass(frozen=True)
class SaddleDescriptor:
    """A classified cube edge from ``from_state`` to ``to_state``.

    ``bottom``/``top`` list the affected circle keys in canonical order;
    ``twist_in``/``twist_out`` carry one bit per affected circle for the
    orientable kinds and are empty for the single-cycle saddle.
    ``sign_exponent`` is the number of 1-bits strictly before the changed
    position in ``to_state``.
    """

    from_state: str
    to_state: str
    position: int
    kind: str  # "merge" | "split" | "single_cycle"
    bottom: tuple
    top: tuple
    twist_in: tuple
    twist_out: tuple
    sign_exponent: int


def classify_saddle(d, s, t):
    """Classify the cube edge s -> t (states differing by one 0 -> 1 flip)."""
    sb = coerce_state(d, s)
    tb = coerce_state(d, t)
    flips = [i for i in range(d.n) if sb[i] != tb[i]]
    if len(flips) != 1 or sb[flips[0]] != 0:
        raise NotCubeEdge(s, t)
    return _classify(smooth(d, sb), smooth(d, tb), flips[0])


def _classify(ss, st, j):
    d = ss.diagram
    ends = d.crossing_ends(j + 1)
    bottom_idx = sorted({ss.circle_of_arc(e >> 1) for e in ends})
    top_idx = sorted({st.circle_of_arc(e >> 1) for e in ends})
    nb, nt = len(bottom_idx), len(top_idx)
    sigma, orientable = _band_orientations(ss, st, j, ends)
    if not orientable:
        assert (nb, nt) == (1, 1), "orientation conflict off a single-cycle saddle"
        kind, twist_in, twist_out = "single_cycle", (), ()
    else:
        assert (nb, nt) in ((2, 1), (1, 2)), "orientable saddle must change k"
        kind = "merge" if nb == 2 else "split"
        twist_in = tuple(_circle_twist(ss.circles[i], sigma) for i in bottom_idx)
        twist_out = tuple(_circle_twist(st.circles[i], sigma) for i in top_idx)
    return SaddleDescriptor(
        from_state=ss.state,
        to_state=st.state,
        position=j,
        kind=kind,
        bottom=tuple(ss.circles[i].key for i in bottom_idx),
        top=tuple(st.circles[i].key for i in top_idx),
        twist_in=twist_in,
        twist_out=twist_out,
        sign_exponent=sum(st.bits[:j]),
    )


def _band_orientations(ss, st, j, ends):
    """Coherently orient the bands of the saddle cobordism at crossing j+1.

    Each arc band gets a flag sigma; sigma = +1 makes the band's compatible
    boundary direction run head-to-tail.  The saddle square forces the four
    corner arcs; unaffected splice bands force equal sigma across
    flow-preserving junctions and opposite sigma across reversing ones.
    Returns (sigma, True) on success and (partial, False) when the
    constraints conflict, i.e. when the saddle piece is nonorientable.
    """
    oi = ends[0]
    e_a = oi
    e_b = ss.pairing[oi]
    e_c = st.pairing[oi]
    e_d = next(e for e in ends if e not in (e_a, e_b, e_c))
    corner_up = {e_a: True, e_b: False, e_c: False, e_d: True}
    skip = frozenset(ends)

    sigma = {}
    for e, up in corner_up.items():
        arc = e >> 1
        want = 1 if up == bool(e & 1) else -1
        if sigma.setdefault(arc, want) != want:
            return sigma, False

    affected = sorted({ss.circle_of_arc(e >> 1) for e in ends})
    for idx in affected:
        steps = ss.circles[idx].steps
        m = len(steps)
        current = None
        for lap in range(2 * m):
            arc, direction = steps[lap % m]
            if current is not None:
                if sigma.setdefault(arc, current) != current:
                    return sigma, False
            value = sigma.get(arc)
            if value is None:
                continue
            exit_end = 2 * arc + (1 if direction > 0 else 0)
            if exit_end in skip:
                current = None
                continue
            nxt_dir = steps[(lap + 1) % m][1]
            current = value if direction == nxt_dir else -value
    return sigma, True


def _circle_twist(circle, sigma):
    """Compare the compatible direction against the canonical traversal."""
    twists = set()
    for arc, direction in circle.steps:
        twists.add(1 if (sigma[arc] == 1) != (direction == -1) else 0)
    assert len(twists) == 1, "incoherent band orientation around a circle"
    return twists.pop()


def cube_edges(d, smoothings=None):
    """All n * 2^(n-1) classified cube edges, in (state, position) order."""
    sms = smoothings if smoothings is not None else all_smoothings(d)
    out = []
    for state in sorted(sms):
        ss = sms[state]
        for j in range(d.n):
            if ss.bits[j] == 0:
                tbits = ss.bits[:j] + (1,) + ss.bits[j + 1:]
                tstate = "".join(str(b) for b in tbits)
                out.append(_classify(ss, sms[tstate], j))
    return out


# ---------------------------------------------------------------------------
# Reidemeister moves

R1_VARIANTS = ((1, "ou"), (1, "uo"), (-1, "ou"), (-1, "uo"))
R2_VARIANTS = ("parallel", "antiparallel")


def r1_sites(d):
    return [(ci, pos) for ci, comp in enumerate(d.components)
            for pos in range(max(len(comp), 1))]


def apply_r1(d, site, variant):
    """Insert a kink (new crossing n+1) at ``site`` = (component, position).

    ``variant`` indexes R1_VARIANTS: kink sign and whether the over or the
    under passage comes first.
    """
    sign, order = R1_VARIANTS[variant % 4] if isinstance(variant, int) else variant
    ci, pos = (0, site) if isinstance(site, int) else site
    comps = [list(c) for c in d.components]
    m = len(comps[ci])
    pos = pos % m if m else 0
    label = d.n + 1
    pair = [Passage(label, True, sign), Passage(label, False, sign)]
    if order == "uo":
        pair.reverse()
    comps[ci][pos:pos] = pair
    return VirtualLinkDiagram(comps, d.name, d.classical)


def r1_inverse_sites(d):
    out = []
    for ci, comp in enumerate(d.components):
        m = len(comp)
        for pos in range(m if m > 2 else (1 if m == 2 else 0)):
            if comp[pos].crossing == comp[(pos + 1) % m].crossing:
                out.append((ci, pos))
    return out


def apply_r1_inverse(d, site):
    """Remove the kink whose first passage sits at ``site``."""
    ci, pos = site
    comp = d.components[ci]
    m = len(comp)
    if m < 2 or comp[pos].crossing != comp[(pos + 1) % m].crossing:
        raise PatternNotFound(f"no kink at component {ci} position {pos}")
    label = comp[pos].crossing
    comps = [list(c) for c in d.components]
    comps[ci] = [p for i, p in enumerate(comp) if i not in (pos, (pos + 1) % m)]
    return _relabel_after_removal(comps, {label}, d)


def r2_site_pairs(d):
    sites = r1_sites(d)
    return [(a, b) for a in sites for b in sites if a != b]


def apply_r2(d, sites, variant):
    """Slide one strand over another: insert crossings n+1, n+2.

    ``sites`` is a pair of distinct insertion sites; the first receives the
    two over-passages.  ``variant`` is "parallel" (the two strands traverse
    the bigon the same way; under-passages in the same order) or
    "antiparallel" (under-passages reversed).  The two new crossings always
    carry opposite signs.
    """
    if isinstance(variant, int):
        variant = R2_VARIANTS[variant % 2]
    (ca, pa), (cb, pb) = sites
    if (ca, pa) == (cb, pb):
        raise PatternNotFound("r2 sites must be distinct")
    c1, c2 = d.n + 1, d.n + 2
    if variant == "parallel":
        block_a = [Passage(c1, True, 1), Passage(c2, True, -1)]
        block_b = [Passage(c1, False, 1), Passage(c2, False, -1)]
    else:
        block_a = [Passage(c1, True, -1), Passage(c2, True, 1)]
        block_b = [Passage(c2, False, 1), Passage(c1, False, -1)]
    comps = [list(c) for c in d.components]
    pa = pa % len(comps[ca]) if comps[ca] else 0
    pb = pb % len(comps[cb]) if comps[cb] else 0
    if ca == cb:
        first, second = ((pa, block_a), (pb, block_b))
        if pa < pb:
            first, second = ((pb, block_b), (pa, block_a))
        comps[ca][first[0]:first[0]] = first[1]
        comps[ca][second[0]:second[0]] = second[1]
    else:
        comps[ca][pa:pa] = block_a
        comps[cb][pb:pb] = block_b
    return VirtualLinkDiagram(comps, d.name, d.classical)


def r2_inverse_sites(d):
    """Sites (component, position) of removable R2 over-pairs."""
    out = []
    for ci, comp in enumerate(d.components):
        m = len(comp)
        for pos in range(m):
            p1, p2 = comp[pos], comp[(pos + 1) % m]
            if not (p1.over and p2.over):
                continue
            if p1.crossing == p2.crossing or p1.sign == p2.sign:
                continue
            if _find_under_pair(d, p1.crossing, p2.crossing) is not None:
                out.append((ci, pos))
    return out


def _find_under_pair(d, c1, c2):
    for ci, comp in enumerate(d.components):
        m = len(comp)
        for pos in range(m):
            q1, q2 = comp[pos], comp[(pos + 1) % m]
            if q1.over or q2.over:
                continue
            if {q1.crossing, q2.crossing} == {c1, c2}:
                return ci, pos
    return None


def apply_r2_inverse(d, site):
    """Remove the R2 pair whose adjacent over-passages start at ``site``."""
    ci, pos = site
    comp = d.components[ci]
    m = len(comp)
    if m < 2:
        raise PatternNotFound("component too short for an R2 pattern")
    p1, p2 = comp[pos], comp[(pos + 1) % m]
    if not (p1.over and p2.over) or p1.crossing == p2.crossing or p1.sign == p2.sign:
        raise PatternNotFound(f"no R2 over-pair at component {ci} position {pos}")
    under = _find_under_pair(d, p1.crossing, p2.crossing)
    if under is None:
        raise PatternNotFound(
            f"under-passages of crossings {p1.crossing}, {p2.crossing} not adjacent")
    uc, upos = under
    drop = {(ci, pos), (ci, (pos + 1) % m),
            (uc, upos), (uc, (upos + 1) % len(d.components[uc]))}
    comps = [[p for i, p in enumerate(comp_) if (cidx, i) not in drop]
             for cidx, comp_ in enumerate(d.components)]
    return _relabel_after_removal(comps, {p1.crossing, p2.crossing}, d)


def _relabel_after_removal(comps, removed, d):
    surviving = sorted(set(range(1, d.n + 1)) - removed)
    relabel = {old: new for new, old in enumerate(surviving, start=1)}
    comps = [[Passage(relabel[p.crossing], p.over, p.sign) for p in comp]
             for comp in comps]
    return VirtualLinkDiagram(comps, d.name, d.classical)


def random_moves(d, count, rng, max_crossings=8):
    """Apply ``count`` random R1/R2 moves (and inverses), keeping n bounded.

    Growth moves are disabled once they would push the crossing count past
    ``max_crossings``; inverse moves are used when available.  Returns the
    final diagram and a human-readable trail of the moves applied.
    """
    trail = []
    current = d
    for step in range(count):
        candidates = []
        if current.n + 1 <= max_crossings:
            for site in r1_sites(current):
                for v in range(4):
                    candidates.append(("r1", site, v))
        if current.n + 2 <= max_crossings:
            for pair in r2_site_pairs(current):
                for v in R2_VARIANTS:
                    candidates.append(("r2", pair, v))
        for site in r1_inverse_sites(current):
            candidates.append(("r1inv", site, None))
        for site in r2_inverse_sites(current):
            candidates.append(("r2inv", site, None))
        if not candidates:
            trail.append("stuck: no moves available")
            break
        kind, site, variant = rng.choice(candidates)
        if kind == "r1":
            current = apply_r1(current, site, variant)
        elif kind == "r2":
            current = apply_r2(current, site, variant)
        elif kind == "r1inv":
            current = apply_r1_inverse(current, site)
        else:
            current = apply_r2_inverse(current, site)
        trail.append(f"{step}: {kind} at {site}"
                     + (f" variant {variant}" if variant is not None else ""))
    return current, trail


# ---------------------------------------------------------------------------
# braid closures (used to build the shipped corpus and test diagrams)

def braid_closure(word, strands=None, name="", classical=True):
    """Close a braid word into a diagram.

    ``word`` lists generators: +i crosses the strand in position i over
    position i+1, -i crosses it under.  All strands are oriented the same
    way, so +i yields a positive crossing and -i a negative one.
    """
    if not word:
        return VirtualLinkDiagram([[]], name, classical)
    k = strands if strands is not None else max(abs(w) for w in word) + 1
    position_of = list(range(k))   # strand token at each position
    records = [[] for _ in range(k)]
    ends_at = list(range(k))
    for idx, w in enumerate(word, start=1):
        i = abs(w) - 1
        if i + 1 >= k:
            raise BadSyntax(idx, f"generator {w} needs more strands")
        sa, sb = position_of[i], position_of[i + 1]
        sign = 1 if w > 0 else -1
        over_token = sa if w > 0 else sb
        under_token = sb if w > 0 else sa
        records[over_token].append(Passage(idx, True, sign))
        records[under_token].append(Passage(idx, False, sign))
        position_of[i], position_of[i + 1] = sb, sa
    for pos, token in enumerate(position_of):
        ends_at[token] = pos
    components = []
    seen = [False] * k
    for start in range(k):
        if seen[start]:
            continue
        comp = []
        token = start
        while not seen[token]:
            seen[token] = True
            comp.extend(records[token])
            token = ends_at[token]
        components.append(comp)
    return VirtualLinkDiagram(components, name, classical)
