"""Independent oracles used by the tests.

These deliberately avoid the library's own machinery where the point is to
cross-check it: circle counting by union-find instead of tracing, a dense
classical Khovanov construction with no twist data, and a standalone dense
elimination for ranks.
"""

from __future__ import annotations

from fractions import Fraction

from vlinkhom.diagram import splice_pairing


# -- circle counting by union-find -------------------------------------------

def circle_count(d, bits):
    """k(s) computed by union-find over arc ends (no tracing)."""
    pairing = splice_pairing(d, tuple(bits))
    parent = list(range(2 * d.total_arcs))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for arc in range(d.total_arcs):
        union(2 * arc, 2 * arc + 1)
    for e, partner in enumerate(pairing):
        if partner >= 0:
            union(e, partner)
    roots = {find(2 * arc) for arc in range(d.total_arcs)}
    free_loops = sum(1 for comp in d.components if not comp)
    return len(roots) + free_loops


# -- dense rank oracles -------------------------------------------------------

def rank_f2_dense(rows):
    """Rank over GF(2) of a dense 0/1 matrix (list of lists), no bitmasks."""
    rows = [list(r) for r in rows if any(r)]
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                rows[i] = [(a + b) % 2 for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def rank_qq_dense(rows):
    """Rank over QQ of a dense Fraction matrix, full reduced echelon form."""
    rows = [[Fraction(x) for x in r] for r in rows]
    rows = [r for r in rows if any(r)]
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def dense_betti_qq(complex_):
    """Betti numbers recomputed densely with the standalone eliminator."""
    ranks = {}
    for i in range(complex_.min_degree, complex_.max_degree):
        m = complex_.differentials[i]
        dense = [[Fraction(0)] * m.ncols for _ in range(m.nrows)]
        for (r, c), v in m.entries:
            dense[r][c] = Fraction(v)
        ranks[i] = rank_qq_dense(dense)
    betti = {}
    for i in complex_.degrees:
        b = complex_.groups[i].dim - ranks.get(i, 0) - ranks.get(i - 1, 0)
        if b:
            betti[i] = b
    return betti


# -- classical Khovanov over F2 (planar diagrams, no twist machinery) --------

def classical_khovanov_f2_betti(d, smoothings):
    """Betti numbers of the classical Khovanov complex over F2.

    Valid for planar-realizable diagrams only: every saddle must change the
    circle count by one.  Uses the Frobenius algebra with x*x = 0,
    Delta(1) = 1(x)x + x(x)1, Delta(x) = x(x)x; signs are irrelevant mod 2.
    """
    n, n_minus = d.n, d.n_minus
    states_by_r = {}
    for state, sm in smoothings.items():
        states_by_r.setdefault(sm.r, []).append(state)
    for r in states_by_r:
        states_by_r[r].sort()

    def group(r):
        offsets, dim = {}, 0
        for s in states_by_r.get(r, []):
            offsets[s] = dim
            dim += 1 << smoothings[s].k
        return offsets, dim

    def decorations(state, index):
        k = smoothings[state].k
        return [(index >> (k - 1 - i)) & 1 for i in range(k)]

    def index_of(state, dec):
        idx = 0
        for b in dec:
            idx = (idx << 1) | b
        return idx

    ranks = {}
    for r in range(n):
        src_off, src_dim = group(r)
        tgt_off, tgt_dim = group(r + 1)
        rows = [[0] * src_dim for _ in range(tgt_dim)]
        for s in states_by_r.get(r, []):
            ss = smoothings[s]
            for j in range(n):
                if ss.bits[j]:
                    continue
                tbits = ss.bits[:j] + (1,) + ss.bits[j + 1:]
                t = "".join(map(str, tbits))
                st = smoothings[t]
                ends = d.crossing_ends(j + 1)
                bottom = sorted({ss.circle_of_arc(e >> 1) for e in ends})
                top = sorted({st.circle_of_arc(e >> 1) for e in ends})
                assert {len(bottom), len(top)} == {1, 2}, \
                    "classical oracle needs planar (merge/split) saddles"
                src_keys = ss.circle_keys()
                tgt_keys = st.circle_keys()
                for src_idx in range(1 << ss.k):
                    dec = decorations(s, src_idx)
                    spect = {src_keys[i]: dec[i] for i in range(ss.k)
                             if i not in bottom}
                    if len(bottom) == 2:  # merge: x*x = 0
                        a, b = dec[bottom[0]], dec[bottom[1]]
                        if a and b:
                            continue
                        out_vals = [{tgt_keys[top[0]]: a | b}]
                    else:                 # split
                        v = dec[bottom[0]]
                        k1, k2 = tgt_keys[top[0]], tgt_keys[top[1]]
                        if v:
                            out_vals = [{k1: 1, k2: 1}]
                        else:
                            out_vals = [{k1: 0, k2: 1}, {k1: 1, k2: 0}]
                    for out in out_vals:
                        full = dict(spect)
                        full.update(out)
                        tdec = [full[k] for k in tgt_keys]
                        row = tgt_off[t] + index_of(t, tdec)
                        col = src_off[s] + src_idx
                        rows[row][col] ^= 1
        ranks[r] = rank_f2_dense(rows)

    betti = {}
    for r in range(n + 1):
        _, dim = group(r)
        b = dim - ranks.get(r, 0) - ranks.get(r - 1, 0)
        if b:
            betti[r - n_minus] = b
    return betti
