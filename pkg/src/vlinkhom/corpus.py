"""The shipped diagram corpus.

Classical entries are flagged so that planarity-dependent assertions (no
single-cycle saddles, the classical homology oracle) may be applied to
them.  The R3 pairs are braid closures differing by exactly one braid
relation, i.e. by a single third Reidemeister move.
"""

from __future__ import annotations

from .diagram import braid_closure, parse_gauss

_TEXT_ENTRIES = {
    # name: (gauss text, classical)
    "unknot": ("", True),
    "unlink2": (";", True),
    "trefoil": ("O1+,U2+,O3+,U1+,O2+,U3+", True),
    "virtual_trefoil": ("O1+,O2+,U1+,U2+", False),
    "kishino": ("U1-,O2-,U3+,O4+,O1-,U2-,O3+,U4+", False),
}

_BRAID_ENTRIES = {
    # name: braid word (closure; classical by construction)
    "figure_eight": [1, -2, 1, -2],
    "cinquefoil": [1, 1, 1, 1, 1],
    "r3_a1": [1, 2, 1],
    "r3_b1": [2, 1, 2],
    "r3_a2": [-1, -2, -1],
    "r3_b2": [-2, -1, -2],
    "r3_a3": [1, 2, -1],
    "r3_b3": [-2, 1, 2],
}

R3_PAIRS = (("r3_a1", "r3_b1"), ("r3_a2", "r3_b2"), ("r3_a3", "r3_b3"))

CORPUS_NAMES = ("unknot", "unlink2", "trefoil", "figure_eight", "cinquefoil",
                "virtual_trefoil", "kishino")

CLASSICAL_NAMES = tuple(n for n in CORPUS_NAMES
                        if n in _BRAID_ENTRIES or _TEXT_ENTRIES[n][1])


def load(name):
    """Build one corpus diagram by name."""
    if name in _TEXT_ENTRIES:
        text, classical = _TEXT_ENTRIES[name]
        return parse_gauss(text, name=name, classical=classical)
    if name in _BRAID_ENTRIES:
        return braid_closure(_BRAID_ENTRIES[name], name=name, classical=True)
    raise KeyError(f"no corpus diagram named {name!r}")


def load_corpus():
    """The main corpus diagrams (R3 pairs not included)."""
    return [load(n) for n in CORPUS_NAMES]


def load_r3_pairs():
    return [(load(a), load(b)) for a, b in R3_PAIRS]


def all_names():
    return CORPUS_NAMES + tuple(n for pair in R3_PAIRS for n in pair)
