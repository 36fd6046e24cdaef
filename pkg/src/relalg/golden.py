"""Reference operation tables for the catalog models, recorded by element
name in the same row order the tables are usually displayed in.

These are compared cell-for-cell against the constructed algebras; a
mismatch means either a transcription error here or a builder bug, and is
reported with the offending cell coordinates.
"""

from __future__ import annotations

from .algebra import FiniteAlgebra

M3_ORDER = ["0", "1'", "0'", "1"]
M3_COMP = [
    ["0", "0", "0", "0"],
    ["0", "1'", "0'", "1"],
    ["0", "0'", "1", "1"],
    ["0", "1", "1", "1"],
]

Z3_ORDER = ["{}", "{0}", "{1}", "{2}", "{0,1}", "{0,2}", "{1,2}", "{0,1,2}"]
Z3_COMP = [
    ["{}"] * 8,
    ["{}", "{0}", "{1}", "{2}", "{0,1}", "{0,2}", "{1,2}", "{0,1,2}"],
    ["{}", "{1}", "{2}", "{0}", "{1,2}", "{0,1}", "{0,2}", "{0,1,2}"],
    ["{}", "{2}", "{0}", "{1}", "{0,2}", "{1,2}", "{0,1}", "{0,1,2}"],
    ["{}", "{0,1}", "{1,2}", "{0,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}"],
    ["{}", "{0,2}", "{0,1}", "{1,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}"],
    ["{}", "{1,2}", "{0,2}", "{0,1}", "{0,1,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}"],
    ["{}", "{0,1,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}"],
]
Z3_CONV = ["{}", "{0}", "{2}", "{1}", "{0,2}", "{0,1}", "{1,2}", "{0,1,2}"]

D_ORDER = ["0", "1'", "a", "b", "1'+a", "1'+b", "0'", "1"]
D_ATOM_COMP = {  # Table of relative products of the three atoms
    ("1'", "1'"): "1'", ("1'", "a"): "a", ("1'", "b"): "b",
    ("a", "1'"): "a", ("a", "a"): "1", ("a", "b"): "0'",
    ("b", "1'"): "b", ("b", "a"): "0'", ("b", "b"): "1",
}
D_COMP = [
    ["0"] * 8,
    ["0", "1'", "a", "b", "1'+a", "1'+b", "0'", "1"],
    ["0", "a", "1", "0'", "1", "0'", "1", "1"],
    ["0", "b", "0'", "1", "0'", "1", "1", "1"],
    ["0", "1'+a", "1", "0'", "1", "1", "1", "1"],
    ["0", "1'+b", "0'", "1", "1", "1", "1", "1"],
    ["0", "0'", "1", "1", "1", "1", "1", "1"],
    ["0", "1", "1", "1", "1", "1", "1", "1"],
]

A2_ORDER = ["0", "1'", "1"]
A2_ADD = [
    ["0", "1'", "1"],
    ["1'", "1'", "0"],
    ["1", "0", "1"],
]
A2_COMP = [
    ["0", "0", "0"],
    ["0", "1'", "1"],
    ["0", "1", "1'"],
]
A2_NEG = ["0", "1", "1'"]

A4_ORDER = Z3_ORDER
A4_COMP = [
    ["{}"] * 8,
    ["{}", "{0}", "{1}", "{2}", "{0,1}", "{0,2}", "{1,2}", "{0,1,2}"],
    ["{}", "{1}", "{0}", "{}", "{0,1}", "{1}", "{0}", "{0,1}"],
    ["{}", "{2}", "{}", "{0}", "{2}", "{0,2}", "{0}", "{0,2}"],
    ["{}", "{0,1}", "{0,1}", "{2}", "{0,1}", "{0,1,2}", "{0,1,2}", "{0,1,2}"],
    ["{}", "{0,2}", "{1}", "{0,2}", "{0,1,2}", "{0,2}", "{0,1,2}", "{0,1,2}"],
    ["{}", "{1,2}", "{0}", "{0}", "{0,1,2}", "{0,1,2}", "{0}", "{0,1,2}"],
    ["{}", "{0,1,2}", "{0,1}", "{0,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}"],
]

B10_ORDER = M3_ORDER
B10_COMP = [
    ["0", "0", "0'", "0'"],
    ["0", "1'", "0'", "1"],
    ["0'", "0'", "0'", "0'"],
    ["0'", "1", "0'", "1"],
]

# Changed relative products in A9 relative to the Z3 complex algebra:
# rows are the singletons, columns the doubletons.
A9_DIFF_ROWS = ["{0}", "{1}", "{2}"]
A9_DIFF_COLS = ["{0,1}", "{0,2}", "{1,2}"]
A9_DIFF_COMP = [
    ["{0,1}", "{0,2}", "{1,2}"],
    ["{0,2}", "{1,2}", "{0,1}"],
    ["{1,2}", "{0,1}", "{0,2}"],
]
# A9 converse: the identity map except that the doubletons containing the
# group unit are interchanged.
A9_CONV_SWAP = ("{0,1}", "{0,2}")

# Changed relative products in B9 relative to D.
B9_DIFF_ROWS = ["1'+a", "1'+b"]
B9_DIFF_COLS = ["a", "b"]
B9_DIFF_COMP = [
    ["0'", "1"],
    ["1", "0'"],
]
B9_CONV_SWAP = ("1'+a", "1'+b")


def index_map(a: FiniteAlgebra) -> dict:
    if a.names is None:
        raise ValueError("golden comparison needs a named algebra")
    return {name: i for i, name in enumerate(a.names)}


def compare_table(a: FiniteAlgebra, table: str, order, rows,
                  col_order=None) -> list[tuple]:
    """Cell-for-cell comparison of a binary table; returns mismatches as
    (row-name, col-name, got, expected)."""
    idx = index_map(a)
    cols = col_order if col_order is not None else order
    op = getattr(a, table)
    bad = []
    for rn, row in zip(order, rows):
        for cn, want in zip(cols, row):
            got = op[idx[rn]][idx[cn]]
            if got != idx[want]:
                bad.append((rn, cn, a.names[got], want))
    return bad


def compare_vector(a: FiniteAlgebra, table: str, order, values) -> list[tuple]:
    idx = index_map(a)
    op = getattr(a, table)
    bad = []
    for rn, want in zip(order, values):
        got = op[idx[rn]]
        if got != idx[want]:
            bad.append((rn, a.names[got], want))
    return bad
