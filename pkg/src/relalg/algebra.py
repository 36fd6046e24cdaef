"""Finite algebras of the signature (+, -, ;, converse, identity).

An algebra is a set {0, ..., n-1} together with explicit operation tables.
Nothing here assumes that any axiom holds: the same representation is used
for genuine relation algebras and for deliberately broken structures.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations


class AlgebraError(ValueError):
    """Malformed tables, out-of-range entries, or size limits exceeded."""


@dataclass(frozen=True)
class FiniteAlgebra:
    """Operation tables for one finite structure.

    All tables are tuples of ints so values are hashable and safe to share.
    ``names`` is presentation-only; every operation works on indices.
    """

    size: int
    add: tuple[tuple[int, ...], ...]
    neg: tuple[int, ...]
    comp: tuple[tuple[int, ...], ...]
    conv: tuple[int, ...]
    ident: int
    names: tuple[str, ...] | None = None

    def name_of(self, x: int) -> str:
        if self.names is not None:
            return self.names[x]
        return str(x)


def _as_matrix(table, size, what) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(v) for v in row) for row in table)
    if len(rows) != size or any(len(row) != size for row in rows):
        raise AlgebraError(f"{what} table must be {size}x{size}")
    for row in rows:
        for v in row:
            if not 0 <= v < size:
                raise AlgebraError(f"{what} entry {v} out of range for size {size}")
    return rows


def _as_vector(table, size, what) -> tuple[int, ...]:
    row = tuple(int(v) for v in table)
    if len(row) != size:
        raise AlgebraError(f"{what} vector must have length {size}")
    for v in row:
        if not 0 <= v < size:
            raise AlgebraError(f"{what} entry {v} out of range for size {size}")
    return row


def make_algebra(size, add, neg, comp, conv, ident, names=None) -> FiniteAlgebra:
    """Validate tables and build a FiniteAlgebra.

    Raises AlgebraError on dimension mismatches, out-of-range entries,
    or duplicate display names.  No axiom is assumed or checked.
    """
    if size < 1:
        raise AlgebraError("size must be at least 1")
    add = _as_matrix(add, size, "add")
    comp = _as_matrix(comp, size, "comp")
    neg = _as_vector(neg, size, "neg")
    conv = _as_vector(conv, size, "conv")
    ident = int(ident)
    if not 0 <= ident < size:
        raise AlgebraError(f"ident {ident} out of range for size {size}")
    if names is not None:
        names = tuple(str(s) for s in names)
        if len(names) != size:
            raise AlgebraError("names vector has wrong length")
        if len(set(names)) != size:
            raise AlgebraError("names must be pairwise distinct")
    return FiniteAlgebra(size, add, neg, comp, conv, ident, names)


def derived_element(a: FiniteAlgebra, which: str) -> int:
    """The constants definable from identity: 1 = 1' + -1', 0 = -1, 0' = -1'."""
    if which == "one":
        return a.add[a.ident][a.neg[a.ident]]
    if which == "zero":
        return a.neg[derived_element(a, "one")]
    if which == "diversity":
        return a.neg[a.ident]
    raise ValueError(f"unknown derived element {which!r}")


def meet(a: FiniteAlgebra, x: int, y: int) -> int:
    """x . y = -(-x + -y), always computed from the tables."""
    return a.neg[a.add[a.neg[x]][a.neg[y]]]


def leq(a: FiniteAlgebra, x: int, y: int) -> bool:
    """x <= y iff x + y = y.  Taken literally; may not be a partial order."""
    return a.add[x][y] == y


def atoms(a: FiniteAlgebra) -> list[int]:
    """Minimal non-zero elements under the literal <= of the add table."""
    zero = derived_element(a, "zero")
    out = []
    for x in range(a.size):
        if x == zero:
            continue
        if any(y != zero and y != x and leq(a, y, x) for y in range(a.size)):
            continue
        out.append(x)
    return out


def sup(a: FiniteAlgebra, subset) -> int | None:
    """Least upper bound of ``subset`` under <=, or None if there is none.

    The sup of the empty set is the least element of the algebra, when one
    exists.  With a non-Boolean add table the result may be absent.
    """
    elems = list(subset)
    uppers = [u for u in range(a.size) if all(leq(a, x, u) for x in elems)]
    for u in uppers:
        if all(leq(a, u, v) for v in uppers):
            return u
    return None


def is_completely_distributive(a: FiniteAlgebra, which: str) -> bool:
    """Whether ; (or converse) distributes over all existing finite sups.

    Checks every subset (or pair of subsets) of the universe, so the size
    is capped to keep the enumeration tractable.
    """
    if a.size > 12:
        raise AlgebraError("complete distributivity check limited to size <= 12")
    if which not in ("comp", "conv"):
        raise ValueError(f"which must be 'comp' or 'conv', got {which!r}")
    universe = range(a.size)
    subsets = []
    for mask in range(1 << a.size):
        subsets.append([x for x in universe if mask >> x & 1])
    sups = [sup(a, s) for s in subsets]
    if which == "conv":
        for s, sx in zip(subsets, sups):
            if sx is None:
                continue
            image = {a.conv[x] for x in s}
            si = sup(a, image)
            if si is None or si != a.conv[sx]:
                return False
        return True
    for s, sx in zip(subsets, sups):
        if sx is None:
            continue
        for t, sy in zip(subsets, sups):
            if sy is None:
                continue
            prods = {a.comp[x][y] for x in s for y in t}
            sp = sup(a, prods)
            if sp is None or sp != a.comp[sx][sy]:
                return False
    return True


def relabel(a: FiniteAlgebra, perm) -> FiniteAlgebra:
    """Apply a permutation of indices to every table.  perm[i] is the new
    index of old element i."""
    p = tuple(perm)
    n = a.size
    inv = [0] * n
    for i, pi in enumerate(p):
        inv[pi] = i
    add = tuple(tuple(p[a.add[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
    comp = tuple(tuple(p[a.comp[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
    neg = tuple(p[a.neg[inv[i]]] for i in range(n))
    conv = tuple(p[a.conv[inv[i]]] for i in range(n))
    names = None
    if a.names is not None:
        names = tuple(a.names[inv[i]] for i in range(n))
    return FiniteAlgebra(n, add, neg, comp, conv, p[a.ident], names)


def find_isomorphism(a: FiniteAlgebra, b: FiniteAlgebra):
    """A permutation carrying every table of ``a`` onto ``b``, or None."""
    if a.size != b.size:
        return None
    n = a.size
    for p in permutations(range(n)):
        if p[a.ident] != b.ident:
            continue
        if all(p[a.neg[i]] == b.neg[p[i]] for i in range(n)) and \
           all(p[a.conv[i]] == b.conv[p[i]] for i in range(n)) and \
           all(p[a.add[i][j]] == b.add[p[i]][p[j]] for i in range(n) for j in range(n)) and \
           all(p[a.comp[i][j]] == b.comp[p[i]][p[j]] for i in range(n) for j in range(n)):
            return p
    return None


def _encode(a: FiniteAlgebra) -> bytes:
    flat = [a.size, a.ident]
    flat.extend(a.neg)
    flat.extend(a.conv)
    for row in a.add:
        flat.extend(row)
    for row in a.comp:
        flat.extend(row)
    return bytes(flat)


def canonical_form(a: FiniteAlgebra) -> bytes:
    """Lexicographically least table encoding over all relabelings.

    Two algebras have equal canonical forms iff they are isomorphic.
    Full permutation enumeration, so the size is capped at 8.
    """
    if a.size > 8:
        raise AlgebraError("canonical form limited to size <= 8")
    best = None
    for p in permutations(range(a.size)):
        enc = _encode(relabel(a, p))
        if best is None or enc < best:
            best = enc
    return best


def automorphism_count(a: FiniteAlgebra) -> int:
    n = a.size
    count = 0
    for p in permutations(range(n)):
        if p[a.ident] != a.ident:
            continue
        if all(p[a.neg[i]] == a.neg[p[i]] for i in range(n)) and \
           all(p[a.conv[i]] == a.conv[p[i]] for i in range(n)) and \
           all(p[a.add[i][j]] == a.add[p[i]][p[j]] for i in range(n) for j in range(n)) and \
           all(p[a.comp[i][j]] == a.comp[p[i]][p[j]] for i in range(n) for j in range(n)):
            count += 1
    return count


def to_json(a: FiniteAlgebra) -> str:
    """Serialize to the model file format.  Field order is fixed so the
    output is byte-stable for a given algebra."""
    doc: dict = {"size": a.size}
    if a.names is not None:
        doc["names"] = list(a.names)
    doc["add"] = [list(row) for row in a.add]
    doc["neg"] = list(a.neg)
    doc["comp"] = [list(row) for row in a.comp]
    doc["conv"] = list(a.conv)
    doc["ident"] = a.ident
    return json.dumps(doc, indent=1)


def from_json(text: str) -> FiniteAlgebra:
    doc = json.loads(text)
    return make_algebra(
        doc["size"], doc["add"], doc["neg"], doc["comp"], doc["conv"],
        doc["ident"], doc.get("names"),
    )
