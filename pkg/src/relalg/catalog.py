"""Constructors for every algebra used in the independence arguments.

Powerset-based algebras encode subsets as bitmasks: element i of a complex
algebra over a k-element base set is the subset {j : i >> j & 1}.  Boolean
algebras with k atoms use the same encoding with one bit per atom.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraError, FiniteAlgebra, make_algebra
from .axioms import TARSKI, satisfies


@dataclass(frozen=True)
class GroupSpec:
    """A finite group given by tables; validated at construction."""

    size: int
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    unit: int

    def __post_init__(self):
        n, mul, inv, e = self.size, self.mul, self.inv, self.unit
        if len(mul) != n or any(len(row) != n for row in mul) or len(inv) != n:
            raise AlgebraError("group tables have wrong dimensions")
        for x in range(n):
            if mul[e][x] != x or mul[x][e] != x:
                raise AlgebraError("unit is not a two-sided identity")
            if mul[x][inv[x]] != e or mul[inv[x]][x] != e:
                raise AlgebraError("inv is not a two-sided inverse")
            for y in range(n):
                for z in range(n):
                    if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                        raise AlgebraError("group operation is not associative")


@dataclass(frozen=True)
class PartialGroupoidSpec:
    """A partial binary operation with unit and total inverse.  Undefined
    products are represented by None."""

    size: int
    mul: tuple[tuple[int | None, ...], ...]
    inv: tuple[int, ...]
    unit: int

    def __post_init__(self):
        n, mul, inv, e = self.size, self.mul, self.inv, self.unit
        if len(mul) != n or any(len(row) != n for row in mul) or len(inv) != n:
            raise AlgebraError("partial groupoid tables have wrong dimensions")
        for x in range(n):
            if mul[e][x] != x or mul[x][e] != x:
                raise AlgebraError("unit must act as a two-sided identity where defined")
            if not 0 <= inv[x] < n:
                raise AlgebraError("inv entry out of range")


def cyclic_group(n: int) -> GroupSpec:
    mul = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    inv = tuple((-i) % n for i in range(n))
    return GroupSpec(n, mul, inv, 0)


def boolean_group(k: int) -> GroupSpec:
    """Elementary abelian 2-group of order 2**k (every element self-inverse)."""
    n = 1 << k
    mul = tuple(tuple(i ^ j for j in range(n)) for i in range(n))
    return GroupSpec(n, mul, tuple(range(n)), 0)


def _subset_name(mask: int, labels) -> str:
    if mask == 0:
        return "{}"
    return "{" + ",".join(str(labels[j]) for j in range(len(labels)) if mask >> j & 1) + "}"


def group_complex(g: GroupSpec) -> FiniteAlgebra:
    """Complex algebra of a group: powerset with element-wise product and
    inverse, identity = {unit}."""
    n = 1 << g.size
    comp = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            out = 0
            for f in range(g.size):
                if x >> f & 1:
                    for h in range(g.size):
                        if y >> h & 1:
                            out |= 1 << g.mul[f][h]
            comp[x][y] = out
    conv = []
    for x in range(n):
        out = 0
        for f in range(g.size):
            if x >> f & 1:
                out |= 1 << g.inv[f]
        conv.append(out)
    add = [[x | y for y in range(n)] for x in range(n)]
    neg = [x ^ (n - 1) for x in range(n)]
    names = [_subset_name(x, list(range(g.size))) for x in range(n)]
    return make_algebra(n, add, neg, comp, conv, 1 << g.unit, names)


def complex_of_partial_groupoid(p: PartialGroupoidSpec) -> FiniteAlgebra:
    """Same construction as group_complex; undefined products contribute
    nothing to the complex product."""
    n = 1 << p.size
    comp = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            out = 0
            for f in range(p.size):
                if x >> f & 1:
                    for h in range(p.size):
                        if y >> h & 1 and p.mul[f][h] is not None:
                            out |= 1 << p.mul[f][h]
            comp[x][y] = out
    conv = []
    for x in range(n):
        out = 0
        for f in range(p.size):
            if x >> f & 1:
                out |= 1 << p.inv[f]
        conv.append(out)
    add = [[x | y for y in range(n)] for x in range(n)]
    neg = [x ^ (n - 1) for x in range(n)]
    names = [_subset_name(x, list(range(p.size))) for x in range(n)]
    return make_algebra(n, add, neg, comp, conv, 1 << p.unit, names)


def _boolean_names(k: int, atom_labels=None) -> list[str]:
    if atom_labels is None:
        atom_labels = [f"a{j}" for j in range(k)]
    names = []
    for mask in range(1 << k):
        if mask == 0:
            names.append("0")
        elif mask == (1 << k) - 1:
            names.append("1")
        else:
            names.append("+".join(atom_labels[j] for j in range(k) if mask >> j & 1))
    return names


def boolean_ra(k: int = 1) -> FiniteAlgebra:
    """Boolean relation algebra on 2**k elements: r;s = r.s, r^ = r, 1' = 1."""
    n = 1 << k
    add = [[x | y for y in range(n)] for x in range(n)]
    neg = [x ^ (n - 1) for x in range(n)]
    comp = [[x & y for y in range(n)] for x in range(n)]
    conv = list(range(n))
    return make_algebra(n, add, neg, comp, conv, n - 1, _boolean_names(k))


def m3() -> FiniteAlgebra:
    """The minimal set relation algebra on a three-element set.  Elements
    are bitmasks over the atoms 1' (bit 0) and 0' (bit 1)."""
    comp = [
        [0, 0, 0, 0],
        [0, 1, 2, 3],
        [0, 2, 3, 3],
        [0, 3, 3, 3],
    ]
    add = [[x | y for y in range(4)] for x in range(4)]
    neg = [x ^ 3 for x in range(4)]
    return make_algebra(4, add, neg, comp, [0, 1, 2, 3], 1, ["0", "1'", "0'", "1"])


def z3_complex() -> FiniteAlgebra:
    return group_complex(cyclic_group(3))


def lyndon_d() -> FiniteAlgebra:
    """The eight-element algebra with atoms 1', a, b where a;a = b;b = 1 and
    a;b = b;a = 0'; converse is the identity.  Bits: 1'=1, a=2, b=4."""
    atom_comp = {
        (1, 1): 1, (1, 2): 2, (1, 4): 4,
        (2, 1): 2, (2, 2): 7, (2, 4): 6,
        (4, 1): 4, (4, 2): 6, (4, 4): 7,
    }
    comp = [[0] * 8 for _ in range(8)]
    for x in range(8):
        for y in range(8):
            out = 0
            for p in (1, 2, 4):
                if x & p:
                    for q in (1, 2, 4):
                        if y & q:
                            out |= atom_comp[(p, q)]
            comp[x][y] = out
    add = [[x | y for y in range(8)] for x in range(8)]
    neg = [x ^ 7 for x in range(8)]
    names = ["0", "1'", "a", "1'+a", "b", "1'+b", "0'", "1"]
    return make_algebra(8, add, neg, comp, list(range(8)), 1, names)


def a1(k: int = 1) -> FiniteAlgebra:
    """Breaks R1: addition is left-hand projection over a Boolean group."""
    if k < 1:
        raise AlgebraError("a1 needs a group of order at least 2")
    g = boolean_group(k)
    n = g.size
    add = [[x] * n for x in range(n)]
    names = [f"g{x}" for x in range(n)]
    return make_algebra(n, add, list(range(n)), g.mul, g.inv, g.unit, names)


def a2() -> FiniteAlgebra:
    """Breaks R2: the unique three-element independence model.  Elements
    in table order 0, 1', 1."""
    add = [
        [0, 1, 2],
        [1, 1, 0],
        [2, 0, 2],
    ]
    comp = [
        [0, 0, 0],
        [0, 1, 2],
        [0, 2, 1],
    ]
    return make_algebra(3, add, [0, 2, 1], comp, [0, 1, 2], 1, ["0", "1'", "1"])


def a3(k: int = 1) -> FiniteAlgebra:
    """Breaks R3: a Boolean relation algebra with complement replaced by
    the identity function."""
    base = boolean_ra(k)
    return make_algebra(base.size, base.add, list(range(base.size)),
                        base.comp, base.conv, base.ident, base.names)


def mckinsey_partial_groupoid() -> PartialGroupoidSpec:
    """Three elements, 0 the unit, 1*1 = 2*2 = 0, 1*2 and 2*1 undefined."""
    mul = (
        (0, 1, 2),
        (1, 0, None),
        (2, None, 0),
    )
    return PartialGroupoidSpec(3, mul, (0, 1, 2), 0)


def a4() -> FiniteAlgebra:
    """Breaks R4: McKinsey's complex algebra of a partial groupoid."""
    return complex_of_partial_groupoid(mckinsey_partial_groupoid())


def a5(k: int = 1, ident: int = 1) -> FiniteAlgebra:
    """Breaks R5: relative multiplication is constantly zero."""
    base = boolean_ra(k)
    n = base.size
    comp = [[0] * n for _ in range(n)]
    return make_algebra(n, base.add, base.neg, comp, base.conv, ident, base.names)


def b5(base: FiniteAlgebra | None = None, ident: int | None = None) -> FiniteAlgebra:
    """Breaks R5 differently: a relation algebra with the identity constant
    pointed at the wrong element (default: the zero element)."""
    if base is None:
        base = m3()
    if ident is None:
        ident = 0
    if ident == base.ident:
        raise AlgebraError("b5 needs an ident different from the true identity")
    return make_algebra(base.size, base.add, base.neg, base.comp, base.conv,
                        ident, base.names)


def a6(base: FiniteAlgebra | None = None) -> FiniteAlgebra:
    """Breaks R6: converse maps everything to zero."""
    if base is None:
        base = m3()
    n = base.size
    zero = base.neg[base.add[base.ident][base.neg[base.ident]]]
    return make_algebra(n, base.add, base.neg, base.comp, [zero] * n,
                        base.ident, base.names)


def a7(k: int = 2, ident: int = 1) -> FiniteAlgebra:
    """Breaks R7: r;s = r when s is the identity element, else 0, over a
    Boolean algebra with at least four elements; ident must avoid 0 and 1."""
    if k < 2:
        raise AlgebraError("a7 needs a Boolean base with at least 4 elements")
    base = boolean_ra(k)
    n = base.size
    if ident in (0, n - 1):
        raise AlgebraError("a7 ident must differ from the Boolean 0 and 1")
    comp = [[x if y == ident else 0 for y in range(n)] for x in range(n)]
    return make_algebra(n, base.add, base.neg, comp, base.conv, ident, base.names)


def is_symmetric_integral(a: FiniteAlgebra) -> bool:
    """Relation algebra, converse the identity map, size >= 2, and
    r;s = 0 only when r = 0 or s = 0."""
    if a.size < 2:
        return False
    if any(a.conv[x] != x for x in range(a.size)):
        return False
    if not satisfies(a, TARSKI):
        return False
    zero = a.neg[a.add[a.ident][a.neg[a.ident]]]
    for r in range(a.size):
        for s in range(a.size):
            if a.comp[r][s] == zero and r != zero and s != zero:
                return False
    return True


def a8(base: FiniteAlgebra | None = None) -> FiniteAlgebra:
    """Breaks R8: one cell of a symmetric integral relation algebra is
    changed so that 0;0 = 1."""
    if base is None:
        base = boolean_ra(1)
    if not is_symmetric_integral(base):
        raise AlgebraError("a8 needs a symmetric integral relation algebra")
    zero = base.neg[base.add[base.ident][base.neg[base.ident]]]
    one = base.neg[zero]
    comp = [list(row) for row in base.comp]
    comp[zero][zero] = one
    return make_algebra(base.size, base.add, base.neg, comp, base.conv,
                        base.ident, base.names)


def a9() -> FiniteAlgebra:
    """Breaks R9: the complex algebra of Z3 with converse fixing the
    singletons {1} and {2}, compensated by replacing r;s with (inverse of
    r);s whenever r is a singleton and s a doubleton."""
    c = z3_complex()
    n = c.size
    conv = list(range(n))
    conv[0b011], conv[0b101] = 0b101, 0b011  # swap {0,1} and {0,2}
    singletons = [1 << g for g in range(3)]
    doubletons = [0b011, 0b101, 0b110]
    comp = [list(row) for row in c.comp]
    for r in singletons:
        for s in doubletons:
            comp[r][s] = c.comp[c.conv[r]][s]
    return make_algebra(n, c.add, c.neg, comp, conv, c.ident, c.names)


def a10(k: int = 1) -> FiniteAlgebra:
    """Breaks R10: relative multiplication is Boolean addition, converse the
    identity, and the identity constant is the Boolean zero."""
    base = boolean_ra(k)
    n = base.size
    return make_algebra(n, base.add, base.neg, base.add, base.conv, 0, base.names)


def b9() -> FiniteAlgebra:
    """Breaks R9 while keeping the left-hand distributive law: Lyndon's D
    with converse interchanging 1'+a and 1'+b, compensated by r;s =
    (r converse) composed with s for r in {1'+a, 1'+b} and s in {a, b}."""
    d = lyndon_d()
    conv = list(range(8))
    conv[0b011], conv[0b101] = 0b101, 0b011  # swap 1'+a and 1'+b
    comp = [list(row) for row in d.comp]
    for r in (0b011, 0b101):
        for s in (0b010, 0b100):
            comp[r][s] = d.comp[conv[r]][s]
    return make_algebra(8, d.add, d.neg, comp, conv, d.ident, d.names)


def b10() -> FiniteAlgebra:
    """Breaks R10: M3 with relative multiplication by 0' forced to 0' and
    0;1 = 1;0 = 0'."""
    base = m3()
    diver = 2
    comp = [list(row) for row in base.comp]
    for r in range(4):
        comp[r][diver] = diver
        comp[diver][r] = diver
    comp[0][3] = diver
    comp[3][0] = diver
    return make_algebra(4, base.add, base.neg, comp, base.conv, base.ident, base.names)


# --- the model registry -----------------------------------------------------

def _build_a6(base="m3"):
    return a6(build_model(base))


def _build_b5(base="m3", ident=0):
    return b5(build_model(base), int(ident))


def _build_a8(base="bra[k=1]"):
    return a8(build_model(base))


MODEL_BUILDERS = {
    "m3": m3,
    "z3c": z3_complex,
    "d": lyndon_d,
    "bra": lambda k=1: boolean_ra(int(k)),
    "a1": lambda k=1: a1(int(k)),
    "a2": a2,
    "a3": lambda k=1: a3(int(k)),
    "a4": a4,
    "a5": lambda k=1, ident=1: a5(int(k), int(ident)),
    "b5": _build_b5,
    "a6": _build_a6,
    "a7": lambda k=2, ident=1: a7(int(k), int(ident)),
    "a8": _build_a8,
    "a9": a9,
    "a10": lambda k=1: a10(int(k)),
    "b9": b9,
    "b10": b10,
}


def parse_model_id(text: str):
    """Split a model id like "a7[k=2,ident=1]" into name and kwargs."""
    text = text.strip()
    if "[" not in text:
        return text, {}
    if not text.endswith("]"):
        raise AlgebraError(f"malformed model id {text!r}")
    name, _, params = text[:-1].partition("[")
    kwargs = {}
    for item in params.split(","):
        if not item:
            continue
        key, sep, value = item.partition("=")
        if not sep:
            raise AlgebraError(f"malformed parameter {item!r} in {text!r}")
        kwargs[key.strip()] = value.strip()
    return name, kwargs


def build_model(model_id: str) -> FiniteAlgebra:
    """Build a catalog model from its string id."""
    name, kwargs = parse_model_id(model_id)
    try:
        builder = MODEL_BUILDERS[name]
    except KeyError:
        raise AlgebraError(f"unknown model {name!r}") from None
    return builder(**kwargs)


def list_models() -> list[str]:
    return sorted(MODEL_BUILDERS)
