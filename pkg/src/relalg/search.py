"""Exhaustive search for finite algebras constrained by sentences.

The engine enumerates operation tables cell by cell (decision order:
identity constant, complement, converse, addition row-major, relative
multiplication row-major) and prunes with ground-instance propagation:
every sentence in ``must_hold`` is instantiated at every tuple of
elements, and an instance is re-checked whenever a cell it last read
changes.  A violated instance with all of its cells decided cuts the
branch; ``must_fail`` sentences are only tested on complete tables.

``naive_enumerate`` is an independent brute-force oracle used to
cross-check the backtracking engine at tiny sizes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

from .algebra import (FiniteAlgebra, automorphism_count, canonical_form,
                      make_algebra)
from .axioms import axiom_sentence
from .terms import (Add, Biconditional, Comp, Conv, Equation, IdentConst,
                    Inclusion, Meet, Neg, OneConst, QuasiEquation, Sentence,
                    Term, Var, ZeroConst, check_validity, free_vars)


@dataclass(frozen=True)
class SearchSpec:
    size: int
    must_hold: tuple[Sentence, ...]
    must_fail: tuple[Sentence, ...] = ()
    up_to_iso: bool = False
    node_limit: int | None = None
    propagate: bool = True

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("size must be at least 1")
        if self.up_to_iso and self.size > 8:
            raise ValueError("up-to-isomorphism search limited to size <= 8")


@dataclass
class SearchResult:
    models: list[FiniteAlgebra]
    labeled_count: int
    iso_class_count: int
    exhaustive: bool
    nodes_explored: int


# --- cell layout ------------------------------------------------------------
# 0: ident, 1..n: neg, n+1..2n: conv, then add (n*n), then comp (n*n).

def _layout(n):
    ident = 0
    neg0 = 1
    conv0 = 1 + n
    add0 = 1 + 2 * n
    comp0 = 1 + 2 * n + n * n
    total = 1 + 2 * n + 2 * n * n
    return ident, neg0, conv0, add0, comp0, total


class _Blocked(Exception):
    """Raised when evaluation hits an undecided cell."""

    def __init__(self, cell):
        self.cell = cell


class _Instance:
    """One ground instance of a must-hold sentence.

    check() evaluates against the partial cell array, recording every cell
    it reads; the engine subscribes the instance to those cells so that it
    is re-evaluated whenever any of them changes.
    """

    __slots__ = ("sentence", "env", "version", "reads")

    def __init__(self, sentence, env):
        self.sentence = sentence
        self.env = env
        self.version = 0
        self.reads: list[int] = []

    def check(self, eng):
        """Returns True, False, or None (blocked); ``self.reads`` holds the
        cells consulted, including the blocking cell if any."""
        self.reads = []
        try:
            return self._sent(self.sentence, eng)
        except _Blocked as b:
            self.reads.append(b.cell)
            return None

    def _cell(self, eng, c):
        self.reads.append(c)
        v = eng.cells[c]
        if v is None:
            raise _Blocked(c)
        return v

    def _term(self, t, eng):
        n = eng.n
        if type(t) is Var:
            return self.env[t.name]
        if type(t) is IdentConst:
            return self._cell(eng, eng.ident_cell)
        if type(t) is OneConst:
            i = self._cell(eng, eng.ident_cell)
            ni = self._cell(eng, eng.neg0 + i)
            return self._cell(eng, eng.add0 + i * n + ni)
        if type(t) is ZeroConst:
            i = self._cell(eng, eng.ident_cell)
            ni = self._cell(eng, eng.neg0 + i)
            one = self._cell(eng, eng.add0 + i * n + ni)
            return self._cell(eng, eng.neg0 + one)
        if type(t) is Neg:
            return self._cell(eng, eng.neg0 + self._term(t.child, eng))
        if type(t) is Conv:
            return self._cell(eng, eng.conv0 + self._term(t.child, eng))
        if type(t) is Add:
            x = self._term(t.left, eng)
            y = self._term(t.right, eng)
            return self._cell(eng, eng.add0 + x * n + y)
        if type(t) is Comp:
            x = self._term(t.left, eng)
            y = self._term(t.right, eng)
            return self._cell(eng, eng.comp0 + x * n + y)
        if type(t) is Meet:
            nx = self._cell(eng, eng.neg0 + self._term(t.left, eng))
            ny = self._cell(eng, eng.neg0 + self._term(t.right, eng))
            return self._cell(eng, eng.neg0 + self._cell(eng, eng.add0 + nx * n + ny))
        raise TypeError(f"not a term: {t!r}")

    def _atomic(self, s, eng):
        if type(s) is Equation:
            return self._term(s.lhs, eng) == self._term(s.rhs, eng)
        if type(s) is Inclusion:
            x = self._term(s.lhs, eng)
            y = self._term(s.rhs, eng)
            return self._cell(eng, eng.add0 + x * eng.n + y) == y
        raise TypeError(f"not an atomic sentence: {s!r}")

    def _sent(self, s, eng):
        if type(s) in (Equation, Inclusion):
            return self._atomic(s, eng)
        if type(s) is QuasiEquation:
            blocked = None
            for a in s.antecedents:
                try:
                    if not self._atomic(a, eng):
                        return True
                except _Blocked as b:
                    blocked = b
            if blocked is not None:
                raise blocked
            return self._atomic(s.consequent, eng)
        if type(s) is Biconditional:
            return self._atomic(s.left, eng) == self._atomic(s.right, eng)
        raise TypeError(f"not a sentence: {s!r}")


class _Engine:
    """Backtracking over a fixed variable order with watch-list propagation."""

    def __init__(self, n, must_hold, propagate=True):
        self.n = n
        (self.ident_cell, self.neg0, self.conv0,
         self.add0, self.comp0, self.total) = _layout(n)
        self.cells: list[int | None] = [None] * self.total
        self.watch: list[list] = [[] for _ in range(self.total)]
        self.propagate = propagate
        self.instances = []
        for s in must_hold:
            names = sorted(free_vars(s))
            for values in product(range(n), repeat=len(names)):
                self.instances.append(_Instance(s, dict(zip(names, values))))
        # derived cells: target -> (dep cells, all at once, value = OR of deps)
        self.derived_by_dep: dict[int, list] = {}
        self.derived_specs: list[tuple[int, tuple[int, ...]]] = []
        # cells preset before the search never change, so watching them
        # would only leak subscriptions; prime() records which cells can.
        self.mutable: list[bool] = [True] * self.total

    def add_derived(self, target, deps):
        spec = (target, tuple(deps))
        self.derived_specs.append(spec)
        for d in deps:
            self.derived_by_dep.setdefault(d, []).append(spec)

    def _subscribe(self, inst):
        inst.version += 1
        for c in set(inst.reads):
            if self.mutable[c]:
                self.watch[c].append((inst, inst.version))

    def _recheck(self, inst):
        """Re-evaluate and re-subscribe; returns False on violation."""
        result = inst.check(self)
        self._subscribe(inst)
        return result is not False

    def prime(self):
        """Evaluate every instance once against the initial (fixed) cells.
        Returns False if something is already violated."""
        self.mutable = [v is None for v in self.cells]
        ok = True
        for inst in self.instances:
            if not self._recheck(inst):
                ok = False
        return ok

    def set_cell(self, cell, value, trail):
        """Assign a cell, fill any now-determined derived cells, and run the
        watchers of everything that changed.  Returns False on conflict."""
        queue = [cell]
        self.cells[cell] = value
        trail.append(cell)
        qi = 0
        while qi < len(queue):
            c = queue[qi]
            qi += 1
            for target, deps in self.derived_by_dep.get(c, ()):
                if self.cells[target] is not None:
                    continue
                acc = 0
                for d in deps:
                    v = self.cells[d]
                    if v is None:
                        acc = None
                        break
                    acc |= v
                if acc is not None:
                    self.cells[target] = acc
                    trail.append(target)
                    queue.append(target)
        if not self.propagate:
            return True
        for c in queue:
            watchers = self.watch[c]
            if not watchers:
                continue
            self.watch[c] = []
            conflict = False
            for inst, version in watchers:
                if version != inst.version:
                    continue
                # re-subscribe even on violation so the instance keeps
                # watching after the branch is undone
                if not self._recheck(inst):
                    conflict = True
            if conflict:
                return False
        return True

    def undo(self, trail):
        for c in trail:
            self.cells[c] = None

    def complete_check(self):
        """Full re-verification once every cell is decided.  Leaves the
        watch subscriptions untouched."""
        for inst in self.instances:
            if inst.check(self) is not True:
                return False
        return True

    def snapshot(self) -> FiniteAlgebra:
        n = self.n
        cells = self.cells
        add = [[cells[self.add0 + i * n + j] for j in range(n)] for i in range(n)]
        comp = [[cells[self.comp0 + i * n + j] for j in range(n)] for i in range(n)]
        neg = [cells[self.neg0 + i] for i in range(n)]
        conv = [cells[self.conv0 + i] for i in range(n)]
        return make_algebra(n, add, neg, comp, conv, cells[self.ident_cell])


def _run(spec: SearchSpec, eng: _Engine, variables, ident_domain) -> SearchResult:
    """DFS over ``variables`` (list of cell ids); collect complete tables
    that satisfy must_hold and falsify every must_fail sentence."""
    n = spec.size
    models: list[FiniteAlgebra] = []
    seen_forms: dict[bytes, FiniteAlgebra] = {}
    nodes = 0
    exhausted = True

    if not eng.prime():
        return SearchResult([], 0, 0, True, 0)

    def accept():
        if not eng.complete_check():
            return
        alg = eng.snapshot()
        for s in spec.must_fail:
            if check_validity(alg, s) is None:
                return
        if spec.up_to_iso:
            form = canonical_form(alg)
            if form not in seen_forms:
                seen_forms[form] = alg
        else:
            models.append(alg)

    limit = spec.node_limit

    def dfs(depth):
        nonlocal nodes, exhausted
        if not exhausted:
            return
        nodes += 1
        if limit is not None and nodes > limit:
            exhausted = False
            return
        if depth == len(variables):
            accept()
            return
        cell = variables[depth]
        if eng.cells[cell] is not None:  # already fixed or derived
            dfs(depth + 1)
            return
        domain = ident_domain if cell == eng.ident_cell else range(n)
        for value in domain:
            trail: list[int] = []
            if eng.set_cell(cell, value, trail):
                dfs(depth + 1)
            eng.undo(trail)
            if not exhausted:
                return

    dfs(0)

    if spec.up_to_iso:
        models = sorted(seen_forms.items())
        models = [alg for _, alg in models]
        iso_classes = len(models)
        labeled = sum(math.factorial(n) // automorphism_count(m) for m in models)
    else:
        labeled = len(models)
        iso_classes = len({canonical_form(m) for m in models}) if n <= 8 else labeled
    return SearchResult(models, labeled, iso_classes, exhausted, nodes)


def search(spec: SearchSpec) -> SearchResult:
    """Generic cell-by-cell search.  With ``up_to_iso`` the identity is
    pinned to element 0 (every algebra has such an isomorph) and leaves are
    deduplicated by canonical form."""
    n = spec.size
    eng = _Engine(n, spec.must_hold, spec.propagate)
    variables = [eng.ident_cell]
    variables += [eng.neg0 + i for i in range(n)]
    variables += [eng.conv0 + i for i in range(n)]
    variables += [eng.add0 + i for i in range(n * n)]
    variables += [eng.comp0 + i for i in range(n * n)]
    ident_domain = [0] if spec.up_to_iso else range(n)
    return _run(spec, eng, variables, ident_domain)


def _popcount_reps(n):
    """One identity candidate per atom-count: masks 0, 1, 3, 7, ...  Any
    other mask is carried to one of these by an atom permutation, which is
    a Boolean-part automorphism."""
    reps = [0]
    mask = 0
    while mask != n - 1:
        mask = mask << 1 | 1
        reps.append(mask)
    return reps


def boolean_guided_search(spec: SearchSpec) -> SearchResult:
    """Search exploiting that R1-R3 force a Boolean skeleton.

    Sizes that are not powers of two are immediately empty.  Otherwise the
    Boolean part is fixed to the bitmask algebra (the unique Boolean algebra
    of that size up to isomorphism) and only comp, conv, and ident are
    enumerated.  With R8 (R8p) held, comp rows (columns) at non-atomic
    arguments are derived by additivity; with R9 held, converse at
    non-atomic arguments is derived the same way.
    """
    for rid in ("R1", "R2", "R3"):
        if axiom_sentence(rid) not in spec.must_hold:
            raise ValueError("boolean_guided_search needs R1, R2, R3 in must_hold")
    n = spec.size
    if n & (n - 1):
        return SearchResult([], 0, 0, True, 0)

    eng = _Engine(n, spec.must_hold, spec.propagate)
    for i in range(n):
        eng.cells[eng.neg0 + i] = i ^ (n - 1)
        for j in range(n):
            eng.cells[eng.add0 + i * n + j] = i | j
    atoms = [1 << b for b in range((n - 1).bit_length())]
    composites = [x for x in range(n) if x not in atoms and x != 0]

    gen_rows = axiom_sentence("R8") in spec.must_hold
    gen_cols = not gen_rows and axiom_sentence("R8p") in spec.must_hold
    gen_conv = axiom_sentence("R9") in spec.must_hold

    comp_free = list(range(n * n))
    if gen_rows:
        comp_free = [i * n + j for i in [0] + atoms for j in range(n)]
        for x in composites:
            for j in range(n):
                deps = [eng.comp0 + p * n + j for p in atoms if x & p]
                eng.add_derived(eng.comp0 + x * n + j, deps)
    elif gen_cols:
        comp_free = [i * n + j for i in range(n) for j in [0] + atoms]
        for y in composites:
            for i in range(n):
                deps = [eng.comp0 + i * n + q for q in atoms if y & q]
                eng.add_derived(eng.comp0 + i * n + y, deps)

    conv_free = list(range(n))
    if gen_conv:
        conv_free = [0] + atoms
        for x in composites:
            deps = [eng.conv0 + p for p in atoms if x & p]
            eng.add_derived(eng.conv0 + x, deps)

    variables = [eng.ident_cell]
    variables += [eng.conv0 + i for i in conv_free]
    variables += [eng.comp0 + c for c in comp_free]
    ident_domain = _popcount_reps(n) if spec.up_to_iso else range(n)
    return _run(spec, eng, variables, ident_domain)


def naive_enumerate(spec: SearchSpec) -> SearchResult:
    """Brute-force oracle: materialize every labeled structure of the given
    size and test the sentences directly.  Only sane for size <= 2."""
    n = spec.size
    count = 0
    models = []
    vectors = list(product(range(n), repeat=n))
    matrices = list(product(vectors, repeat=n))
    for add in matrices:
        for neg in vectors:
            for comp in matrices:
                for conv in vectors:
                    for ident in range(n):
                        alg = make_algebra(n, add, neg, comp, conv, ident)
                        if any(check_validity(alg, s) is not None
                               for s in spec.must_hold):
                            continue
                        if any(check_validity(alg, s) is None
                               for s in spec.must_fail):
                            continue
                        count += 1
                        models.append(alg)
    iso = len({canonical_form(m) for m in models}) if n <= 8 else count
    return SearchResult(models, count, iso, True, count)


# --- minimality reports -----------------------------------------------------

@dataclass
class SizeOutcome:
    size: int
    model_count: int
    exhaustive: bool
    skipped_reason: str | None = None
    nodes: int = 0


@dataclass
class MinimalityReport:
    target: str
    system: tuple[str, ...]
    claimed_size: int
    outcomes: list[SizeOutcome] = field(default_factory=list)
    certified: bool = False

    @property
    def confirmed(self) -> bool:
        return self.certified and all(
            o.model_count == 0 and (o.exhaustive or o.skipped_reason)
            for o in self.outcomes)


def verify_minimality(target: str, system, claimed_size: int,
                      certificate: FiniteAlgebra | None = None,
                      node_limit: int | None = None) -> MinimalityReport:
    """Search every admissible size below ``claimed_size`` for independence
    models of ``target`` within ``system`` (expecting none) and confirm the
    certificate algebra at the claimed size."""
    if claimed_size > 8:
        raise ValueError("minimality verification limited to claimed size <= 8")
    must_hold = tuple(axiom_sentence(i) for i in system if i != target)
    must_fail = (axiom_sentence(target),)
    boolean_ok = all(axiom_sentence(i) in must_hold for i in ("R1", "R2", "R3"))
    report = MinimalityReport(target, tuple(system), claimed_size)
    for size in range(1, claimed_size):
        if boolean_ok and size & (size - 1):
            report.outcomes.append(SizeOutcome(
                size, 0, True, "not a power of two: no Boolean skeleton"))
            continue
        spec = SearchSpec(size, must_hold, must_fail, up_to_iso=True,
                          node_limit=node_limit)
        if boolean_ok:
            res = boolean_guided_search(spec)
        else:
            res = search(spec)
        report.outcomes.append(SizeOutcome(
            size, res.iso_class_count, res.exhaustive, None, res.nodes_explored))
    if certificate is not None:
        from .axioms import is_independence_model
        report.certified = (certificate.size == claimed_size and
                            is_independence_model(certificate, system, target))
    return report
