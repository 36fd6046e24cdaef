"""The claim suite: every independence theorem, golden table, stated
counterexample, semantic lemma check, and minimality/uniqueness search,
bundled into one structured report.

Claim ids are stable strings of the form "paper.<section>.<short-name>";
the report is ordered by claim id, not by execution order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import __version__
from .algebra import FiniteAlgebra, find_isomorphism, to_json
from .axioms import (R_SYS, S_SYS, TARSKI, axiom_sentence, exists_right_identity,
                     failing_axioms, is_independence_model, satisfies,
                     status_vector)
from .catalog import build_model, list_models
from .search import (SearchResult, SearchSpec, boolean_guided_search, search,
                     verify_minimality)
from .terms import holds
from . import golden

PASS = "pass"
FAIL = "fail"
SKIP = "skipped-long-running"

KINDS = ("independence", "minimality", "uniqueness", "lemma-semantic",
         "table-golden", "extra-fact")


@dataclass
class Claim:
    claim_id: str
    description: str
    kind: str
    status: str
    seconds: float
    evidence: dict = field(default_factory=dict)


@dataclass
class Report:
    version: str
    claims: list[Claim]

    @property
    def overall(self) -> str:
        return FAIL if any(c.status == FAIL for c in self.claims) else PASS

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "overall": self.overall,
            "claims": [
                {
                    "id": c.claim_id,
                    "description": c.description,
                    "kind": c.kind,
                    "status": c.status,
                    "seconds": round(c.seconds, 3),
                    "evidence": c.evidence,
                }
                for c in self.claims
            ],
        }

    def render(self) -> str:
        tags = {PASS: "PASS", FAIL: "FAIL", SKIP: "SKIP"}
        lines = []
        for c in self.claims:
            lines.append(f"[{tags[c.status]}] {c.claim_id} ({c.seconds:.2f}s) {c.description}")
            if c.status == FAIL:
                lines.append(f"       evidence: {c.evidence}")
        counts = {s: sum(1 for c in self.claims if c.status == s) for s in tags}
        lines.append(f"overall: {self.overall} "
                     f"({counts[PASS]} passed, {counts[FAIL]} failed, {counts[SKIP]} skipped)")
        return "\n".join(lines)


def render_model(a: FiniteAlgebra, format: str = "ascii-table") -> str:
    """One operation table per operation, element names in index order, or
    the structured model-file form."""
    if format == "structured":
        return to_json(a)
    if format != "ascii-table":
        raise ValueError(f"unknown format {format!r}")
    names = a.names if a.names is not None else tuple(str(i) for i in range(a.size))
    w = max(len(s) for s in names)
    lines = [f"size: {a.size}", f"ident: {names[a.ident]}"]

    def row(label, entries):
        lines.append(f"{label.ljust(w)} : {' '.join(entries)}")

    for table in ("add", "comp"):
        lines.append(f"{table}:")
        op = getattr(a, table)
        for i in range(a.size):
            row(names[i], [names[v] for v in op[i]])
    for table in ("neg", "conv"):
        lines.append(f"{table}:")
        op = getattr(a, table)
        for i in range(a.size):
            row(names[i], [names[op[i]]])
    return "\n".join(lines)


# --- helpers ----------------------------------------------------------------

def _named_env(a: FiniteAlgebra, env: dict) -> dict:
    return {k: a.name_of(v) for k, v in sorted(env.items())}


def _independence_evidence(a: FiniteAlgebra, system, target):
    status = status_vector(a, system)
    ok = failing_axioms(status) == [target]
    witness = status.get(target)
    ev = {"failing": failing_axioms(status)}
    if witness is not None:
        ev["witness"] = _named_env(a, witness)
    return ok, ev


def _fails_at(a: FiniteAlgebra, axiom_id: str, names_env: dict):
    """The axiom must be false at exactly this (named) assignment."""
    idx = {name: i for i, name in enumerate(a.names)}
    env = {var: idx[name] for var, name in names_env.items()}
    return not holds(a, axiom_sentence(axiom_id), env)


def _search_result_evidence(res: SearchResult) -> dict:
    return {
        "labeled_count": res.labeled_count,
        "iso_class_count": res.iso_class_count,
        "exhaustive": res.exhaustive,
        "nodes_explored": res.nodes_explored,
    }


# The stated counterexamples: (axiom, model id, variable -> element name).
STATED_WITNESSES = [
    ("R2", "a2", {"r": "1'", "s": "1'", "t": "1"}),
    ("R4", "a4", {"r": "{1}", "s": "{2}", "t": "{2}"}),
    ("R9", "a9", {"r": "{0}", "s": "{2}"}),
    ("R8p", "a9", {"r": "{1}", "s": "{0}", "t": "{2}"}),
    ("R9", "b9", {"r": "1'", "s": "a"}),
    ("R8", "b9", {"r": "1'", "s": "a", "t": "b"}),
    ("R10", "b10", {"r": "0'", "s": "0'"}),
    ("R8", "a8", {"r": "0", "s": "1", "t": "0"}),  # in a8 the identity is 1
]

# Independence suites: (claim id, model id, system name, target).
_TARSKI_SUITE = [
    ("paper.s5.a1-r1-independence", "a1", "tarski", "R1"),
    ("paper.s6.a2-r2-independence", "a2", "tarski", "R2"),
    ("paper.sr3.a3-r3-independence", "a3", "tarski", "R3"),
    ("paper.s7.a4-r4-independence", "a4", "tarski", "R4"),
    ("paper.s8.a5-r5-independence", "a5", "tarski", "R5"),
    ("paper.sr6.a6-r6-independence", "a6", "tarski", "R6"),
    ("paper.s9.a7-r7-independence", "a7", "tarski", "R7"),
    ("paper.s10.a8-r8-independence", "a8", "tarski", "R8"),
    ("paper.s11.a9-r9-independence", "a9", "tarski", "R9"),
    ("paper.s12.a10-r10-independence", "a10", "tarski", "R10"),
]

_RSYS_SUITE = (
    [(f"paper.s14.rsys-r{n}-a{n}", f"a{n}", "r", f"R{n}") for n in (1, 2, 3, 4, 5, 6, 10)]
    + [
        ("paper.s14.rsys-r9-b9", "b9", "r", "R9"),
        ("paper.s14.rsys-r8p-a8", "a8", "r", "R8p"),
        ("paper.s14.rsys-r8p-a7", "a7", "r", "R8p"),
    ]
)

_SSYS_SUITE = (
    [(f"paper.s16.ssys-r{n}-a{n}", f"a{n}", "s", f"R{n}") for n in (1, 2, 3, 4, 5, 6, 10)]
    + [
        ("paper.s16.ssys-r8-b9", "b9", "s", "R8"),
        ("paper.s16.ssys-r8p-a7", "a7", "s", "R8p"),
    ]
)

_SYSTEMS = {"tarski": TARSKI, "r": R_SYS, "s": S_SYS}


def _lemma_implication(population, hypotheses, conclusions):
    """Every model satisfying all hypotheses must satisfy every conclusion."""
    applicable = 0
    for mid, a in population:
        if not satisfies(a, hypotheses):
            continue
        applicable += 1
        for c in conclusions:
            if not satisfies(a, (c,)):
                return False, {"model": mid, "violates": c}
    return True, {"population": len(population), "applicable": applicable}


def _lemma_equivalence(population, hypotheses, s1, s2):
    """Under the hypotheses, s1 and s2 must agree on every model."""
    applicable = 0
    for mid, a in population:
        if not satisfies(a, hypotheses):
            continue
        applicable += 1
        if satisfies(a, (s1,)) != satisfies(a, (s2,)):
            return False, {"model": mid, "disagree": [s1, s2]}
    return True, {"population": len(population), "applicable": applicable}


def _golden_claims(models):
    """Checks for part (a): constructed tables against the frozen reference
    tables; returns (claim id, description, check fn) triples."""
    def table_check(model_id, specs):
        def fn():
            a = models[model_id]
            bad = []
            for table, order, rows, cols in specs:
                if cols == "vector":
                    bad += [(table,) + t for t in golden.compare_vector(a, table, order, rows)]
                else:
                    bad += [(table,) + t for t in golden.compare_table(a, table, order, rows, cols)]
            return not bad, {"mismatches": bad[:10]}
        return fn

    def m3_extra():
        a = models["m3"]
        ok1, ev = table_check("m3", [("comp", golden.M3_ORDER, golden.M3_COMP, None)])()
        ok2 = all(a.conv[i] == i for i in range(a.size)) and a.name_of(a.ident) == "1'"
        if not ok2:
            ev["conv-or-ident"] = "wrong"
        return ok1 and ok2, ev

    def d_tables():
        a = models["d"]
        idx = golden.index_map(a)
        bad = []
        for (p, q), want in golden.D_ATOM_COMP.items():
            if a.comp[idx[p]][idx[q]] != idx[want]:
                bad.append(("atom-comp", p, q, want))
        bad += [("comp",) + t for t in golden.compare_table(a, "comp", golden.D_ORDER, golden.D_COMP)]
        if any(a.conv[i] != i for i in range(a.size)):
            bad.append(("conv", "not the identity map"))
        return not bad, {"mismatches": bad[:10]}

    def diff_check(model_id, base_id, diff_rows, diff_cols, diff_table,
                   conv_swap, expect_cells, expect_conv):
        def fn():
            a, base = models[model_id], models[base_id]
            idx = golden.index_map(a)
            bad = [t for t in golden.compare_table(a, "comp", diff_rows, diff_table, diff_cols)]
            changed = [(a.names[i], a.names[j]) for i in range(a.size)
                       for j in range(a.size) if a.comp[i][j] != base.comp[i][j]]
            conv_changed = [a.names[i] for i in range(a.size) if a.conv[i] != i]
            p, q = idx[conv_swap[0]], idx[conv_swap[1]]
            swap_ok = (a.conv[p] == q and a.conv[q] == p and
                       sorted(conv_changed) == sorted(conv_swap))
            base_conv_diff = sum(1 for i in range(a.size) if a.conv[i] != base.conv[i])
            ok = (not bad and len(changed) == expect_cells and swap_ok and
                  base_conv_diff == expect_conv)
            return ok, {"mismatches": bad[:10], "changed_comp_cells": changed,
                        "conv_swap_ok": swap_ok,
                        "conv_entries_changed_vs_base": base_conv_diff}
        return fn

    return [
        ("paper.s3.table1-m3", "M3 operation tables match the reference",
         m3_extra),
        ("paper.s3.tables2-3-z3-complex",
         "Z3 complex algebra comp and conv tables match the reference",
         table_check("z3c", [
             ("comp", golden.Z3_ORDER, golden.Z3_COMP, None),
             ("conv", golden.Z3_ORDER, golden.Z3_CONV, "vector"),
         ])),
        ("paper.s3.tables4-5-lyndon-d",
         "eight-element symmetric algebra D: atom table and full comp table",
         d_tables),
        ("paper.s6.table6-a2", "A2 add, comp, and complement tables match",
         table_check("a2", [
             ("add", golden.A2_ORDER, golden.A2_ADD, None),
             ("comp", golden.A2_ORDER, golden.A2_COMP, None),
             ("neg", golden.A2_ORDER, golden.A2_NEG, "vector"),
         ])),
        ("paper.s7.table8-a4", "A4 comp table matches the reference",
         table_check("a4", [("comp", golden.A4_ORDER, golden.A4_COMP, None)])),
        ("paper.s11.table9-a9-diff",
         "A9 differs from the Z3 complex algebra in exactly 6 comp cells "
         "plus the documented converse swap",
         diff_check("a9", "z3c", golden.A9_DIFF_ROWS, golden.A9_DIFF_COLS,
                    golden.A9_DIFF_COMP, golden.A9_CONV_SWAP, 6, 2)),
        ("paper.s12.table10-b10", "B10 comp table matches the reference",
         table_check("b10", [("comp", golden.B10_ORDER, golden.B10_COMP, None)])),
        ("paper.s14.table11-b9-diff",
         "B9 differs from D in exactly 4 comp cells plus the documented "
         "converse swap",
         diff_check("b9", "d", golden.B9_DIFF_ROWS, golden.B9_DIFF_COLS,
                    golden.B9_DIFF_COMP, golden.B9_CONV_SWAP, 4, 2)),
    ]


def run_verification_suite(include_long_running: bool = False,
                           long_node_limit: int | None = 50_000) -> Report:
    claims: list[Claim] = []
    models = {mid: build_model(mid) for mid in list_models()}

    def run(claim_id, description, kind, fn):
        start = time.perf_counter()
        try:
            ok, evidence = fn()
            status = PASS if ok else FAIL
        except Exception as exc:  # a crashing claim is a failing claim
            status, evidence = FAIL, {"error": f"{type(exc).__name__}: {exc}"}
        claims.append(Claim(claim_id, description, kind, status,
                            time.perf_counter() - start, evidence))

    def skip(claim_id, description, kind):
        claims.append(Claim(claim_id, description, kind, SKIP, 0.0,
                            {"hint": "rerun with long-running checks enabled"}))

    # (a) golden tables
    for cid, desc, fn in _golden_claims(models):
        run(cid, desc, "table-golden", fn)

    # (b)-(d) independence suites
    for suite in (_TARSKI_SUITE, _RSYS_SUITE, _SSYS_SUITE):
        for cid, mid, sysname, target in suite:
            run(cid, f"{mid} fails exactly {target} within {sysname}",
                "independence",
                lambda mid=mid, sysname=sysname, target=target:
                    _independence_evidence(models[mid], _SYSTEMS[sysname], target))

    # (e) extra facts
    run("paper.witness.stated-counterexamples",
        "every stated counterexample assignment falsifies its axiom",
        "extra-fact",
        lambda: (all(_fails_at(models[mid], ax, env)
                     for ax, mid, env in STATED_WITNESSES),
                 {"checked": [[ax, mid, env] for ax, mid, env in STATED_WITNESSES]}))
    run("paper.s11.a9-r8p-witness",
        "the left distributive law fails in a9 at the stated assignment",
        "extra-fact",
        lambda: (_fails_at(models["a9"], "R8p", {"r": "{1}", "s": "{0}", "t": "{2}"}),
                 {"witness": {"r": "{1}", "s": "{0}", "t": "{2}"}}))
    run("paper.s14.b9-r8-witness",
        "the right distributive law fails in b9 at the stated assignment",
        "extra-fact",
        lambda: (_fails_at(models["b9"], "R8", {"r": "1'", "s": "a", "t": "b"}),
                 {"witness": {"r": "1'", "s": "a", "t": "b"}}))
    run("paper.s12.b10-r10-independence",
        "b10 is an alternative independence model for R10",
        "extra-fact",
        lambda: _independence_evidence(models["b10"], TARSKI, "R10"))

    def b5_fact():
        a = models["b5"]
        e = exists_right_identity(a)
        ok = (e is not None and not satisfies(a, ("R5",))
              and is_independence_model(a, TARSKI, "R5"))
        return ok, {"right_identity": None if e is None else a.name_of(e)}
    run("paper.s8.b5-right-identity",
        "b5 has a right identity element yet fails R5", "extra-fact", b5_fact)

    # (g) minimality
    minimality_jobs = [
        ("paper.s6.r2-minimality", "R2", TARSKI, 3, "a2"),
        ("paper.s7.r4-minimality", "R4", TARSKI, 8, "a4"),
        ("paper.s9.r7-minimality", "R7", TARSKI, 4, "a7"),
        ("paper.s11.r9-minimality", "R9", TARSKI, 8, "a9"),
        ("paper.s14.r9-minimality-rsys", "R9", R_SYS, 8, "b9"),
    ]
    for cid, target, system, size, cert in minimality_jobs:
        def fn(target=target, system=system, size=size, cert=cert):
            rep = verify_minimality(target, system, size, models[cert])
            ev = {
                "sizes": [
                    {"size": o.size, "models": o.model_count,
                     "exhaustive": o.exhaustive, "skipped": o.skipped_reason,
                     "nodes": o.nodes}
                    for o in rep.outcomes
                ],
                "certificate": cert,
                "certified": rep.certified,
            }
            return rep.confirmed, ev
        sysname = "tarski" if system is TARSKI else "the reduced system"
        run(cid, f"no independence model for {target} below size {size} ({sysname})",
            "minimality", fn)

    # (h) uniqueness, plus the size-4 positive search for R7
    population: list[tuple[str, FiniteAlgebra]] = sorted(models.items())

    def r2_uniqueness():
        must_hold = tuple(axiom_sentence(i) for i in TARSKI if i != "R2")
        res = search(SearchSpec(3, must_hold, (axiom_sentence("R2"),),
                                up_to_iso=True))
        population.extend((f"search.r2-size3.{i}", m)
                          for i, m in enumerate(res.models))
        ev = _search_result_evidence(res)
        ev["isomorphic_to_a2"] = bool(
            res.models and find_isomorphism(res.models[0], models["a2"]))
        ok = (res.exhaustive and res.iso_class_count == 1
              and ev["isomorphic_to_a2"])
        return ok, ev
    run("paper.s6.r2-uniqueness-size3",
        "exactly one size-3 independence model for R2, isomorphic to a2",
        "uniqueness", r2_uniqueness)

    def r7_size4():
        must_hold = tuple(axiom_sentence(i) for i in TARSKI if i != "R7")
        res = boolean_guided_search(SearchSpec(4, must_hold,
                                               (axiom_sentence("R7"),),
                                               up_to_iso=True))
        population.extend((f"search.r7-size4.{i}", m)
                          for i, m in enumerate(res.models))
        ev = _search_result_evidence(res)
        ev["some_model_isomorphic_to_a7"] = any(
            find_isomorphism(m, models["a7"]) for m in res.models)
        ok = (res.exhaustive and res.iso_class_count >= 1
              and ev["some_model_isomorphic_to_a7"])
        return ok, ev
    run("paper.s9.r7-size4-search",
        "size-4 search finds an independence model for R7 isomorphic to a7",
        "uniqueness", r7_size4)

    def r9_uniqueness(system, certificate):
        def fn():
            must_hold = tuple(axiom_sentence(i) for i in system if i != "R9")
            res = boolean_guided_search(SearchSpec(
                8, must_hold, (axiom_sentence("R9"),), up_to_iso=True,
                node_limit=long_node_limit))
            ev = _search_result_evidence(res)
            if not res.exhaustive:
                ev["resource_abort"] = True
                return True, ev
            ev["matches_certificate"] = bool(
                res.models and find_isomorphism(res.models[0], models[certificate]))
            return res.iso_class_count == 1 and ev["matches_certificate"], ev
        return fn
    long_jobs = [
        ("paper.s11.r9-uniqueness-size8",
         "exactly one size-8 independence model for R9 (full system)",
         r9_uniqueness(TARSKI, "a9")),
        ("paper.s14.r9-uniqueness-size8-rsys",
         "exactly one size-8 independence model for R9 (reduced system)",
         r9_uniqueness(R_SYS, "b9")),
    ]
    for cid, desc, fn in long_jobs:
        if include_long_running:
            run(cid, desc, "uniqueness", fn)
        else:
            skip(cid, desc, "uniqueness")

    # (f) semantic lemma checks over the catalog plus all searched models
    run("paper.s13.r10-equiv-r11p",
        "with the Boolean axioms, converse involution, and left "
        "distributivity, R10 and R11p agree on every model",
        "lemma-semantic",
        lambda: _lemma_equivalence(population,
                                   ("R1", "R2", "R3", "R6", "R8p"),
                                   "R10", "R11p"))
    run("paper.s13.r8-equiv-r8p",
        "with R6, R7, R9, the two distributive laws agree on every model",
        "lemma-semantic",
        lambda: _lemma_equivalence(population, ("R6", "R7", "R9"),
                                   "R8", "R8p"))
    run("paper.s13.implies-r7",
        "R1-R5 with R11p force R7 on every model", "lemma-semantic",
        lambda: _lemma_implication(population,
                                   ("R1", "R2", "R3", "R4", "R5", "R11p"),
                                   ("R7",)))
    run("paper.s15.implies-r9",
        "R1-R3, R5, R8 with R11p force R9 on every model", "lemma-semantic",
        lambda: _lemma_implication(population,
                                   ("R1", "R2", "R3", "R5", "R8", "R11p"),
                                   ("R9",)))
    run("paper.s13.rsys-implies-r7-r8",
        "every model of the reduced system also satisfies R7 and R8",
        "lemma-semantic",
        lambda: _lemma_implication(population, R_SYS, ("R7", "R8")))
    run("paper.s15.ssys-implies-r7-r9",
        "every model of the distributivity-based system also satisfies "
        "R7 and R9", "lemma-semantic",
        lambda: _lemma_implication(population, S_SYS, ("R7", "R9")))

    claims.sort(key=lambda c: c.claim_id)
    return Report(__version__, claims)
