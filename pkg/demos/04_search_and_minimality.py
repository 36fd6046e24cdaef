"""Exhaustive model search: minimality and uniqueness.

The searcher enumerates operation tables cell by cell with watch-list
propagation of ground sentence instances, optionally up to isomorphism.
When the Boolean axioms R1-R3 are required, the Boolean part can be fixed
outright (non-powers of two are impossible), which shrinks the space
enormously.
"""

from relalg import (TARSKI, SearchSpec, axiom_sentence, boolean_guided_search,
                    build_model, find_isomorphism, search, verify_minimality)


def axioms(ids):
    return tuple(axiom_sentence(i) for i in ids)


# Is there an independence model for R2 smaller than the known 3-element
# one?  (No Boolean shortcut here: with R2 itself failing, R1 and R3 alone
# do not force a Boolean skeleton.)
report = verify_minimality("R2", TARSKI, 3, certificate=build_model("a2"))
for o in report.outcomes:
    print(f"size {o.size}: {o.model_count} models, exhaustive={o.exhaustive}")
print("minimality of the 3-element R2 model confirmed:", report.confirmed)
print()

# And at size 3 the model is unique up to isomorphism.
spec = SearchSpec(3, axioms(i for i in TARSKI if i != "R2"),
                  axioms(("R2",)), up_to_iso=True)
res = search(spec)
print(f"size-3 R2 search: {res.iso_class_count} iso class(es), "
      f"{res.labeled_count} labeled models, {res.nodes_explored} nodes")
print("isomorphic to the catalog model:",
      find_isomorphism(res.models[0], build_model("a2")) is not None)
print()

# With R1-R3 held, the guided search handles size 4 easily: the only
# independence models for R7 at the minimal size.
spec = SearchSpec(4, axioms(i for i in TARSKI if i != "R7"),
                  axioms(("R7",)), up_to_iso=True)
res = boolean_guided_search(spec)
print(f"size-4 R7 search: {res.iso_class_count} iso class(es), "
      f"{res.labeled_count} labeled models")
print("one of them is the catalog model a7:",
      any(find_isomorphism(m, build_model("a7")) for m in res.models))
print()

# Larger minimality claims: nothing below size 8 breaks exactly R9.
report = verify_minimality("R9", TARSKI, 8, certificate=build_model("a9"))
for o in report.outcomes:
    note = o.skipped_reason or f"{o.model_count} models ({o.nodes} nodes)"
    print(f"size {o.size}: {note}")
print("minimality of the 8-element R9 model confirmed:", report.confirmed)
