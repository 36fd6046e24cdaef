"""A first tour: build finite algebras, inspect their tables, and check
which axioms hold.

Every structure is a plain table algebra over {0, ..., n-1} with the five
operations +, -, ;, converse, and a distinguished identity element.  Nothing
about the representation assumes any axiom, which is the whole point: the
interesting models are the deliberately broken ones.
"""

from relalg import (TARSKI, build_model, failing_axioms, render_model,
                    status_vector)

# The minimal set relation algebra on a three-element base set: four
# relations (empty, identity, diversity, universal).
m3 = build_model("m3")
print(render_model(m3))
print()

# It satisfies all ten axioms.
status = status_vector(m3, TARSKI)
print("m3 failing axioms:", failing_axioms(status) or "none")
print()

# The three-element algebra that breaks associativity of + and nothing
# else.  status_vector reports the first counterexample assignment for
# each failing axiom.
a2 = build_model("a2")
status = status_vector(a2, TARSKI)
for axiom_id, witness in status.items():
    if witness is None:
        print(f"  {axiom_id}: holds")
    else:
        named = {v: a2.name_of(i) for v, i in witness.items()}
        print(f"  {axiom_id}: FAILS at {named}")
