"""The term and sentence language.

Concrete syntax: postfix ^ is converse, prefix - is complement, ; is
relative product, . is meet, + is join; constants 1', 0, 1.  Binding
strength: ^ > - > ; > . > +.  Sentences are equations, inclusions (<=),
quasi-equations (comma-separated antecedents, then ->), and
biconditionals (<->).
"""

from relalg import (build_model, check_validity, eval_term, parse_sentence,
                    parse_term, sentence_to_str, term_to_str)

# Parse, print, evaluate.
t = parse_term("r^;-(r;s)+-s")
print("parsed and re-printed:", term_to_str(t))

d = build_model("d")  # the eight-element symmetric algebra with atoms 1', a, b
env = {"r": d.names.index("a"), "s": d.names.index("b")}
value = eval_term(d, t, env)
print("value at r=a, s=b in d:", d.name_of(value))
print()

# check_validity quantifies over all assignments and returns the first
# counterexample (or None).
s = parse_sentence("r;(s;t) = (r;s);t")
print("sentence:", sentence_to_str(s))
print("valid in d?", check_validity(d, s) is None)

a4 = build_model("a4")
cex = check_validity(a4, s)
named = {v: a4.name_of(i) for v, i in cex.items()}
print("counterexample in a4:", named)

lhs = eval_term(a4, parse_term("r;(s;t)"), cex)
rhs = eval_term(a4, parse_term("(r;s);t"), cex)
print(f"  r;(s;t) = {a4.name_of(lhs)}   (r;s);t = {a4.name_of(rhs)}")
print()

# Quasi-equations: the monotony laws are implications.
mon = parse_sentence("r <= s -> r;t <= s;t")
print("left monotony in d?", check_validity(d, mon) is None)
