"""Terms and sentences over the relation-algebra signature.

Concrete syntax:

    term     := sum ;  sum := meet { "+" meet } ;  meet := relprod { "." relprod }
    relprod  := unary { ";" unary } ;  unary := "-" unary | postfix
    postfix  := atom { "^" } ;  atom := ident | "1'" | "0" | "1" | "(" term ")"
    sentence := term ("="|"<=") term | eqlist "->" eq | eq "<->" eq

Postfix ^ is converse, prefix - is complement, ; is relative product,
. is meet, + is join.  All binary operators associate to the left;
unary operators bind tighter than binary ones, ; tighter than .,
and . tighter than +.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra import FiniteAlgebra, derived_element


class Term:
    __slots__ = ()


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class IdentConst(Term):
    pass


@dataclass(frozen=True)
class ZeroConst(Term):
    pass


@dataclass(frozen=True)
class OneConst(Term):
    pass


@dataclass(frozen=True)
class Neg(Term):
    child: Term


@dataclass(frozen=True)
class Conv(Term):
    child: Term


@dataclass(frozen=True)
class Add(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Meet(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Comp(Term):
    left: Term
    right: Term


class Sentence:
    __slots__ = ()


@dataclass(frozen=True)
class Equation(Sentence):
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class Inclusion(Sentence):
    """lhs <= rhs, sugar for lhs + rhs = rhs."""

    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class QuasiEquation(Sentence):
    """antecedents jointly imply the consequent, per assignment."""

    antecedents: tuple[Sentence, ...]
    consequent: Sentence


@dataclass(frozen=True)
class Biconditional(Sentence):
    left: Sentence
    right: Sentence


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class EvalError(ValueError):
    pass


# --- lexer -----------------------------------------------------------------

_PUNCT = ("<->", "->", "<=", "+", ".", ";", "-", "^", "=", "(", ")", ",")


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c == "1" and i + 1 < n and text[i + 1] == "'":
            tokens.append(("const", "1'", i))
            i += 2
            continue
        if c in "01":
            tokens.append(("const", c, i))
            i += 1
            continue
        if c.islower():
            j = i
            while j < n and (text[j].islower() or text[j].isdigit() or text[j] == "_"):
                j += 1
            tokens.append(("var", text[i:j], i))
            i = j
            continue
        for p in _PUNCT:
            if text.startswith(p, i):
                tokens.append(("punct", p, i))
                i += len(p)
                break
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_punct(self, value):
        kind, val, at = self.next()
        if kind != "punct" or val != value:
            raise ParseError(f"expected {value!r}", at)

    def at_punct(self, *values):
        kind, val, _ = self.peek()
        return kind == "punct" and val in values

    def term(self) -> Term:
        t = self.meet_term()
        while self.at_punct("+"):
            self.next()
            t = Add(t, self.meet_term())
        return t

    def meet_term(self) -> Term:
        t = self.relprod()
        while self.at_punct("."):
            self.next()
            t = Meet(t, self.relprod())
        return t

    def relprod(self) -> Term:
        t = self.unary()
        while self.at_punct(";"):
            self.next()
            t = Comp(t, self.unary())
        return t

    def unary(self) -> Term:
        if self.at_punct("-"):
            self.next()
            return Neg(self.unary())
        return self.postfix()

    def postfix(self) -> Term:
        t = self.atom()
        while self.at_punct("^"):
            self.next()
            t = Conv(t)
        return t

    def atom(self) -> Term:
        kind, val, at = self.next()
        if kind == "var":
            return Var(val)
        if kind == "const":
            return {"1'": IdentConst(), "0": ZeroConst(), "1": OneConst()}[val]
        if kind == "punct" and val == "(":
            t = self.term()
            self.expect_punct(")")
            return t
        raise ParseError(f"unexpected {val or 'end of input'!r}", at)

    def atomic_sentence(self) -> Sentence:
        lhs = self.term()
        kind, val, at = self.next()
        if kind == "punct" and val == "=":
            return Equation(lhs, self.term())
        if kind == "punct" and val == "<=":
            return Inclusion(lhs, self.term())
        raise ParseError("expected '=' or '<='", at)

    def sentence(self) -> Sentence:
        first = self.atomic_sentence()
        if self.at_punct(","):
            ants = [first]
            while self.at_punct(","):
                self.next()
                ants.append(self.atomic_sentence())
            self.expect_punct("->")
            return QuasiEquation(tuple(ants), self.atomic_sentence())
        if self.at_punct("->"):
            self.next()
            return QuasiEquation((first,), self.atomic_sentence())
        if self.at_punct("<->"):
            self.next()
            return Biconditional(first, self.atomic_sentence())
        return first

    def finish(self):
        kind, val, at = self.peek()
        if kind != "end":
            raise ParseError(f"trailing input {val!r}", at)


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    p.finish()
    return t


def parse_sentence(text: str) -> Sentence:
    p = _Parser(text)
    s = p.sentence()
    p.finish()
    return s


# --- printing --------------------------------------------------------------

_LEVEL = {"add": 0, "meet": 1, "comp": 2, "unary": 3, "atom": 4}


def _print_term(t: Term, level: int) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, IdentConst):
        return "1'"
    if isinstance(t, ZeroConst):
        return "0"
    if isinstance(t, OneConst):
        return "1"
    if isinstance(t, Neg):
        s = "-" + _print_term(t.child, _LEVEL["unary"])
        return s if level <= _LEVEL["unary"] else f"({s})"
    if isinstance(t, Conv):
        # the operand of postfix ^ must be an atom
        return _print_term(t.child, _LEVEL["atom"]) + "^"
    if isinstance(t, Add):
        op, lv = "+", _LEVEL["add"]
    elif isinstance(t, Meet):
        op, lv = ".", _LEVEL["meet"]
    elif isinstance(t, Comp):
        op, lv = ";", _LEVEL["comp"]
    else:
        raise TypeError(f"not a term: {t!r}")
    s = _print_term(t.left, lv) + op + _print_term(t.right, lv + 1)
    return s if level <= lv else f"({s})"


def term_to_str(t: Term) -> str:
    return _print_term(t, 0)


def sentence_to_str(s: Sentence) -> str:
    if isinstance(s, Equation):
        return f"{term_to_str(s.lhs)} = {term_to_str(s.rhs)}"
    if isinstance(s, Inclusion):
        return f"{term_to_str(s.lhs)} <= {term_to_str(s.rhs)}"
    if isinstance(s, QuasiEquation):
        ants = ", ".join(sentence_to_str(x) for x in s.antecedents)
        return f"{ants} -> {sentence_to_str(s.consequent)}"
    if isinstance(s, Biconditional):
        return f"{sentence_to_str(s.left)} <-> {sentence_to_str(s.right)}"
    raise TypeError(f"not a sentence: {s!r}")


# --- free variables and evaluation -----------------------------------------

def free_vars(x) -> set[str]:
    if isinstance(x, Var):
        return {x.name}
    if isinstance(x, (IdentConst, ZeroConst, OneConst)):
        return set()
    if isinstance(x, (Neg, Conv)):
        return free_vars(x.child)
    if isinstance(x, (Add, Meet, Comp)):
        return free_vars(x.left) | free_vars(x.right)
    if isinstance(x, (Equation, Inclusion)):
        return free_vars(x.lhs) | free_vars(x.rhs)
    if isinstance(x, QuasiEquation):
        out = free_vars(x.consequent)
        for a in x.antecedents:
            out |= free_vars(a)
        return out
    if isinstance(x, Biconditional):
        return free_vars(x.left) | free_vars(x.right)
    raise TypeError(f"not a term or sentence: {x!r}")


def eval_term(a: FiniteAlgebra, t: Term, env) -> int:
    """Evaluate a term in ``a`` under the assignment ``env`` (name -> index)."""
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise EvalError(f"unbound variable {t.name!r}") from None
    if isinstance(t, IdentConst):
        return a.ident
    if isinstance(t, ZeroConst):
        return derived_element(a, "zero")
    if isinstance(t, OneConst):
        return derived_element(a, "one")
    if isinstance(t, Neg):
        return a.neg[eval_term(a, t.child, env)]
    if isinstance(t, Conv):
        return a.conv[eval_term(a, t.child, env)]
    if isinstance(t, Add):
        return a.add[eval_term(a, t.left, env)][eval_term(a, t.right, env)]
    if isinstance(t, Meet):
        x = eval_term(a, t.left, env)
        y = eval_term(a, t.right, env)
        return a.neg[a.add[a.neg[x]][a.neg[y]]]
    if isinstance(t, Comp):
        return a.comp[eval_term(a, t.left, env)][eval_term(a, t.right, env)]
    raise TypeError(f"not a term: {t!r}")


def holds(a: FiniteAlgebra, s: Sentence, env) -> bool:
    """Truth of a sentence under one assignment."""
    if isinstance(s, Equation):
        return eval_term(a, s.lhs, env) == eval_term(a, s.rhs, env)
    if isinstance(s, Inclusion):
        r = eval_term(a, s.rhs, env)
        return a.add[eval_term(a, s.lhs, env)][r] == r
    if isinstance(s, QuasiEquation):
        if all(holds(a, x, env) for x in s.antecedents):
            return holds(a, s.consequent, env)
        return True
    if isinstance(s, Biconditional):
        return holds(a, s.left, env) == holds(a, s.right, env)
    raise TypeError(f"not a sentence: {s!r}")


def check_validity(a: FiniteAlgebra, s: Sentence):
    """None when the sentence holds under every assignment, else the
    lexicographically first counterexample (variables alphabetical,
    elements by index)."""
    names = sorted(free_vars(s))
    for values in product(range(a.size), repeat=len(names)):
        env = dict(zip(names, values))
        if not holds(a, s, env):
            return env
    return None
