import pytest
from hypothesis import given, strategies as st

from relalg.catalog import a2, m3
from relalg.terms import (Add, Comp, Conv, EvalError, IdentConst, Meet, Neg,
                          OneConst, ParseError, QuasiEquation, Var, ZeroConst,
                          check_validity, eval_term, free_vars, holds,
                          parse_sentence, parse_term, sentence_to_str,
                          term_to_str)


class TestParser:
    def test_precedence(self):
        # ^ > - > ; > . > +
        assert parse_term("-r^") == Neg(Conv(Var("r")))
        assert parse_term("-r;s") == Comp(Neg(Var("r")), Var("s"))
        assert parse_term("r;s.t") == Meet(Comp(Var("r"), Var("s")), Var("t"))
        assert parse_term("r.s+t") == Add(Meet(Var("r"), Var("s")), Var("t"))

    def test_left_associativity(self):
        assert parse_term("r+s+t") == Add(Add(Var("r"), Var("s")), Var("t"))
        assert parse_term("r;s;t") == Comp(Comp(Var("r"), Var("s")), Var("t"))

    def test_parens_and_double_converse(self):
        assert parse_term("r;(s;t)") == Comp(Var("r"), Comp(Var("s"), Var("t")))
        assert parse_term("r^^") == Conv(Conv(Var("r")))
        assert parse_term("(-r)^") == Conv(Neg(Var("r")))

    def test_constants(self):
        assert parse_term("1'") == IdentConst()
        assert parse_term("0") == ZeroConst()
        assert parse_term("1") == OneConst()
        # "1'" must win over "1" followed by junk
        assert parse_term("1';1") == Comp(IdentConst(), OneConst())

    def test_multi_letter_variables(self):
        assert parse_term("foo_2;bar") == Comp(Var("foo_2"), Var("bar"))

    def test_sentences(self):
        s = parse_sentence("r;s = s;r")
        assert sentence_to_str(s) == "r;s = s;r"
        s = parse_sentence("r <= s -> r;t <= s;t")
        assert isinstance(s, QuasiEquation)
        assert len(s.antecedents) == 1
        s = parse_sentence("r = 0, s = 0 -> r+s = 0")
        assert len(s.antecedents) == 2
        s = parse_sentence("(r;s).t = 0 <-> (r^;t).s = 0")
        # the parens are redundant since ; binds tighter than .
        assert sentence_to_str(s) == "r;s.t = 0 <-> r^;t.s = 0"
        assert parse_sentence(sentence_to_str(s)) == s

    def test_errors_carry_position(self):
        with pytest.raises(ParseError) as e:
            parse_term("r +")
        assert e.value.pos == 3
        with pytest.raises(ParseError):
            parse_term("r + s)")
        with pytest.raises(ParseError):
            parse_term("(r + s")
        with pytest.raises(ParseError):
            parse_term("r ? s")
        with pytest.raises(ParseError):
            parse_sentence("r + s")  # no relation symbol
        with pytest.raises(ParseError):
            parse_sentence("r = s -> ")  # missing consequent


def _terms(variables=("r", "s", "t")):
    leaves = st.one_of(
        st.sampled_from([Var(v) for v in variables]),
        st.sampled_from([IdentConst(), ZeroConst(), OneConst()]),
    )
    return st.recursive(
        leaves,
        lambda inner: st.one_of(
            inner.map(Neg),
            inner.map(Conv),
            st.tuples(inner, inner).map(lambda p: Add(*p)),
            st.tuples(inner, inner).map(lambda p: Meet(*p)),
            st.tuples(inner, inner).map(lambda p: Comp(*p)),
        ),
        max_leaves=12,
    )


class TestPrinter:
    @given(_terms())
    def test_round_trip(self, t):
        assert parse_term(term_to_str(t)) == t

    @given(_terms(), _terms())
    def test_equation_round_trip(self, lhs, rhs):
        from relalg.terms import Equation
        s = Equation(lhs, rhs)
        assert parse_sentence(sentence_to_str(s)) == s

    def test_minimal_parens(self):
        assert term_to_str(parse_term("r+(s+t)")) == "r+(s+t)"
        assert term_to_str(parse_term("(r+s)+t")) == "r+s+t"
        assert term_to_str(parse_term("(-r)^")) == "(-r)^"
        assert term_to_str(parse_term("-r^")) == "-r^"


class TestEvaluation:
    def test_constants_in_m3(self):
        a = m3()
        assert eval_term(a, parse_term("1'"), {}) == 1
        assert eval_term(a, parse_term("0"), {}) == 0
        assert eval_term(a, parse_term("1"), {}) == 3
        assert eval_term(a, parse_term("-1'"), {}) == 2

    def test_operations_in_m3(self):
        a = m3()
        env = {"r": 2, "s": 1}
        assert eval_term(a, parse_term("r;r"), env) == 3   # 0';0' = 1
        assert eval_term(a, parse_term("r.s"), env) == 0   # 0'.1' = 0
        assert eval_term(a, parse_term("r+s"), env) == 3
        assert eval_term(a, parse_term("r^"), env) == 2

    def test_unbound_variable(self):
        with pytest.raises(EvalError, match="unbound"):
            eval_term(m3(), parse_term("x"), {})

    def test_free_vars(self):
        assert free_vars(parse_term("r;(s+t)^")) == {"r", "s", "t"}
        assert free_vars(parse_sentence("r <= s -> r;t <= s;t")) == {"r", "s", "t"}
        assert free_vars(parse_term("1'+0")) == set()

    def test_holds_quasi_equation_vacuous(self):
        a = m3()
        s = parse_sentence("r = 0 -> r;r = 1")
        assert holds(a, s, {"r": 1})       # antecedent false
        assert not holds(a, s, {"r": 0})   # 0;0 = 0, not 1


class TestSugarCoherence:
    @given(_terms(("r", "s")), _terms(("r", "s")),
           st.integers(0, 3), st.integers(0, 3))
    def test_meet_expands(self, x, y, rv, sv):
        a = m3()
        env = {"r": rv, "s": sv}
        assert eval_term(a, Meet(x, y), env) == \
            eval_term(a, Neg(Add(Neg(x), Neg(y))), env)

    def test_constants_expand(self):
        for a in (m3(), a2()):
            assert eval_term(a, parse_term("1"), {}) == \
                eval_term(a, parse_term("1'+-1'"), {})
            assert eval_term(a, parse_term("0"), {}) == \
                eval_term(a, parse_term("-1"), {})

    def test_inclusion_agrees_with_its_expansion(self):
        pairs = [("r <= s", "r+s = s"), ("r;s <= r", "r;s+r = r")]
        for a in (m3(), a2()):
            for inc, eq in pairs:
                assert check_validity(a, parse_sentence(inc)) == \
                    check_validity(a, parse_sentence(eq))

    def test_r10_left_side_collapses_in_a2(self):
        # with comp constant outside {1', 1}, the left side equals -s here
        a = a2()
        env = {"r": 2, "s": 1}  # r = 1, s = 1'
        lhs = eval_term(a, parse_term("r^;-(r;s)+-s"), env)
        assert lhs == eval_term(a, parse_term("-s"), env) == 2


class TestCheckValidity:
    def test_valid_sentence(self):
        assert check_validity(m3(), parse_sentence("r;s;t = (r;s);t")) is None
        assert check_validity(m3(), parse_sentence("r+s = s+r")) is None

    def test_lex_first_counterexample(self):
        # associativity of + in a2: the first failing assignment in
        # alphabetical-variable, index order
        cex = check_validity(a2(), parse_sentence("r+(s+t) = (r+s)+t"))
        assert cex == {"r": 1, "s": 1, "t": 2}

    def test_ground_sentence(self):
        assert check_validity(m3(), parse_sentence("1';1' = 1'")) is None
        assert check_validity(m3(), parse_sentence("1';1' = 1")) == {}
