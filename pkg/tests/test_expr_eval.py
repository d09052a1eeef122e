import json

import pytest

from octoweak.cli.expr import (ExprError, parse, render_source, Star, Atom,
                               Chain, Call, ScalarMul)
from octoweak.cli.evaluator import eval_source
from octoweak.cli.main import main
from octoweak.golden import EXPR_CORPUS


class TestParser:
    def test_star_node(self):
        ast = parse("(S1*S2)")
        assert isinstance(ast, Star)
        assert ast.lhs == Atom(name="S1")
        assert ast.rhs == Atom(name="S2")

    def test_chain_star_rejected(self):
        with pytest.raises(ExprError) as exc:
            parse("S1*S2*S3")
        assert exc.value.code == "E_CHAIN_STAR"
        assert exc.value.line == 1
        assert exc.value.col == 6

    def test_parenthesized_chains_parse(self):
        assert isinstance(parse("(S1*S2)*S3"), Star)
        assert isinstance(parse("S1*(S2*S3)"), Star)

    def test_unknown_identifier(self):
        with pytest.raises(ExprError) as exc:
            parse("S9 + e1")
        assert exc.value.code == "E_UNKNOWN_IDENT"

    def test_arity(self):
        with pytest.raises(ExprError) as exc:
            parse("assoc(e1,e2)")
        assert exc.value.code == "E_ARITY"

    def test_nested_call(self):
        ast = parse("tr(conj(L)*(S3*L))")
        assert isinstance(ast, Call) and ast.fn == "tr"
        inner = ast.args[0]
        assert isinstance(inner, Star)
        assert isinstance(inner.lhs, Call) and inner.lhs.fn == "conj"
        assert isinstance(inner.rhs, Star)

    def test_scalar_chain_allowed(self):
        ast = parse("2*3*S1")
        assert isinstance(ast, ScalarMul)

    def test_sum_chain(self):
        ast = parse("e0 - e1 + e2")
        assert isinstance(ast, Chain)
        assert [s for s, _ in ast.items] == ["+", "-", "+"]

    def test_syntax_errors(self):
        for bad in ("(S1*S2", "S1 +", "eps4(1,2,3,)", "1/0", "@"):
            with pytest.raises(ExprError):
                parse(bad)

    def test_trailing_input(self):
        with pytest.raises(ExprError):
            parse("e1 e2")


class TestRoundTrip:
    @pytest.mark.parametrize("src", EXPR_CORPUS)
    def test_corpus_fixed_point(self, src):
        ast1 = parse(src)
        text1 = render_source(ast1)
        ast2 = parse(text1)
        assert ast1 == ast2
        assert render_source(ast2) == text1

    def test_sum_inside_star_keeps_parens(self):
        ast = parse("(S0 + S4)*S1")
        text = render_source(ast)
        assert parse(text) == ast

    def test_scalar_times_sum_keeps_parens(self):
        ast = parse("2*(S0 + S4)")
        text = render_source(ast)
        assert parse(text) == ast


class TestEvaluation:
    @pytest.mark.parametrize("src,want", [
        ("(S1*S2)", "i·S3"),
        ("(S1*S4)", "i·S5"),
        ("(e1*e2)", "e3"),
        ("(e1*e4)", "e5"),
        ("norm2(Psi0(1,2))", "1"),
        ("eps4(1,2,4,7)", "8"),
        ("eps4(4,5,6,7)", "-8"),
        ("eps4(1,2,3,4)", "0"),
        ("c0*c0", "32/257"),
        ("s2*s2", "2"),
        ("c0*y0", "c0·y0"),
        ("e0 - e1", "e0 - e1"),
        ("assoc(e1,e2,e4)", "2·e7"),
        ("assoc(e1,e2,e3)", "0"),
        ("conj(S6)", "S6"),
        ("tr((S5*S6))", "0"),
        ("norm2(S0 + S4)", "8"),
        ("3/2*S7", "3/2·S7"),
    ])
    def test_examples(self, src, want):
        assert eval_source(src).render() == want

    def test_corpus_evaluates(self):
        for src in EXPR_CORPUS:
            v = eval_source(src)
            assert v.render()
            assert v.render() == eval_source(src).render()

    def test_symbolic_trace(self):
        out = eval_source("tr(Lbar*(S1*L))").render()
        assert out == "32/257·ebar_L⊗nu_L + 32/257·nubar_L⊗e_L"
        # conj(L) equals Lbar entry for entry
        assert eval_source("tr(conj(L)*(S1*L))").render() == out

    def test_split3(self):
        # (e1 e2) e4 = e7 while e1 (e2 e4) = -e7: the halves are 0 and e7
        v = eval_source("split3(e1,e2,e4)")
        assert v.render() == "assoc = 0; nonassoc = e7"
        v2 = eval_source("split3(e1,e2,e3)")
        assert v2.parts[1].render() == "0"

    def test_psi0_requires_positive(self):
        with pytest.raises(ExprError) as exc:
            eval_source("norm2(Psi0(0,1))")
        assert exc.value.code == "E_DOMAIN"

    def test_type_errors(self):
        for bad in ("tr(c0)", "e1 + S1", "(e1*S1)", "norm2(eps4(1,2,4,7))"):
            with pytest.raises(ExprError) as exc:
                eval_source(bad)
            assert exc.value.code == "E_TYPE"

    def test_scaled_vacuum_products(self):
        # Psi0(1,2) carries sqrt(1/4) = 1/2 exactly, so traces stay exact
        assert eval_source("tr(Psi0(1,2))").render() == "1"
        v = eval_source("(Psi0(1,2)*S3)")
        assert v.scale2 == 1 * 1 / (2 * 2)

    def test_eps4_argument_validation(self):
        with pytest.raises(ExprError):
            eval_source("eps4(1,2,4,9)")
        with pytest.raises(ExprError):
            eval_source("eps4(1,2,4,c0)")


class TestCli:
    def test_eval_text(self, capsys):
        assert main(["eval", "(S1*S2)"]) == 0
        assert capsys.readouterr().out.strip() == "i·S3"

    def test_eval_json(self, capsys):
        assert main(["eval", "eps4(1,2,4,7)", "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data == {"type": "scalar", "text": "8"}

    def test_eval_parse_error_exit_code(self, capsys):
        assert main(["eval", "S1*S2*S3"]) == 2
        assert "E_CHAIN_STAR" in capsys.readouterr().err

    def test_table_command(self, capsys, tmp_path):
        path = tmp_path / "eps4.json"
        assert main(["table", "--what", "eps4", "--json", str(path)]) == 0
        out = capsys.readouterr().out
        assert "eps(1,2,4,7) = +1" in out
        assert "eps(4,5,6,7) = -1" in out
        rows = json.loads(path.read_text())
        assert {"indices": [1, 2, 4, 7], "sign": 1} in rows

    def test_spectrum_command(self, capsys):
        assert main(["spectrum", "--m", "1", "--f", "1"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["zero_modes"] == 1
        assert len(data["eigenvalues"]) == 8
        assert {c["name"] for c in data["claims"]} == \
            {"C mass coefficient", "D mass coefficient", "E mass coefficient"}

    def test_decimal_coupling_parsing(self, capsys):
        assert main(["spectrum", "--m", "1", "--f", "1", "--g", "0.65"]) == 0
        json.loads(capsys.readouterr().out)
