"""Reference tables: golden stability and derivability from the formulas."""

from pathlib import Path

import pytest

from nestprohibitor.figures import (
    FIG21_DISCREPANT_ROW,
    FIG21_PRINTED_VALUE,
    FIGURE_IDS,
    build_figure,
    render_text,
    render_tsv,
)
from nestprohibitor.orevkov import (
    allowed_zones,
    f_value,
    g_value,
    second_formula_residual,
)
from nestprohibitor.schemes import MINUS, PLUS, ComplexType, NestScheme

GOLDEN = Path(__file__).parent / "golden"


class TestGolden:
    @pytest.mark.parametrize("number", FIGURE_IDS)
    def test_text_byte_stable(self, number):
        expected = (GOLDEN / f"figure{number}.txt").read_text()
        assert render_text(build_figure(number)) == expected

    @pytest.mark.parametrize("number", FIGURE_IDS)
    def test_tsv_byte_stable(self, number):
        expected = (GOLDEN / f"figure{number}.tsv").read_text()
        assert render_tsv(build_figure(number)) == expected

    def test_unknown_figure(self):
        with pytest.raises(ValueError):
            build_figure(15)


class TestShapes:
    @pytest.mark.parametrize(
        "number,rows,cols",
        [(16, 10, 6), (17, 8, 2), (18, 4, 8), (19, 12, 4), (20, 8, 4), (21, 6, 5), (22, 3, 6)],
    )
    def test_dimensions(self, number, rows, cols):
        fig = build_figure(number)
        assert len(fig.rows) == rows
        assert all(len(r) == cols for r in fig.rows)


class TestDerivability:
    def test_figure19_equals_f_minus_g_minus_g(self):
        fig = build_figure(19)
        parse = {
            "-": NestScheme(MINUS, 1, 1),
            "+": NestScheme(PLUS, 1, 1),
        }
        for type_str, sj, sk, value in fig.rows:
            nu = PLUS if type_str[1] == "+" else MINUS
            tag = type_str[4]
            sep = ComplexType(NestScheme(nu, 1, 1), tag)
            direct = f_value(sep) - g_value(parse[sj]) - g_value(parse[sk])
            assert direct == int(value)
            assert direct == second_formula_residual(sep, parse[sj], parse[sk])

    def test_figure20_zone_column_matches_residuals(self):
        fig = build_figure(20)
        sign = {"+": PLUS, "-": MINUS}
        for t1, t2, t3, z in fig.rows:
            schemes = tuple(NestScheme(sign[t[1]], 1, 1) for t in (t1, t2, t3))
            zones = allowed_zones(*schemes)
            rendered = "(" + ", ".join(str(i) for i in zones) + ")" if zones else "()"
            assert rendered == z

    def test_figure21_annotation(self):
        fig = build_figure(21)
        assert fig.annotations == {
            FIG21_DISCREPANT_ROW: {"computed": -4, "printed": FIG21_PRINTED_VALUE}
        }
        row = next(r for r in fig.rows if r[4])
        assert row[3] == "-4"
        assert row[4] == "printed=-2"

    def test_figure21_other_rows_unannotated(self):
        fig = build_figure(21)
        assert [r[3] for r in fig.rows] == ["0", "0", "0", "-4", "-5", "-6"]
        assert sum(1 for r in fig.rows if r[4]) == 1
