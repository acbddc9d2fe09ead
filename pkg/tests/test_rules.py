"""Rule catalog: verdicts on the documented cases, evidence discipline."""

import pytest

from nestprohibitor.rules import (
    INAPPLICABLE,
    RULE_ORDER,
    RULES,
    SATISFIED,
    VIOLATED,
    Candidate,
    evaluate_all,
    replay_violation,
    rule_empty_triangles,
    rule_exterior_zone,
    rule_jump,
    rule_lambda0_bound,
    rule_lemma10,
    rule_rm,
    rule_separating,
    rule_triangle_bound,
)
from nestprohibitor.schemes import (
    MINUS,
    PLUS,
    ComplexType,
    CurveType,
    Jump,
    NestScheme,
    RealScheme,
)

from test_ledger import make_ledger


def ns(nu, a_plus, a_minus):
    return NestScheme(nu, a_plus, a_minus)


def curve(*parts, jump=None):
    return CurveType(tuple(ComplexType(s, t) for s, t in parts), jump)


def with_ledger(ledger, **kwargs):
    return Candidate(ledger=ledger, **kwargs)


class TestRm:
    def test_balanced(self):
        v = rule_rm(with_ledger(make_ledger(pi_plus=8, pi_minus=4)))
        assert v.status == SATISFIED

    def test_three_two(self):
        ledger = make_ledger(lam=(0, 1, 1, 0, 0, 0, 0), pi_plus=5, pi_minus=2)
        assert rule_rm(with_ledger(ledger)).status == SATISFIED

    def test_zero(self):
        v = rule_rm(with_ledger(make_ledger(pi_plus=3, pi_minus=3)))
        assert v.status == VIOLATED
        assert v.evidence == {"residual": -8}

    def test_no_ledger(self):
        assert rule_rm(Candidate()).status == INAPPLICABLE


class TestLemma10:
    def test_consistent_ledger(self):
        ledger = make_ledger(pi_plus=4, pi_minus=0)
        assert rule_lemma10(with_ledger(ledger)).status == SATISFIED

    def test_all_zero_with_negative_signs(self):
        ledger = make_ledger(eps=(-1,) * 6, pi_plus=4, pi_minus=0)
        v = rule_lemma10(with_ledger(ledger))
        assert v.status == VIOLATED
        assert v.evidence["residuals"][:4] == [-2, -2, -2, -6]

    def test_deficit_minus_four_trace_ledger(self):
        ledger = make_ledger(
            lam=(-4, 6, 6, 6, 0, 0, 0), eps=(-1,) * 6, pi_plus=3, pi_minus=3
        )
        assert rule_lemma10(with_ledger(ledger)).status == SATISFIED


class TestLambda0Bound:
    def test_minus_four_violates_base_tier(self):
        ledger = make_ledger(lam=(-4, 0, 0, 0, 0, 0, 0))
        v = rule_lambda0_bound(with_ledger(ledger, t0_only_exterior=True))
        assert v.status == VIOLATED
        assert v.evidence["tier"] == "lemma16"

    def test_three_violates_only_tier_two(self):
        ledger = make_ledger(lam=(3, 0, 0, 0, 0, 0, 0))
        base = rule_lambda0_bound(with_ledger(ledger, t0_only_exterior=True))
        assert base.status == SATISFIED
        sharp = rule_lambda0_bound(
            with_ledger(ledger, t0_only_exterior=True, prop2_tier=True)
        )
        assert sharp.status == VIOLATED
        assert sharp.evidence["tier"] == "prop2"

    def test_zero_satisfied(self):
        ledger = make_ledger()
        v = rule_lambda0_bound(with_ledger(ledger, t0_only_exterior=True))
        assert v.status == SATISFIED

    def test_hypothesis_required(self):
        ledger = make_ledger(lam=(-4, 0, 0, 0, 0, 0, 0))
        assert rule_lambda0_bound(with_ledger(ledger)).status == INAPPLICABLE

    def test_refinement_kills_nonseparating_at_three(self):
        ledger = make_ledger(lam=(-3, 0, 0, 0, 0, 0, 0), eps=(1,) * 6, pi_plus=0, pi_minus=0)
        ct = curve((ns(PLUS, 1, 1), "n"), (ns(PLUS, 1, 1), "n"), (ns(PLUS, 1, 1), "n"))
        v = rule_lambda0_bound(
            Candidate(curve_type=ct, ledger=ledger, t0_only_exterior=True)
        )
        assert v.status == VIOLATED
        assert v.evidence["reason"] == "non-separating nest"

    def test_refinement_checks_epsilon_sum(self):
        ledger = make_ledger(lam=(3, 0, 0, 0, 0, 0, 0), eps=(1,) * 6)
        ct = curve((ns(PLUS, 1, 1), "d"), (ns(PLUS, 1, 1), "d"), (ns(PLUS, 1, 1), "d"))
        v = rule_lambda0_bound(
            Candidate(curve_type=ct, ledger=ledger, t0_only_exterior=True)
        )
        assert v.status == VIOLATED
        assert v.evidence["reason"] == "epsilon sum"


class TestTriangleBound:
    def test_four_violates(self):
        ledger = make_ledger(lam=(0, 0, 0, 0, 0, 0, 4))
        v = rule_triangle_bound(
            with_ledger(ledger, t_only_exterior=(None, None, True)), 3
        )
        assert v.status == VIOLATED
        assert v.evidence == {"zone": "T3", "lambda": 4}

    def test_three_with_deficit_minus_two_satisfied(self):
        ledger = make_ledger(lam=(1, 0, 0, 0, 0, 0, 3))
        assert ledger.lam[0] - ledger.lam[4] - ledger.lam[5] - ledger.lam[6] == -2
        v = rule_triangle_bound(
            with_ledger(ledger, t_only_exterior=(None, None, True)), 3
        )
        assert v.status == SATISFIED

    def test_minus_three_violates(self):
        ledger = make_ledger(lam=(0, 0, 0, 0, 0, 0, -3))
        v = rule_triangle_bound(
            with_ledger(ledger, t_only_exterior=(None, None, True)), 3
        )
        assert v.status == VIOLATED

    def test_hypothesis_off(self):
        ledger = make_ledger(lam=(0, 0, 0, 0, 0, 0, 4))
        assert rule_triangle_bound(with_ledger(ledger), 3).status == INAPPLICABLE


class TestExteriorZone:
    def test_zone_sets(self):
        ct = curve((ns(MINUS, 1, 1), "n"), (ns(MINUS, 1, 1), "n"), (ns(PLUS, 1, 1), "n"))
        v = rule_exterior_zone(Candidate(curve_type=ct))
        assert v.info == {"allowed": [3]}
        ct2 = curve((ns(MINUS, 1, 1), "n"), (ns(PLUS, 1, 1), "n"), (ns(PLUS, 1, 1), "n"))
        assert rule_exterior_zone(Candidate(curve_type=ct2)).info == {"allowed": []}
        ct3 = curve((ns(MINUS, 1, 1), "n"), (ns(MINUS, 1, 1), "n"), (ns(MINUS, 1, 1), "n"))
        assert rule_exterior_zone(Candidate(curve_type=ct3)).info == {"allowed": [0]}

    def test_population_in_forbidden_zone(self):
        ct = curve((ns(MINUS, 1, 1), "n"), (ns(MINUS, 1, 1), "n"), (ns(PLUS, 1, 1), "n"))
        v = rule_exterior_zone(
            Candidate(curve_type=ct, exterior_triangle_pops=(1, 0, 0, 0))
        )
        assert v.status == VIOLATED
        assert v.evidence["zone"] == "T0"

    def test_population_in_allowed_zone(self):
        ct = curve((ns(MINUS, 1, 1), "n"), (ns(MINUS, 1, 1), "n"), (ns(PLUS, 1, 1), "n"))
        v = rule_exterior_zone(
            Candidate(curve_type=ct, exterior_triangle_pops=(0, 0, 0, 4))
        )
        assert v.status == SATISFIED


class TestSeparating:
    def test_up_with_negative_companions(self):
        ct = curve((ns(MINUS, 1, 1), "u"), (ns(MINUS, 1, 1), "n"), (ns(MINUS, 1, 1), "n"))
        v = rule_separating(Candidate(curve_type=ct))
        assert v.status == VIOLATED
        assert v.evidence["residual"] == -1

    def test_down_with_negative_companions(self):
        ct = curve((ns(MINUS, 1, 1), "d"), (ns(MINUS, 1, 1), "n"), (ns(MINUS, 1, 1), "n"))
        assert rule_separating(Candidate(curve_type=ct)).status == SATISFIED

    def test_no_separating_nest(self):
        ct = curve((ns(MINUS, 1, 1), "n"), (ns(MINUS, 1, 1), "n"), (ns(MINUS, 1, 1), "n"))
        assert rule_separating(Candidate(curve_type=ct)).status == INAPPLICABLE


class TestEmptyTriangles:
    def test_balanced_all_even_violates(self):
        ct = curve((ns(PLUS, 1, 1), "n"), (ns(PLUS, 1, 1), "n"), (ns(PLUS, 1, 1), "n"))
        v = rule_empty_triangles(Candidate(curve_type=ct, triangles_empty=True))
        assert v.status == VIOLATED

    def test_listed_triple_satisfies(self):
        ct = curve((ns(MINUS, 1, 0), "n"), (ns(MINUS, 1, 0), "n"), (ns(MINUS, 2, 0), "n"),
                   jump=Jump(3, (1, 1, 1)))
        v = rule_empty_triangles(Candidate(curve_type=ct, triangles_empty=True))
        assert v.status == SATISFIED

    def test_listed_triple_in_any_order(self):
        # same schemes with the two small nests swapped
        ct = curve((ns(PLUS, 0, 1), "n"), (ns(MINUS, 1, 0), "n"), (ns(PLUS, 0, 2), "n"),
                   jump=Jump(3, (1, 1, 1)))
        v = rule_empty_triangles(Candidate(curve_type=ct, triangles_empty=True))
        assert v.status == SATISFIED

    def test_populated_triangle_inapplicable(self):
        ct = curve((ns(PLUS, 1, 1), "n"), (ns(PLUS, 1, 1), "n"), (ns(PLUS, 1, 1), "n"))
        v = rule_empty_triangles(Candidate(curve_type=ct, triangles_empty=False))
        assert v.status == INAPPLICABLE


class TestJump:
    def make_case2_candidate(self):
        # pair difference 3 with a positive jumped nest: case 2 stays open
        return curve(
            (ns(MINUS, 1, 0), "s"),
            (ns(MINUS, 2, 2), "n"),
            (ns(PLUS, 0, 2), "n"),
            jump=Jump(3, (1, 1, 1), crossing=True),
        )

    def test_case2_candidate_open(self):
        v = rule_jump(Candidate(curve_type=self.make_case2_candidate()))
        assert v.status == SATISFIED
        assert v.info == {"open_cases": [2]}

    def test_all_even_jump_violates(self):
        ct = curve(
            (ns(MINUS, 1, 1), "n"),
            (ns(MINUS, 1, 1), "n"),
            (ns(PLUS, 0, 2), "n"),
            jump=Jump(3, (1, 1, 1)),
        )
        v = rule_jump(Candidate(curve_type=ct))
        assert v.status == VIOLATED
        assert v.evidence["pi_delta"] == 2

    def test_no_jump_inapplicable(self):
        ct = curve((ns(MINUS, 1, 1), "n"), (ns(MINUS, 1, 1), "n"), (ns(MINUS, 1, 1), "n"))
        assert rule_jump(Candidate(curve_type=ct)).status == INAPPLICABLE

    def test_numeric_tier(self):
        ct = self.make_case2_candidate()
        good = make_ledger(
            lam=(-1, 0, 0, 0, 0, 0, 0), eps=(-1, -1, 1, -1, 1, 1),
            pi_plus=4, pi_minus=1,
        )
        assert rule_jump(Candidate(curve_type=ct, ledger=good)).status == SATISFIED
        bad = make_ledger(
            lam=(0, 0, 0, 0, 0, 0, 0), eps=(-1, -1, 1, -1, 1, 1),
            pi_plus=4, pi_minus=1,
        )
        assert rule_jump(Candidate(curve_type=ct, ledger=bad)).status == VIOLATED


class TestCatalog:
    def test_order_and_ids(self):
        assert RULE_ORDER == (
            "rm",
            "lemma10",
            "lambda0_bound",
            "triangle_bound",
            "exterior_zone",
            "separating",
            "empty_triangles",
            "jump",
        )
        for rule_id, rule in RULES.items():
            assert rule.rule_id == rule_id
            assert rule.citation and rule.hypothesis and rule.statement

    def test_evaluate_all_ablation(self):
        out = evaluate_all(Candidate(), ablate=("rm",))
        assert "rm" not in out and "lemma10" in out
        with pytest.raises(KeyError):
            evaluate_all(Candidate(), ablate=("bogus",))

    def test_determinism(self):
        ct = curve((ns(MINUS, 1, 1), "u"), (ns(MINUS, 1, 1), "n"), (ns(MINUS, 1, 1), "n"))
        c = Candidate(curve_type=ct)
        assert rule_separating(c) == rule_separating(c)

    def test_evidence_iff_violated(self):
        ledger = make_ledger(pi_plus=8, pi_minus=4)
        for verdict in evaluate_all(with_ledger(ledger)).values():
            assert (verdict.status == VIOLATED) == (verdict.evidence is not None)


class TestInformationMonotonicity:
    def test_enriching_a_violated_candidate_never_satisfies(self):
        # adding curve-type information to a failing ledger cannot flip
        # violated verdicts back to satisfied
        ledger = make_ledger(lam=(-4, 0, 0, 0, 0, 0, 0), pi_plus=3, pi_minus=3)
        bare = Candidate(ledger=ledger, t0_only_exterior=True)
        ct = curve(
            (ns(MINUS, 1, 1), "n"), (ns(MINUS, 1, 1), "n"), (ns(MINUS, 1, 1), "n")
        )
        rich = Candidate(
            curve_type=ct,
            ledger=ledger,
            t0_only_exterior=True,
            t_only_exterior=(True, True, True),
            exterior_triangle_pops=(4, 0, 0, 0),
        )
        before = evaluate_all(bare)
        after = evaluate_all(rich)
        for rule_id, verdict in before.items():
            if verdict.status == VIOLATED:
                assert after[rule_id].status == VIOLATED


class TestReplay:
    def test_replay_accepts_recorded_violations(self):
        samples = [
            ("rm", {"residual": -8}),
            ("lemma10", {"residuals": [-2, -2, -2, -6, 3]}),
            ("lambda0_bound", {"lambda0": -4, "tier": "lemma16"}),
            ("triangle_bound", {"zone": "T3", "lambda": 4}),
            ("separating", {"nest": 1, "f": -1, "g_sum": 0, "residual": -1}),
            ("empty_triangles", {"schemes": ["-", "-", "-"]}),
            ("jump", {"pi_delta": 2, "nu3": 1, "crossing": None}),
        ]
        for rule_id, evidence in samples:
            assert replay_violation(rule_id, evidence)

    def test_replay_rejects_non_violations(self):
        assert not replay_violation("rm", {"residual": 0})
        assert not replay_violation("lambda0_bound", {"lambda0": 2, "tier": "lemma16"})
        assert not replay_violation(
            "empty_triangles", {"schemes": ["(+, -)", "(-, +)", "(-, +, +)"]}
        )
