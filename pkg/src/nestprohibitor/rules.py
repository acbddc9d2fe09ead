"""Catalog of named restriction rules with citations and typed verdicts.

Each rule maps a candidate (curve complex type, optional orientation
ledger, explicit hypothesis flags) to SATISFIED, VIOLATED with numeric
evidence, or INAPPLICABLE when its hypothesis fails.  Rules never infer
geometry on their own: hypotheses such as "triangle T_i holds only
exterior ovals" arrive as flags set by the caller.

Citations name entries of the axiom registry listed in the README; the
rules encode those statements, not their proofs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .ledger import OrientationLedger, lambda_deficit, lemma10_residuals, rm_residual
from .orevkov import allowed_zones, e_values, f_value, g_value
from .schemes import (
    MINUS,
    PLUS,
    CurveType,
    NestScheme,
    RealScheme,
    iter_permutations,
    pi_delta,
)

SATISFIED = "satisfied"
VIOLATED = "violated"
INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class Candidate:
    """Everything a rule may look at; unset parts make rules inapplicable."""

    curve_type: Optional[CurveType] = None
    scheme: Optional[RealScheme] = None
    ledger: Optional[OrientationLedger] = None
    t0_only_exterior: Optional[bool] = None
    t_only_exterior: tuple[Optional[bool], Optional[bool], Optional[bool]] = (
        None,
        None,
        None,
    )
    triangles_empty: Optional[bool] = None
    exterior_triangle_pops: Optional[tuple[int, int, int, int]] = None
    prop2_tier: bool = False


@dataclass(frozen=True)
class RuleVerdict:
    rule_id: str
    status: str
    evidence: Optional[dict] = None
    info: Optional[dict] = None

    def __post_init__(self):
        if (self.status == VIOLATED) != (self.evidence is not None):
            raise ValueError("evidence must be present exactly when violated")


@dataclass(frozen=True)
class Rule:
    rule_id: str
    citation: str
    hypothesis: str
    statement: str
    check: Callable[[Candidate], RuleVerdict] = field(compare=False)

    def __call__(self, candidate: Candidate) -> RuleVerdict:
        return self.check(candidate)


def _verdict(rule_id, status, evidence=None, info=None) -> RuleVerdict:
    return RuleVerdict(rule_id, status, evidence, info)


# ---------------------------------------------------------------------------
# Individual rules


def rule_rm(c: Candidate) -> RuleVerdict:
    if c.ledger is None:
        return _verdict("rm", INAPPLICABLE)
    r = rm_residual(c.ledger)
    if r != 0:
        return _verdict("rm", VIOLATED, {"residual": r})
    return _verdict("rm", SATISFIED)


def rule_lemma10(c: Candidate) -> RuleVerdict:
    if c.ledger is None:
        return _verdict("lemma10", INAPPLICABLE)
    residuals = lemma10_residuals(c.ledger)
    if any(residuals):
        return _verdict("lemma10", VIOLATED, {"residuals": list(residuals)})
    return _verdict("lemma10", SATISFIED)


def _lambda0_violation(
    lambda0: int,
    prop2_tier: bool,
    all_separating: Optional[bool],
    epsilon_sum: Optional[int],
    emptiable_quads: Optional[tuple[int, ...]],
) -> Optional[dict]:
    """Core predicate shared by the live check and trace replay."""
    if abs(lambda0) > 3:
        return {"lambda0": lambda0, "tier": "lemma16"}
    if prop2_tier and abs(lambda0) > 2:
        return {"lambda0": lambda0, "tier": "prop2"}
    if abs(lambda0) == 3:
        sign = 1 if lambda0 > 0 else -1
        if all_separating is False:
            return {
                "lambda0": lambda0,
                "tier": "lemma16-refinement",
                "reason": "non-separating nest",
            }
        if epsilon_sum is not None and epsilon_sum != -6 * sign:
            return {
                "lambda0": lambda0,
                "tier": "lemma16-refinement",
                "reason": "epsilon sum",
                "epsilon_sum": epsilon_sum,
            }
        if emptiable_quads is not None and not emptiable_quads:
            return {
                "lambda0": lambda0,
                "tier": "lemma16-refinement",
                "reason": "no empty quadrangle",
            }
    return None


def rule_lambda0_bound(c: Candidate) -> RuleVerdict:
    if c.ledger is None or c.t0_only_exterior is not True:
        return _verdict("lambda0_bound", INAPPLICABLE)
    lambda0 = c.ledger.lam[0]
    # The magnitude-3 refinements engage only when the candidate carries
    # separating/quadrangle information, i.e. a curve type.
    all_sep = None
    eps_sum = None
    emptiable = None
    if c.curve_type is not None:
        all_sep = all(ct.separating for ct in c.curve_type.nests)
        eps_sum = sum(c.ledger.eps)
        emptiable = tuple(q for q in (1, 2, 3) if c.ledger.zone_pop[q] == 0)
    violation = _lambda0_violation(lambda0, c.prop2_tier, all_sep, eps_sum, emptiable)
    if violation:
        return _verdict("lambda0_bound", VIOLATED, violation)
    return _verdict("lambda0_bound", SATISFIED)


def _triangle_violation(value: int, deficit: int, zone: int) -> Optional[dict]:
    if abs(value) > 3:
        return {"zone": f"T{zone}", "lambda": value}
    if value == -3:
        return {"zone": f"T{zone}", "lambda": value, "reason": "+3 is forced at magnitude 3"}
    if value == 3 and deficit != -2:
        return {"zone": f"T{zone}", "lambda": value, "deficit": deficit}
    return None


def rule_triangle_bound(c: Candidate, i: Optional[int] = None) -> RuleVerdict:
    """Bound on one corner triangle (i in 1..3), or all flagged ones."""
    if c.ledger is None:
        return _verdict("triangle_bound", INAPPLICABLE)
    indices = (i,) if i is not None else (1, 2, 3)
    deficit = lambda_deficit(c.ledger)
    checked = False
    for idx in indices:
        if c.t_only_exterior[idx - 1] is not True:
            continue
        checked = True
        violation = _triangle_violation(c.ledger.lam[3 + idx], deficit, idx)
        if violation:
            return _verdict("triangle_bound", VIOLATED, violation)
    if not checked:
        return _verdict("triangle_bound", INAPPLICABLE)
    return _verdict("triangle_bound", SATISFIED)


def rule_exterior_zone(c: Candidate) -> RuleVerdict:
    if c.curve_type is None:
        return _verdict("exterior_zone", INAPPLICABLE)
    schemes = c.curve_type.schemes
    zones = allowed_zones(*schemes)
    info = {"allowed": list(zones)}
    if c.exterior_triangle_pops is None:
        return _verdict("exterior_zone", INAPPLICABLE, info=info)
    e = e_values(*schemes)
    for z, pop in enumerate(c.exterior_triangle_pops):
        if pop > 0 and e[z] != 0:
            return _verdict(
                "exterior_zone",
                VIOLATED,
                {"zone": f"T{z}", "e_value": e[z], "population": pop},
                info=info,
            )
    return _verdict("exterior_zone", SATISFIED, info=info)


def rule_separating(c: Candidate) -> RuleVerdict:
    if c.curve_type is None:
        return _verdict("separating", INAPPLICABLE)
    sep = [i for i, ct in enumerate(c.curve_type.nests) if ct.separating]
    if not sep:
        return _verdict("separating", INAPPLICABLE)
    for i in sep:
        j, k = [x for x in range(3) if x != i]
        sj, sk = c.curve_type.nests[j].scheme, c.curve_type.nests[k].scheme
        f = f_value(c.curve_type.nests[i])
        g_sum = g_value(sj) + g_value(sk)
        if f != g_sum:
            return _verdict(
                "separating",
                VIOLATED,
                {"nest": i + 1, "f": f, "g_sum": g_sum, "residual": f - g_sum},
            )
    return _verdict("separating", SATISFIED)


def _empty_triangle_schemes_ok(schemes: tuple[NestScheme, ...]) -> bool:
    """Some nest labeling puts two schemes in {(+,-), (-,+)} and one in
    {(+,-,-), (-,+,+)}."""

    def small(s: NestScheme) -> bool:
        return abs(s.diff) == 1 and s.nu * s.diff == -1

    def big(s: NestScheme) -> bool:
        return abs(s.diff) == 2 and s.nu * s.diff == -2

    for perm in iter_permutations():
        a, b, c_ = (schemes[p] for p in perm)
        if small(a) and small(b) and big(c_):
            return True
    return False


def rule_empty_triangles(c: Candidate) -> RuleVerdict:
    if c.curve_type is None or c.triangles_empty is not True:
        return _verdict("empty_triangles", INAPPLICABLE)
    schemes = c.curve_type.schemes
    if not _empty_triangle_schemes_ok(schemes):
        return _verdict(
            "empty_triangles",
            VIOLATED,
            {"schemes": [str(s) for s in schemes]},
        )
    return _verdict("empty_triangles", SATISFIED)


def jump_cases_open(pd: int, nu3: int, crossing: Optional[bool]) -> list[int]:
    """Trichotomy cases not ruled out by candidate-level data alone."""
    cases = []
    if pd == 4:
        cases.append(1)
    if pd == 3 and nu3 == PLUS and crossing is not False:
        cases.append(2)
    if pd == 3 and nu3 == MINUS and crossing is not True:
        cases.append(3)
    return cases


def rule_jump(c: Candidate) -> RuleVerdict:
    if c.curve_type is None or c.curve_type.jump is None:
        return _verdict("jump", INAPPLICABLE)
    schemes = c.curve_type.schemes
    pd = pi_delta(schemes)
    nu3 = schemes[2].nu
    crossing = c.curve_type.jump.crossing
    open_cases = jump_cases_open(pd, nu3, crossing)
    if not open_cases:
        return _verdict(
            "jump",
            VIOLATED,
            {
                "pi_delta": pd,
                "nu3": nu3,
                "crossing": crossing,
                "reason": "every case requires Pi_delta in {3, 4} with matching sign data",
            },
        )
    if c.ledger is None:
        return _verdict("jump", SATISFIED, info={"open_cases": open_cases})
    lam = c.ledger.lam
    deficit = lambda_deficit(c.ledger)
    ok = []
    if 1 in open_cases and deficit == 0:
        ok.append(1)
    if 2 in open_cases and lam[0] - lam[4] - lam[5] == -1:
        ok.append(2)
    if 3 in open_cases and lam[6] == 1:
        ok.append(3)
    if not ok:
        return _verdict(
            "jump",
            VIOLATED,
            {
                "pi_delta": pd,
                "deficit": deficit,
                "lambda045": lam[0] - lam[4] - lam[5],
                "lambda6": lam[6],
                "open_cases": open_cases,
            },
        )
    return _verdict("jump", SATISFIED, info={"open_cases": ok})


# ---------------------------------------------------------------------------
# Catalog

RULES: dict[str, Rule] = {
    r.rule_id: r
    for r in (
        Rule(
            "rm",
            "Rokhlin-Mishachev formula",
            "complex orientations known",
            "2(Pi+ - Pi-) + (Lambda+ - Lambda-) = 8 in degree 9",
            rule_rm,
        ),
        Rule(
            "lemma10",
            "Lemma 10",
            "base ovals chosen",
            "the five zone-contribution identities hold",
            rule_lemma10,
        ),
        Rule(
            "lambda0_bound",
            "Lemma 16; Proposition 2",
            "T0 contains only exterior ovals",
            "|lambda_0| <= 3; at 3 all nests separate, epsilon sums to -+6 and "
            "a quadrangle is empty; tier 2 sharpens the bound to 2",
            rule_lambda0_bound,
        ),
        Rule(
            "triangle_bound",
            "Proposition 1",
            "T_i contains only exterior ovals",
            "|lambda_{i+3}| <= 3, and value 3 forces sign + and deficit -2",
            rule_triangle_bound,
        ),
        Rule(
            "exterior_zone",
            "Lemma 19",
            "an exterior oval sits in a triangle",
            "a populated triangle T_i forces E_i = 0",
            rule_exterior_zone,
        ),
        Rule(
            "separating",
            "Lemma 20",
            "some nest is separating",
            "F_i = G_j + G_k for every separating nest",
            rule_separating,
        ),
        Rule(
            "empty_triangles",
            "Lemma 21",
            "no ovals in T0..T3",
            "the nest schemes are {(+,-),(-,+)} twice plus {(+,-,-),(-,+,+)}",
            rule_empty_triangles,
        ),
        Rule(
            "jump",
            "Lemma 18; Lemma 7",
            "the curve has a jump",
            "one of: deficit 0 with Pi_delta 4; crossing with "
            "lambda_0-lambda_4-lambda_5 = -1, eps_3 = 1, Pi_delta 3; "
            "non-crossing with lambda_6 = 1, eps_3 = -1, Pi_delta 3",
            rule_jump,
        ),
    )
}

RULE_ORDER = tuple(RULES)


def evaluate_all(candidate: Candidate, ablate: tuple[str, ...] = ()) -> dict[str, RuleVerdict]:
    unknown = [r for r in ablate if r not in RULES]
    if unknown:
        raise KeyError(f"unknown rule ids: {unknown}")
    return {
        rule_id: RULES[rule_id](candidate)
        for rule_id in RULE_ORDER
        if rule_id not in ablate
    }


# ---------------------------------------------------------------------------
# Evidence replay (soundness hook for proof traces)


def _parse_short_scheme(text: str) -> NestScheme:
    """Rebuild a nest scheme (minimal interior counts) from its short form."""
    parts = text.strip("()").replace(" ", "").split(",")
    nu = PLUS if parts[0] == "+" else MINUS
    diff = 0
    if len(parts) > 1:
        diff = (1 if parts[1] == "+" else -1) * (len(parts) - 1)
    a_plus = max(diff, 0) + (1 if diff == 0 else 0)
    return NestScheme(nu, a_plus, a_plus - diff)


def replay_violation(rule_id: str, evidence: dict) -> bool:
    """Re-derive a recorded violation from its own numbers, in isolation."""
    if rule_id == "rm":
        return evidence["residual"] != 0
    if rule_id == "lemma10":
        if "residuals" in evidence:
            return any(evidence["residuals"])
        if "deficit_required" in evidence:
            return evidence["deficit_required"] != evidence["deficit_forced"]
        if "required_budget" in evidence:
            return (
                evidence["required_budget"] > evidence["budget"]
                or (evidence["budget"] - evidence["required_budget"]) % 2 != 0
            )
        if "unreachable" in evidence:
            return evidence["required"] not in evidence["reachable"]
        return False
    if rule_id == "lambda0_bound":
        v = evidence["lambda0"]
        tier = evidence.get("tier")
        if tier == "lemma16":
            return abs(v) > 3
        if tier == "prop2":
            return abs(v) > 2
        reason = evidence.get("reason")
        if reason == "non-separating nest":
            return _lambda0_violation(v, False, False, None, None) is not None
        if reason == "epsilon sum":
            return (
                _lambda0_violation(v, False, True, evidence["epsilon_sum"], None)
                is not None
            )
        if reason == "no empty quadrangle":
            return _lambda0_violation(v, False, True, None, ()) is not None
        return False
    if rule_id == "triangle_bound":
        zone = int(evidence["zone"][1])
        return (
            _triangle_violation(evidence["lambda"], evidence.get("deficit", -4), zone)
            is not None
        )
    if rule_id == "exterior_zone":
        return evidence["e_value"] != 0 and evidence["population"] > 0
    if rule_id == "separating":
        return evidence["residual"] != 0 and evidence["residual"] == evidence["f"] - evidence["g_sum"]
    if rule_id == "empty_triangles":
        return not _empty_triangle_schemes_ok(
            tuple(_parse_short_scheme(s) for s in evidence["schemes"])
        )
    if rule_id == "jump":
        if "open_cases" in evidence:
            return not (
                (1 in evidence["open_cases"] and evidence["deficit"] == 0)
                or (2 in evidence["open_cases"] and evidence["lambda045"] == -1)
                or (3 in evidence["open_cases"] and evidence["lambda6"] == 1)
            )
        return not jump_cases_open(
            evidence["pi_delta"], evidence["nu3"], evidence["crossing"]
        )
    raise KeyError(f"unknown rule id {rule_id!r}")
