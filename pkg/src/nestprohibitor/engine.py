"""Candidate enumeration and the exhaustive elimination engine.

For a real scheme the engine enumerates the admissible curve complex
types, then explores each candidate's finite constraint space: chain
branches of the three nests (how a separating chain straddles the central
triangle, base-oval signs, quadrangle shares of non-separating chains),
exterior-oval placements limited to the triangles with vanishing
first-formula residual, and the orientation identities, which pin the
quadrangle contributions.  A candidate survives exactly when some ledger
satisfies every active rule; otherwise each branch is closed by a named
rule with numeric evidence, and the whole record replays
deterministically.

Interior-chain model (the engine's central commitment, validated against
the reproduced intermediate values): a separating even nest either
straddles with an odd central run, contributing (sigma, 0) to
(lambda_0, lambda_{i+3}) with base sign -sigma, or with an even central
run, contributing (0, -sigma) with base sign +sigma; a separating odd
nest does not straddle and contributes nothing, its base carrying the
imbalance sign; a non-separating unjumped chain is quadrangular; only a
jumped chain may place single ovals in the triangles.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .ledger import OrientationLedger
from .figures import FIG21_DISCREPANT_ROW, FIG21_PRINTED_VALUE, FIG21_TRIPLES
from .orevkov import allowed_zones, e_values, f_value, g_value
from .rules import (
    Candidate,
    RULE_ORDER,
    RULES,
    VIOLATED,
    _empty_triangle_schemes_ok,
    _lambda0_violation,
    _triangle_violation,
    evaluate_all,
    jump_cases_open,
)
from .schemes import (
    MINUS,
    OVALS,
    PLUS,
    ComplexType,
    CurveType,
    Jump,
    NestScheme,
    RealScheme,
    enumerate_nest_schemes,
    enumerate_three_nest_schemes,
    nest_complex_types,
    pi_delta,
    total_pairs,
)

MAX_ZONE_POP = 25

THREADS_ENV = "NEST_PROHIBITOR_THREADS"


class EngineError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# Chain branches


@dataclass(frozen=True)
class NestBranch:
    """One resolution of a nest's interior-chain contribution."""

    label: str
    lam0: int  # net contribution to zone T0
    lam_t: int  # net contribution to the nest's corner triangle
    eps: int  # base-oval sign
    w: tuple[int, int]  # nets into the two adjacent quadrangles (low zone first)
    pop_t0: int  # interior ovals parked in the T0 sector
    pop_t: int  # interior ovals parked in the corner sector


def nest_branches(ct: ComplexType, jumped: bool) -> tuple[NestBranch, ...]:
    s = ct.scheme
    alpha = s.alpha
    if ct.tag in ("u", "d"):
        sigma = ct.sigma
        out = [NestBranch("straddle-odd", sigma, 0, -sigma, (0, 0), 1, alpha - 2)]
        if alpha >= 4:
            out.append(
                NestBranch("straddle-even", 0, -sigma, sigma, (0, 0), 2, alpha - 3)
            )
        return tuple(out)
    if ct.tag == "s":
        return (NestBranch("chain", 0, 0, s.mu, (0, 0), 0, alpha - 1),)
    branches = []
    triangle_shares = ((-1, 0, 1), (-1, 0, 1)) if jumped else ((0,), (0,))
    for eps in s.available_base_signs():
        target = s.diff - eps
        for s0 in triangle_shares[0]:
            for st in triangle_shares[1]:
                for wj in (-1, 0, 1):
                    for wk in (-1, 0, 1):
                        if s0 + st + wj + wk != target:
                            continue
                        if abs(s0) + abs(st) + abs(wj) + abs(wk) > alpha - 1:
                            continue
                        label = f"eps={eps:+d},w=({wj:+d},{wk:+d})"
                        if jumped:
                            label = f"jump,{label},t0={s0:+d},t={st:+d}"
                        branches.append(
                            NestBranch(label, s0, st, eps, (wj, wk), abs(s0), abs(st))
                        )
    return tuple(branches)


# ---------------------------------------------------------------------------
# Candidate enumeration


def _structural_fit(nests: tuple[ComplexType, ComplexType, ComplexType]) -> bool:
    """Cheap separating-compatibility filter used by the enumerator.

    The sign-refined residual check stays with the separating rule; here
    the u/d distinction is projected out, so up-variants appear alongside
    the down rows and are left for the rules to kill.
    """
    for i, ct in enumerate(nests):
        if not ct.separating:
            continue
        j, k = (x for x in range(3) if x != i)
        g_sum = g_value(nests[j].scheme) + g_value(nests[k].scheme)
        required = 0 if ct.tag in ("u", "d") else f_value(ct)
        if g_sum != required:
            return False
    return True


def no_jump_candidates(scheme: RealScheme) -> list[CurveType]:
    options = [nest_complex_types(a, jump_allowed=False) for a in scheme.alpha]
    out = []
    for triple in itertools.product(*options):
        if _structural_fit(triple):
            out.append(CurveType(triple))
    return sorted(out, key=str)


def _jump_repartition(alpha: int, diff: int) -> Jump:
    if abs(diff) == 2:
        return Jump(3, (1, 1, alpha - 1))  # all odd: forces the imbalance 2
    return Jump(3, (1, 2, alpha - 1))  # even middle group: imbalance stays small


def jump_candidates(scheme: RealScheme) -> list[CurveType]:
    """Jump-bearing candidates, the jumped nest relabeled into slot 3."""
    seen = {}
    for jumped in range(3):
        others = [x for x in range(3) if x != jumped]
        a_jump = scheme.alpha[jumped]
        if a_jump < 2:
            continue  # a jump needs two interior groups
        companion_options = [
            nest_complex_types(scheme.alpha[o], jump_allowed=False) for o in others
        ]
        for js in enumerate_nest_schemes(a_jump, jump_allowed=True):
            jumped_ct = ComplexType(js, "n")
            jump = _jump_repartition(a_jump, js.diff)
            for c1, c2 in itertools.product(*companion_options):
                triple = (c1, c2, jumped_ct)
                if not _structural_fit(triple):
                    continue
                candidate = CurveType(triple, jump)
                seen.setdefault(str(candidate), candidate)
    return [seen[k] for k in sorted(seen)]


def candidate_complex_types(scheme: RealScheme) -> list[CurveType]:
    """Admissible candidates; jump options only when their trichotomy
    arithmetic is not already ruled out by the pair-sign parity."""
    out = list(no_jump_candidates(scheme))
    for candidate in jump_candidates(scheme):
        schemes = candidate.schemes
        if jump_cases_open(pi_delta(schemes), schemes[2].nu, candidate.jump.crossing):
            out.append(candidate)
    return out


# ---------------------------------------------------------------------------
# Proof traces


@dataclass(frozen=True)
class Closure:
    rule_id: str
    evidence: dict
    count: int = 1

    def to_json_dict(self) -> dict:
        return {"rule": self.rule_id, "evidence": self.evidence, "count": self.count}


@dataclass(frozen=True)
class BranchRecord:
    nests: tuple[str, str, str]
    closures: tuple[Closure, ...]
    solutions_checked: int

    def to_json_dict(self) -> dict:
        return {
            "assignments": list(self.nests),
            "closures": [c.to_json_dict() for c in self.closures],
            "solutionsChecked": self.solutions_checked,
        }


@dataclass(frozen=True)
class ProofTrace:
    candidate: str
    scheme: str
    outcome: str  # "eliminated" | "survives"
    zones_allowed: tuple[int, ...]
    stage_closures: tuple[Closure, ...]
    branches: tuple[BranchRecord, ...]
    witness: Optional[OrientationLedger] = None

    @property
    def cited_rules(self) -> tuple[str, ...]:
        rules = [c.rule_id for c in self.stage_closures]
        for b in self.branches:
            rules.extend(c.rule_id for c in b.closures)
        seen = []
        for r in rules:
            if r not in seen:
                seen.append(r)
        return tuple(seen)

    @property
    def headline_rule(self) -> Optional[str]:
        if self.stage_closures:
            return self.stage_closures[0].rule_id
        for b in self.branches:
            if b.closures:
                return b.closures[0].rule_id
        return None

    def to_json_dict(self) -> dict:
        return {
            "candidate": self.candidate,
            "scheme": self.scheme,
            "outcome": self.outcome,
            "zonesAllowed": list(self.zones_allowed),
            "stageClosures": [c.to_json_dict() for c in self.stage_closures],
            "branches": [b.to_json_dict() for b in self.branches],
            "witness": self.witness.to_json_dict() if self.witness else None,
        }


# ---------------------------------------------------------------------------
# The candidate space and its exhaustive search


@dataclass(frozen=True)
class CandidateSpace:
    """Finite search space of one candidate over one real scheme."""

    curve_type: CurveType
    scheme: RealScheme
    fixed_lambda: dict = field(default_factory=dict)  # zone index -> forced value

    def __post_init__(self):
        if sorted(self.curve_type.alphas()) != sorted(self.scheme.alpha):
            raise EngineError("candidate nests do not match the scheme")
        if self.scheme.beta > MAX_ZONE_POP or max(self.scheme.alpha) > MAX_ZONE_POP:
            raise EngineError(f"zone population bound {MAX_ZONE_POP} exceeded")


def _free_assignments(
    free: tuple[int, ...], budget: int, deficit_rhs: Optional[int]
) -> Iterator[dict[int, int]]:
    """Exterior triangle nets over the free zones, deficit equation applied.

    Zone 0 enters the deficit with +1, zones 1..3 with -1.  All but the
    last free zone range over the oval budget; the last is solved from the
    deficit equation and deliberately NOT budget-capped, so that bound
    rules get to fire on identity-forced values (budget feasibility is
    re-checked when a witness is built).  Assignments are produced in
    order of increasing total absolute value.
    """

    def coeff(z: int) -> int:
        return 1 if z == 0 else -1

    if not free:
        if deficit_rhs is None or deficit_rhs == 0:
            yield {}
        return
    rest, last = free[:-1], free[-1]
    combos: list[tuple[int, tuple[int, ...]]] = []
    for values in itertools.product(*(range(-budget, budget + 1) for _ in rest)):
        used = sum(abs(v) for v in values)
        if used > budget:
            continue
        if deficit_rhs is None:
            for v_last in range(-(budget - used), budget - used + 1):
                combos.append((used + abs(v_last), values + (v_last,)))
        else:
            v_last = (deficit_rhs - sum(coeff(z) * v for z, v in zip(rest, values))) * coeff(last)
            combos.append((used + abs(v_last), values + (v_last,)))
    combos.sort(key=lambda item: (item[0], item[1]))
    for _, values in combos:
        yield dict(zip(free, values))


def _identity_lambdas(
    lam0: int, lam456: tuple[int, int, int], eps: tuple[int, ...]
) -> tuple[int, int, int]:
    rhs1 = -(eps[2] + eps[5] + eps[1] + eps[4]) // 2
    rhs2 = -(eps[2] + eps[5] + eps[0] + eps[3]) // 2
    rhs3 = -(eps[1] + eps[4] + eps[0] + eps[3]) // 2
    return (
        rhs1 - lam0 + lam456[0],
        rhs2 - lam0 + lam456[1],
        rhs3 - lam0 + lam456[2],
    )


def _quad_zones(nest_index: int) -> tuple[int, int]:
    """Quadrangle zone indices adjacent to a nest (0-based nest index)."""
    others = [x for x in range(3) if x != nest_index]
    return (others[0] + 1, others[1] + 1)


class _Search:
    """Shared search backend for eliminate() and ledger_satisfiable()."""

    def __init__(
        self,
        space: CandidateSpace,
        ablate: tuple[str, ...] = (),
        required_case: Optional[int] = None,
    ):
        unknown = [r for r in ablate if r not in RULES]
        if unknown:
            raise KeyError(f"unknown rule ids: {unknown}")
        self.space = space
        self.ct = space.curve_type
        self.scheme = space.scheme
        self.ablate = set(ablate)
        self.required_case = required_case
        self.schemes = self.ct.schemes
        self.beta = self.scheme.beta
        self.pd = pi_delta(self.schemes)
        self.identities = "lemma10" not in self.ablate
        if "exterior_zone" in self.ablate:
            self.zones = (0, 1, 2, 3)
        else:
            self.zones = allowed_zones(*self.schemes)

    def active(self, rule_id: str) -> bool:
        return rule_id not in self.ablate

    # -- stage 1: candidate-level rules ---------------------------------

    def stage_closures(self) -> list[Closure]:
        # The jump trichotomy screens first, as in the main case analysis.
        closures = []
        if self.ct.jump is not None and self.active("jump"):
            verdict = RULES["jump"](Candidate(curve_type=self.ct))
            if verdict.status == VIOLATED:
                closures.append(Closure("jump", verdict.evidence))
                return closures
        if self.active("separating"):
            verdict = RULES["separating"](Candidate(curve_type=self.ct))
            if verdict.status == VIOLATED:
                closures.append(Closure("separating", verdict.evidence))
        return closures

    # -- stage 2: branch exploration -------------------------------------

    def branch_combos(self) -> Iterator[tuple[NestBranch, NestBranch, NestBranch]]:
        jumped_index = self.ct.jump.nest_index - 1 if self.ct.jump else None
        per_nest = [
            nest_branches(ct, jumped=(i == jumped_index))
            for i, ct in enumerate(self.ct.nests)
        ]
        yield from itertools.product(*per_nest)

    def explore_branch(
        self, branches: tuple[NestBranch, ...]
    ) -> tuple[list[Closure], int, Optional[OrientationLedger]]:
        """Close a branch or find a witness.  Returns (closures, checked, witness)."""
        sh0 = sum(b.lam0 for b in branches)
        sh_t = tuple(b.lam_t for b in branches)
        eps = tuple(ct.scheme.nu for ct in self.ct.nests) + tuple(
            b.eps for b in branches
        )
        quad_net = [0, 0, 0, 0]  # zone-indexed, entries 1..3 used
        for i, b in enumerate(branches):
            zj, zk = _quad_zones(i)
            quad_net[zj] += b.w[0]
            quad_net[zk] += b.w[1]
        pop_t0 = sum(b.pop_t0 for b in branches)
        pops_t = tuple(b.pop_t for b in branches)

        closures: dict[tuple, Closure] = {}
        checked = 0

        def close(rule_id: str, evidence: dict) -> None:
            key = (rule_id, repr(sorted(evidence.items())))
            if key in closures:
                closures[key] = Closure(rule_id, evidence, closures[key].count + 1)
            else:
                closures[key] = Closure(rule_id, evidence)

        # Triangles forced empty: the list rule applies before any solving.
        forced_empty = (
            not self.zones or self.beta == 0
        ) and pop_t0 == 0 and not any(pops_t)
        if forced_empty and self.active("empty_triangles"):
            if not _empty_triangle_schemes_ok(self.schemes):
                close(
                    "empty_triangles",
                    {"schemes": [str(s) for s in self.schemes]},
                )
                return list(closures.values()), checked, None

        deficit_rhs = None
        if self.identities:
            deficit_target = self.pd - 4
            deficit_rhs = deficit_target - (sh0 - sum(sh_t))
        free = tuple(z for z in self.zones)

        any_assignment = False
        for xt in _free_assignments(free, self.beta, deficit_rhs):
            any_assignment = True
            checked += 1
            full_xt = {z: xt.get(z, 0) for z in range(4)}
            lam0 = full_xt[0] + sh0
            lam456 = tuple(full_xt[i + 1] + sh_t[i] for i in range(3))
            if self.space.fixed_lambda:
                lam_map = {0: lam0, 4: lam456[0], 5: lam456[1], 6: lam456[2]}
                if any(
                    z in lam_map and lam_map[z] != v
                    for z, v in self.space.fixed_lambda.items()
                ):
                    continue
            outcome = self._check_assignment(
                branches, eps, full_xt, lam0, lam456, quad_net, pop_t0, pops_t, close
            )
            if outcome is not None:
                return list(closures.values()), checked, outcome
        if not any_assignment:
            # only possible with no free zone at all: the deficit identity
            # fails on the forced values
            close(
                "lemma10",
                {
                    "reason": "the deficit identity fails outright",
                    "deficit_required": self.pd - 4,
                    "deficit_forced": sh0 - sum(sh_t),
                },
            )
        return list(closures.values()), checked, None

    def _check_assignment(
        self, branches, eps, xt, lam0, lam456, quad_net, pop_t0, pops_t, close
    ) -> Optional[OrientationLedger]:
        # Empty-triangle list rule on genuinely empty assignments.
        triangles_empty = (
            all(v == 0 for v in xt.values()) and pop_t0 == 0 and not any(pops_t)
        )
        if triangles_empty and self.active("empty_triangles"):
            if not _empty_triangle_schemes_ok(self.schemes):
                close("empty_triangles", {"schemes": [str(s) for s in self.schemes]})
                return None

        # Jump trichotomy, numeric tier.
        if self.ct.jump is not None and self.active("jump"):
            deficit = lam0 - sum(lam456)
            open_cases = jump_cases_open(
                self.pd, self.schemes[2].nu, self.ct.jump.crossing
            )
            if self.required_case is not None:
                open_cases = [c for c in open_cases if c == self.required_case]
            ok = (
                (1 in open_cases and deficit == 0)
                or (2 in open_cases and lam0 - lam456[0] - lam456[1] == -1)
                or (3 in open_cases and lam456[2] == 1)
            )
            if not ok:
                close(
                    "jump",
                    {
                        "pi_delta": self.pd,
                        "open_cases": open_cases,
                        "deficit": deficit,
                        "lambda045": lam0 - lam456[0] - lam456[1],
                        "lambda6": lam456[2],
                    },
                )
                return None

        lam123 = _identity_lambdas(lam0, lam456, eps) if self.identities else None

        # Central-triangle bound with its magnitude-3 refinements.
        if self.active("lambda0_bound"):
            all_sep = all(ct.separating for ct in self.ct.nests)
            emptiable = None
            if lam123 is not None:
                emptiable = tuple(
                    q
                    for q in (1, 2, 3)
                    if quad_net[q] == 0 and lam123[q - 1] == 0
                )
            violation = _lambda0_violation(
                lam0, False, all_sep, sum(eps), emptiable
            )
            if violation:
                close("lambda0_bound", violation)
                return None

        # Corner-triangle bounds.
        if self.active("triangle_bound"):
            deficit = lam0 - sum(lam456)
            for i in (1, 2, 3):
                violation = _triangle_violation(lam456[i - 1], deficit, i)
                if violation:
                    close("triangle_bound", violation)
                    return None

        return self._feasible_ledger(
            branches, eps, xt, lam0, lam456, lam123, quad_net, pop_t0, pops_t, close
        )

    def _feasible_ledger(
        self, branches, eps, xt, lam0, lam456, lam123, quad_net, pop_t0, pops_t, close
    ) -> Optional[OrientationLedger]:
        beta = self.beta
        ext_used = sum(abs(v) for v in xt.values())
        pinned = _identity_lambdas(lam0, lam456, eps)
        y_pinned = [pinned[q - 1] - quad_net[q] for q in (1, 2, 3)]
        pinned_cost = ext_used + sum(abs(v) for v in y_pinned)
        pinned_ok = pinned_cost <= beta and (beta - pinned_cost) % 2 == 0
        if lam123 is not None:
            if not pinned_ok:
                close(
                    "lemma10",
                    {
                        "reason": "oval budget cannot realize the identities",
                        "required_budget": pinned_cost
                        if pinned_cost > beta
                        else pinned_cost + 1,
                        "budget": beta,
                        "lambda": [lam0, *lam123, *lam456],
                    },
                )
                return None
            y = y_pinned
        elif pinned_ok:
            # identities are ablated, but their solution is still the
            # preferred witness shape (keeps ablation monotone)
            lam123, y = pinned, y_pinned
        else:
            if ext_used > beta:
                close(
                    "lemma10",
                    {
                        "reason": "exterior placement exceeds the oval budget",
                        "required_budget": ext_used,
                        "budget": beta,
                    },
                )
                return None
            # flat fallback: zero quadrangle nets, odd leftover absorbed in Q1
            leftover = beta - ext_used
            y = [leftover % 2, 0, 0]
            lam123 = tuple(quad_net[q] + y[q - 1] for q in (1, 2, 3))

        lam = (lam0, *lam123, *lam456)
        leftover = beta - ext_used - sum(abs(v) for v in y)
        pops = [0] * 7
        pops[0] = abs(xt[0]) + pop_t0
        for i in range(3):
            pops[4 + i] = abs(xt[i + 1]) + pops_t[i]
        quad_int = [0, 0, 0, 0]
        for i, b in enumerate(branches):
            zj, zk = _quad_zones(i)
            remaining = (
                self.ct.nests[i].scheme.alpha - 1 - b.pop_t0 - b.pop_t
            )
            quad_int[zj] += abs(b.w[0]) + (remaining - abs(b.w[0]) - abs(b.w[1]))
            quad_int[zk] += abs(b.w[1])
        for q in (1, 2, 3):
            pops[q] = abs(y[q - 1]) + quad_int[q]
        pops[1] += max(leftover, 0)

        eps6 = tuple(eps)
        lambda_delta = sum(lam) + sum(eps6)
        if (OVALS + lambda_delta) % 2:
            raise EngineError("parity failure in the ledger build")
        pairs = total_pairs(self.scheme)
        ledger = OrientationLedger(
            lam=lam,
            eps=eps6,
            lambda_plus=(OVALS + lambda_delta) // 2,
            lambda_minus=(OVALS - lambda_delta) // 2,
            pi_plus=(pairs + self.pd) // 2,
            pi_minus=(pairs - self.pd) // 2,
            zone_pop=tuple(pops),
        )
        ledger.validate(total_pairs=pairs)

        candidate = Candidate(
            curve_type=self.ct,
            scheme=self.scheme,
            ledger=ledger,
            t0_only_exterior=True,
            t_only_exterior=(True, True, True),
            triangles_empty=all(p == 0 for p in (pops[0], pops[4], pops[5], pops[6])),
            exterior_triangle_pops=tuple(abs(xt[z]) for z in range(4)),
        )
        verdicts = evaluate_all(candidate, ablate=tuple(self.ablate))
        for rule_id, verdict in verdicts.items():
            if verdict.status == VIOLATED:
                close(rule_id, verdict.evidence)
                return None
        return ledger

    # -- public drivers ---------------------------------------------------

    def run(self) -> ProofTrace:
        stage = self.stage_closures()
        zones = self.zones
        if stage:
            return ProofTrace(
                candidate=str(self.ct),
                scheme=str(self.scheme),
                outcome="eliminated",
                zones_allowed=zones,
                stage_closures=tuple(stage),
                branches=(),
            )
        records = []
        for combo in self.branch_combos():
            closures, checked, witness = self.explore_branch(combo)
            record = BranchRecord(
                nests=tuple(b.label for b in combo),
                closures=tuple(closures),
                solutions_checked=checked,
            )
            if witness is not None:
                return ProofTrace(
                    candidate=str(self.ct),
                    scheme=str(self.scheme),
                    outcome="survives",
                    zones_allowed=zones,
                    stage_closures=(),
                    branches=(record,),
                    witness=witness,
                )
            records.append(record)
        return ProofTrace(
            candidate=str(self.ct),
            scheme=str(self.scheme),
            outcome="eliminated",
            zones_allowed=zones,
            stage_closures=(),
            branches=tuple(records),
        )

    def first_witness(self) -> Optional[OrientationLedger]:
        trace = self.run()
        return trace.witness


def eliminate(
    candidate: CurveType, scheme: RealScheme, ablate: tuple[str, ...] = ()
) -> ProofTrace:
    """Exhaustively explore one candidate; eliminated or survives-with-witness."""
    return _Search(CandidateSpace(candidate, scheme), ablate).run()


def ledger_satisfiable(
    space: CandidateSpace,
    ablate: tuple[str, ...] = (),
    required_case: Optional[int] = None,
) -> Optional[OrientationLedger]:
    """First ledger satisfying every active rule on the space, if any."""
    return _Search(space, ablate, required_case=required_case).first_witness()


# ---------------------------------------------------------------------------
# Theorem-level drivers


@dataclass(frozen=True)
class SchemeResult:
    scheme: RealScheme
    traces: tuple[ProofTrace, ...]

    @property
    def surviving(self) -> tuple[ProofTrace, ...]:
        return tuple(t for t in self.traces if t.outcome == "survives")

    @property
    def excluded(self) -> bool:
        return not self.surviving

    def to_json_dict(self) -> dict:
        return {
            "scheme": str(self.scheme),
            "alpha": list(self.scheme.alpha),
            "beta": self.scheme.beta,
            "candidates": len(self.traces),
            "eliminated": sum(1 for t in self.traces if t.outcome == "eliminated"),
            "surviving": [t.candidate for t in self.surviving],
            "known": self.scheme.beta == 1,
        }


@dataclass(frozen=True)
class ExclusionReport:
    results: tuple[SchemeResult, ...]

    @property
    def excluded_count(self) -> int:
        return sum(1 for r in self.results if r.excluded)

    @property
    def known_count(self) -> int:
        return sum(1 for r in self.results if r.excluded and r.scheme.beta == 1)

    @property
    def new_count(self) -> int:
        return sum(1 for r in self.results if r.excluded and r.scheme.beta != 1)

    @property
    def all_excluded(self) -> bool:
        return all(r.excluded for r in self.results)

    def to_json_dict(self) -> dict:
        return {
            "schemes": [r.to_json_dict() for r in self.results],
            "excludedCount": self.excluded_count,
            "knownCount": self.known_count,
            "newCount": self.new_count,
        }


def _max_workers() -> int:
    value = os.environ.get(THREADS_ENV, "")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def _scheme_result(
    scheme: RealScheme, ablate: tuple[str, ...]
) -> SchemeResult:
    traces = []
    for candidate in no_jump_candidates(scheme):
        traces.append(eliminate(candidate, scheme, ablate))
    for candidate in jump_candidates(scheme):
        traces.append(eliminate(candidate, scheme, ablate))
    return SchemeResult(scheme, tuple(traces))


def prove_theorem1(
    ablate: tuple[str, ...] = (), schemes: Optional[list[RealScheme]] = None
) -> ExclusionReport:
    """Eliminate every candidate for the all-even three-nest schemes."""
    if schemes is None:
        schemes = enumerate_three_nest_schemes(lambda s: s.all_even)
    workers = _max_workers()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda s: _scheme_result(s, ablate), schemes))
    else:
        results = [_scheme_result(s, ablate) for s in schemes]
    return ExclusionReport(tuple(results))


# ---------------------------------------------------------------------------
# The bound-3 branch analysis (central triangle only exterior)


@dataclass(frozen=True)
class Prop2Row:
    schemes: tuple[NestScheme, NestScheme, NestScheme]
    e0: int
    closed: bool
    closures: tuple[Closure, ...]
    note: str = ""

    def to_json_dict(self) -> dict:
        return {
            "schemes": [str(s) for s in self.schemes],
            "e0": self.e0,
            "closed": self.closed,
            "closures": [c.to_json_dict() for c in self.closures],
            "note": self.note,
        }


@dataclass(frozen=True)
class Prop2Report:
    rows: tuple[Prop2Row, ...]

    @property
    def all_closed(self) -> bool:
        return all(r.closed for r in self.rows)

    def to_json_dict(self) -> dict:
        return {
            "rows": [r.to_json_dict() for r in self.rows],
            "allClosed": self.all_closed,
            "mirror": "the magnitude-3 value of opposite sign follows by "
            "orientation reversal",
        }


def prove_proposition2(ablate: tuple[str, ...] = ()) -> Prop2Report:
    """Close every branch of the |lambda_0| = 3 analysis.

    Assumes the central triangle holds only exterior ovals, the bound-3
    refinements (all nests separating, base and nest signs all equal to
    the opposite of lambda_0's sign, one quadrangle empty), and walks the
    a-priori scheme rows: rows with nonzero central residual force an
    exterior oval into a forbidden triangle; the rest force one corner
    contribution to 1, which only an up-tagged even nest can supply, and
    the separating-formula residual -1 closes it.
    """
    ablated = set(ablate)
    rows = []
    for triple in FIG21_TRIPLES:
        e = e_values(*triple)
        e0 = e[0]
        lam0 = 3 if triple[0].nu == MINUS else -3
        key = "(" + ", ".join(str(s) for s in triple) + ")"
        note = (
            f"computed {e0}; printed {FIG21_PRINTED_VALUE}"
            if key == FIG21_DISCREPANT_ROW
            else ""
        )
        closures: list[Closure] = []
        closed = True
        if e0 != 0:
            # Chain shares move lambda_0 by at most 1 per even nest, so
            # exterior ovals must populate T0, against the residual.
            max_share = sum(1 for s in triple if s.alpha % 2 == 0)
            forced = abs(lam0) - max_share
            if forced <= 0:
                closed = False
            elif "exterior_zone" not in ablated:
                closures.append(
                    Closure(
                        "exterior_zone",
                        {"zone": "T0", "e_value": e0, "population": forced},
                    )
                )
            else:
                closed = False
        else:
            sign = 1 if lam0 > 0 else -1
            for q in (1, 2, 3):
                if e[q] == 0:
                    closed = False  # corner would admit exterior ovals
                    continue
                target = sign  # identity q with lambda_0 = +-3 and empty Q_q
                nest = triple[q - 1]
                if nest.alpha % 2:
                    if "lemma10" not in ablated:
                        closures.append(
                            Closure(
                                "lemma10",
                                {
                                    "zone": f"T{q}",
                                    "required": target,
                                    "reachable": [0],
                                    "unreachable": True,
                                },
                            )
                        )
                    else:
                        closed = False
                    continue
                # Only the straddle-even branch of tag sign -target reaches
                # the corner value; its base sign matches the refinement.
                tag = "u" if target > 0 else "d"
                ct = ComplexType(nest, tag)
                j, k = (x for x in range(3) if x != q - 1)
                residual = (
                    f_value(ct)
                    - g_value(triple[j])
                    - g_value(triple[k])
                )
                if residual != 0 and "separating" not in ablated:
                    closures.append(
                        Closure(
                            "separating",
                            {
                                "nest": q,
                                "f": f_value(ct),
                                "g_sum": f_value(ct) - residual,
                                "residual": residual,
                            },
                        )
                    )
                else:
                    closed = False
        rows.append(Prop2Row(tuple(triple), e0, closed, tuple(closures), note))
    return Prop2Report(tuple(rows))
