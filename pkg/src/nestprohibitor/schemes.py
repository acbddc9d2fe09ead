"""Real schemes, nest complex schemes and curve complex types.

The objects here describe the isotopy data of a degree-9 M-curve whose 28
ovals split into three nests (a non-empty oval with alpha_i empty ovals
inside) and beta outer empty ovals, so alpha_1 + alpha_2 + alpha_3 + beta
= 25.  Complex-orientation data is layered on top: each nest gets a sign
for its non-empty oval and a (positive, negative) split of its interior
ovals, and a curve-level record may carry the single admissible "jump" in
one nest's oval chain.

Everything is an immutable value; all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional

DEGREE = 9
GENUS = (DEGREE - 1) * (DEGREE - 2) // 2  # 28
OVALS = GENUS  # an M-curve of odd degree: one pseudo-line plus g ovals
EMPTY_OVALS = OVALS - 3  # 25 empty ovals distributed over nests and outside

PLUS = 1
MINUS = -1


class SchemeError(ValueError):
    """Base class for scheme construction/parsing failures."""


class SchemeSyntaxError(SchemeError):
    """Malformed bracket notation; carries the 0-based offending position."""

    def __init__(self, position: int, message: str):
        super().__init__(f"position {position}: {message}")
        self.position = position


class SchemeArityError(SchemeError):
    """Well-formed text that is not a three-nest depth-2 scheme."""


class SchemeInvariantError(SchemeError):
    """Scheme data violating the oval-count invariants."""


def _sign_str(sign: int) -> str:
    return "+" if sign > 0 else "-"


# ---------------------------------------------------------------------------
# Real schemes


@dataclass(frozen=True, order=True)
class RealScheme:
    """Isotopy type <J + 1<a1> + 1<a2> + 1<a3> + b>, nests in stored order."""

    alpha: tuple[int, int, int]
    beta: int
    degree: int = DEGREE

    def __post_init__(self):
        if self.degree != DEGREE:
            raise SchemeInvariantError(f"only degree {DEGREE} is supported")
        if len(self.alpha) != 3:
            raise SchemeArityError("exactly three nests are required")
        if any(a < 1 for a in self.alpha):
            raise SchemeInvariantError("every nest must contain at least one empty oval")
        if self.beta < 0:
            raise SchemeInvariantError("beta must be non-negative")
        if sum(self.alpha) + self.beta != EMPTY_OVALS:
            raise SchemeInvariantError(
                f"alpha_1+alpha_2+alpha_3+beta must be {EMPTY_OVALS}, "
                f"got {sum(self.alpha) + self.beta}"
            )

    @property
    def is_canonical(self) -> bool:
        return self.alpha[0] <= self.alpha[1] <= self.alpha[2]

    def canonical(self) -> "RealScheme":
        return RealScheme(tuple(sorted(self.alpha)), self.beta)

    @property
    def all_even(self) -> bool:
        return all(a % 2 == 0 for a in self.alpha)

    def __str__(self) -> str:
        return format_real_scheme(self)


def format_real_scheme(scheme: RealScheme) -> str:
    """Canonical one-line text for a scheme; inverse of parse_real_scheme."""
    parts = [f"1<{a}>" for a in scheme.alpha]
    if scheme.beta:
        parts.append(str(scheme.beta))
    return "<J + " + " + ".join(parts) + ">"


class _Parser:
    """Recursive-descent reader for the ASCII bracket notation.

    Grammar:  scheme := "<" "J" ("+" item)* ">"
              item   := count | "1" "<" inner ">"
              inner  := count ("+" count)* | item ("+" item)*
    Counts are positive integers; whitespace is free between tokens.
    Nesting deeper than two levels parses but is rejected afterwards.
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> "SchemeSyntaxError":
        return SchemeSyntaxError(self.pos, message)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        if self.pos >= len(self.text):
            return ""
        return self.text[self.pos]

    def expect(self, char: str) -> None:
        if self.peek() != char:
            got = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected {char!r}, found {got}")
        self.pos += 1

    def read_count(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a positive integer")
        value = int(self.text[start : self.pos])
        if value < 1:
            self.pos = start
            raise self.error("counts must be positive")
        return value

    def read_item(self):
        # Returns either an int (bare empty-oval count) or ("nest", contents).
        count = self.read_count()
        if self.peek() == "<":
            if count != 1:
                raise self.error("only a single oval may enclose others")
            self.pos += 1
            contents = [self.read_item()]
            while self.peek() == "+":
                self.pos += 1
                contents.append(self.read_item())
            self.expect(">")
            return ("nest", contents)
        return count

    def parse(self):
        self.expect("<")
        if self.peek() != "J":
            raise self.error("expected 'J'")
        self.pos += 1
        items = []
        while self.peek() == "+":
            self.pos += 1
            items.append(self.read_item())
        self.expect(">")
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("trailing input after scheme")
        return items


def parse_real_scheme(text: str, strict: bool = True) -> RealScheme:
    """Parse bracket notation such as "<J + 1<2> + 1<2> + 1<20> + 1>".

    Nests are kept in written order.  With strict=True (the default) the
    25-oval total is enforced; strict=False skips only that check.
    """
    items = _Parser(text).parse()
    alphas: list[int] = []
    beta = 0
    for item in items:
        if isinstance(item, int):
            beta += item
            continue
        _, contents = item
        if any(not isinstance(c, int) for c in contents):
            raise SchemeArityError("nests of depth greater than two are not supported")
        alphas.append(sum(contents))
    if len(alphas) != 3:
        raise SchemeArityError(f"expected exactly three nests, found {len(alphas)}")
    total = sum(alphas) + beta
    if strict and total != EMPTY_OVALS:
        raise SchemeInvariantError(
            f"empty ovals must total {EMPTY_OVALS}, got {total}"
        )
    if strict:
        return RealScheme((alphas[0], alphas[1], alphas[2]), beta)
    # Relaxed construction bypasses the dataclass total check.
    scheme = object.__new__(RealScheme)
    object.__setattr__(scheme, "alpha", (alphas[0], alphas[1], alphas[2]))
    object.__setattr__(scheme, "beta", beta)
    object.__setattr__(scheme, "degree", DEGREE)
    return scheme


def enumerate_three_nest_schemes(
    predicate: Optional[Callable[[RealScheme], bool]] = None,
) -> list[RealScheme]:
    """All canonical schemes (a1 <= a2 <= a3, each >= 1), lexicographic.

    The optional predicate filters on the full scheme (alpha triple and
    beta are both available on it).
    """
    out: list[RealScheme] = []
    for a1 in range(1, EMPTY_OVALS + 1):
        for a2 in range(a1, EMPTY_OVALS + 1):
            rest = EMPTY_OVALS - a1 - a2
            if rest < a2:
                break
            for a3 in range(a2, rest + 1):
                scheme = RealScheme((a1, a2, a3), EMPTY_OVALS - a1 - a2 - a3)
                if predicate is None or predicate(scheme):
                    out.append(scheme)
    return out


# ---------------------------------------------------------------------------
# Nest complex schemes


@dataclass(frozen=True, order=True)
class NestScheme:
    """Complex scheme of one nest: non-empty oval sign and interior split."""

    nu: int
    a_plus: int
    a_minus: int

    def __post_init__(self):
        if self.nu not in (PLUS, MINUS):
            raise SchemeInvariantError("nu must be +1 or -1")
        if self.a_plus < 0 or self.a_minus < 0:
            raise SchemeInvariantError("interior counts must be non-negative")
        if self.alpha < 1:
            raise SchemeInvariantError("a nest holds at least one interior oval")
        if abs(self.diff) > 2:
            raise SchemeInvariantError("|a_plus - a_minus| must be at most 2")

    @property
    def alpha(self) -> int:
        return self.a_plus + self.a_minus

    @property
    def diff(self) -> int:
        """Signed interior imbalance a_plus - a_minus."""
        return self.a_plus - self.a_minus

    @property
    def mu(self) -> int:
        """Sign of the imbalance; 0 when balanced."""
        return (self.diff > 0) - (self.diff < 0)

    def available_base_signs(self) -> tuple[int, ...]:
        """Signs an interior oval can carry, hence admissible base-oval signs."""
        signs = []
        if self.a_plus:
            signs.append(PLUS)
        if self.a_minus:
            signs.append(MINUS)
        return tuple(signs)

    def __str__(self) -> str:
        nu = _sign_str(self.nu)
        if self.diff == 0:
            return nu
        mu = _sign_str(self.mu)
        if abs(self.diff) == 1:
            return f"({nu}, {mu})"
        return f"({nu}, {mu}, {mu})"


def enumerate_nest_schemes(alpha: int, jump_allowed: bool) -> list[NestScheme]:
    """All (nu, a_plus, a_minus) with the given interior total.

    Without a jump the imbalance is at most 1 in absolute value; with one
    it may reach 2 (parity with alpha always holds).
    """
    if alpha < 1:
        raise SchemeInvariantError("alpha must be at least 1")
    bound = 2 if jump_allowed else 1
    out = []
    for nu in (PLUS, MINUS):
        for diff in range(bound, -bound - 1, -1):
            if (alpha - diff) % 2:
                continue
            a_plus = (alpha + diff) // 2
            a_minus = alpha - a_plus
            if a_plus < 0 or a_minus < 0:
                continue
            out.append(NestScheme(nu, a_plus, a_minus))
    return out


# ---------------------------------------------------------------------------
# Complex types

TAGS = ("n", "s", "u", "d")
SEPARATING_TAGS = ("s", "u", "d")


@dataclass(frozen=True, order=True)
class ComplexType:
    """A nest's complex scheme plus its separating/up/down tag.

    Tags: "n" non-separating (always admissible), "s" separating with an odd
    interior count, "u"/"d" separating with an even interior count, named by
    the sign of the chain extreme that sits on the central-triangle side
    ("u" when that extreme is negative, "d" when it is positive).
    """

    scheme: NestScheme
    tag: str

    def __post_init__(self):
        if self.tag not in TAGS:
            raise SchemeInvariantError(f"unknown tag {self.tag!r}")
        if self.tag in ("u", "d"):
            if self.scheme.alpha % 2:
                raise SchemeInvariantError("tags u/d require an even nest")
            if self.scheme.diff != 0:
                raise SchemeInvariantError("a separating even nest is balanced")
        if self.tag == "s":
            if self.scheme.alpha % 2 == 0:
                raise SchemeInvariantError("tag s requires an odd nest")
            if abs(self.scheme.diff) != 1:
                raise SchemeInvariantError("a separating odd nest has imbalance 1")

    @property
    def separating(self) -> bool:
        return self.tag in SEPARATING_TAGS

    @property
    def sigma(self) -> int:
        """Sign of the central-side chain extreme for u/d tags."""
        if self.tag == "d":
            return PLUS
        if self.tag == "u":
            return MINUS
        raise SchemeInvariantError(f"tag {self.tag!r} carries no extreme sign")

    def __str__(self) -> str:
        nu = _sign_str(self.scheme.nu)
        if self.scheme.diff == 0:
            return f"({nu}, {self.tag})"
        mu = _sign_str(self.scheme.mu)
        if abs(self.scheme.diff) == 1:
            return f"({nu}, {mu}, {self.tag})"
        return f"({nu}, {mu}, {mu}, {self.tag})"


def nest_complex_types(alpha: int, jump_allowed: bool = False) -> list[ComplexType]:
    """All complex types a nest of the given size admits (no rule filtering)."""
    out = []
    for s in enumerate_nest_schemes(alpha, jump_allowed):
        out.append(ComplexType(s, "n"))
        if abs(s.diff) == 2:
            continue  # a jumped nest is never separating
        if alpha % 2 == 0 and s.diff == 0:
            out.append(ComplexType(s, "u"))
            out.append(ComplexType(s, "d"))
        if alpha % 2 == 1:
            out.append(ComplexType(s, "s"))
    return out


# ---------------------------------------------------------------------------
# Curve complex types


@dataclass(frozen=True)
class Jump:
    """The single admissible chain interruption, fixed in nest 3.

    The sweep through the jumped nest meets an interior group, an exterior
    group and a second interior group, with sizes (l1, l2, l3); the interior
    groups exhaust the nest, so l1 + l3 = alpha.  The interior imbalance of
    the jumped nest reaches +-2 exactly when all three sizes are odd.
    crossing=None leaves the crossing/non-crossing alternative open.
    """

    nest_index: int = 3
    repartition: tuple[int, int, int] = (1, 1, 1)
    crossing: Optional[bool] = None

    def __post_init__(self):
        if self.nest_index != 3:
            raise SchemeInvariantError("the jumped nest is labeled 3 by convention")
        if len(self.repartition) != 3 or any(l < 1 for l in self.repartition):
            raise SchemeInvariantError("repartition sizes must be positive")

    @property
    def all_odd(self) -> bool:
        return all(l % 2 for l in self.repartition)


@dataclass(frozen=True)
class CurveType:
    """Complex type of the whole curve: three nest types plus optional jump."""

    nests: tuple[ComplexType, ComplexType, ComplexType]
    jump: Optional[Jump] = None

    def __post_init__(self):
        if len(self.nests) != 3:
            raise SchemeArityError("a curve type lists exactly three nests")
        for i, ct in enumerate(self.nests, start=1):
            jumped = self.jump is not None and self.jump.nest_index == i
            if jumped and ct.tag != "n":
                raise SchemeInvariantError("a jumped nest is non-separating")
            if abs(ct.scheme.diff) == 2:
                if not jumped:
                    raise SchemeInvariantError(
                        "imbalance 2 requires the jump to sit in that nest"
                    )
                if not self.jump.all_odd:
                    raise SchemeInvariantError(
                        "imbalance 2 requires an all-odd repartition"
                    )
        if self.jump is not None:
            jumped = self.nests[self.jump.nest_index - 1]
            l1, _, l3 = self.jump.repartition
            if l1 + l3 != jumped.scheme.alpha:
                raise SchemeInvariantError(
                    "interior repartition groups must exhaust the jumped nest"
                )
            if self.jump.all_odd and abs(jumped.scheme.diff) != 2:
                raise SchemeInvariantError(
                    "an all-odd repartition forces interior imbalance 2"
                )

    @property
    def schemes(self) -> tuple[NestScheme, NestScheme, NestScheme]:
        return tuple(ct.scheme for ct in self.nests)

    def alphas(self) -> tuple[int, int, int]:
        return tuple(ct.scheme.alpha for ct in self.nests)

    def permuted(self, perm: tuple[int, int, int]) -> "CurveType":
        """Relabel nests by the permutation (jump-bearing types keep nest 3)."""
        if self.jump is not None and perm[2] != 2:
            raise SchemeInvariantError("permutations must fix the jumped nest")
        return CurveType(tuple(self.nests[p] for p in perm), self.jump)

    def __str__(self) -> str:
        body = ", ".join(str(ct) for ct in self.nests)
        if self.jump is None:
            return f"[{body}]"
        cross = {None: "?", True: "crossing", False: "non-crossing"}[self.jump.crossing]
        return f"[{body} | jump {self.jump.repartition} {cross}]"


def pi_delta(schemes) -> int:
    """Difference (positive - negative) of injective-pair counts.

    A pair is positive exactly when the two ovals carry opposite signs, so
    each nest contributes -nu * (a_plus - a_minus).
    """
    return -sum(s.nu * s.diff for s in schemes)


def total_pairs(scheme: RealScheme) -> int:
    """Every injective pair joins a nest oval with its interior: one per oval."""
    return sum(scheme.alpha)


def iter_permutations() -> Iterator[tuple[int, int, int]]:
    yield from (
        (0, 1, 2),
        (0, 2, 1),
        (1, 0, 2),
        (1, 2, 0),
        (2, 0, 1),
        (2, 1, 0),
    )
