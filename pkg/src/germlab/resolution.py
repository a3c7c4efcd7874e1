"""Point blowups of plane curve germs and resolution of branches.

One blowup step normalizes the tangent direction first (shear for a slope,
swap of x and y for a vertical tangent) so that the followed point of the
strict transform is always the origin of the chart in which the exceptional
curve is x = 0. The strict transform is then the exact exponent shift
(i, j) -> (i + j - m, j), where m is the multiplicity being blown up.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Sequence, Union

from .errors import (
    InconsistentSequenceError,
    InvalidCharacteristicError,
    NonIsolatedSingularityError,
    NotAGermError,
    NotABranchError,
    NotSingularError,
    ReducibleTangentConeError,
)
from .polynomials import Direction, Polynomial, Slope, Vertical, VERTICAL

Exponent = tuple[int, int]


@dataclass(frozen=True)
class PurePower:
    """Tangent cone is a single direction with full multiplicity."""

    direction: Direction


class MultipleDirections:
    """Tangent cone splits into at least two distinct directions."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "MultipleDirections()"


MULTIPLE_DIRECTIONS = MultipleDirections()

TangentData = Union[PurePower, MultipleDirections]


def _require_germ(f: Polynomial) -> None:
    if f.is_zero():
        raise NotAGermError("the zero polynomial defines no germ")
    if f(0, 0) != 0:
        raise NotAGermError("the polynomial does not vanish at the origin")


def tangent_data(f: Polynomial) -> TangentData:
    """Classify the tangent cone of the germ at the origin.

    Returns PurePower(direction) when the initial form is a nonzero constant
    times the m-th power of one linear form, MultipleDirections otherwise.
    Over Q an initial form with no rational root structure factors with
    several directions, so it is never a pure power.
    """
    _require_germ(f)
    m = f.order()
    init = f.initial_form()
    top = init.coefficient(0, m)
    if top == 0:
        # x divides the initial form; pure only if it is c * x^m
        if len(init) == 1 and init.coefficient(m, 0) != 0:
            return PurePower(VERTICAL)
        return MULTIPLE_DIRECTIONS
    t = -init.coefficient(1, m - 1) / (top * m)
    expected = Polynomial(
        {(k, m - k): top * comb(m, k) * (-t) ** k for k in range(m + 1)}
    )
    if expected == init:
        return PurePower(Slope(t))
    return MULTIPLE_DIRECTIONS


@dataclass(frozen=True)
class BlowupStep:
    """One blowup: which chart was used, at which direction, and the result."""

    chart: str  # "x" or "y"
    direction: Direction
    multiplicity_before: int
    strict_transform: Polynomial


def _shift_exponents(f: Polynomial, m: int) -> Polynomial:
    return Polynomial({(i + j - m, j): c for (i, j), c in f.terms.items()})


def strict_transform_once(f: Polynomial) -> BlowupStep:
    """Blow up the origin once and follow the unique point of the strict transform.

    Requires a singular germ whose tangent cone is a single direction;
    raises NotSingularError or ReducibleTangentConeError otherwise.
    """
    data = tangent_data(f)
    m = f.order()
    if m < 2:
        raise NotSingularError("the germ is smooth; nothing to blow up")
    if isinstance(data, MultipleDirections):
        raise ReducibleTangentConeError(
            "tangent cone has several directions; the germ is not a branch here"
        )
    direction = data.direction
    if isinstance(direction, Vertical):
        chart = "y"
        aligned = f.swap_variables()
    else:
        chart = "x"
        t = direction.t
        aligned = f if t == 0 else f.substitute_linear(((1, 0), (t, 1)))
    transformed = _shift_exponents(aligned, m)
    return BlowupStep(
        chart=chart,
        direction=direction,
        multiplicity_before=m,
        strict_transform=transformed,
    )


@dataclass(frozen=True)
class ResolutionSequence:
    """The full blowup history of a branch down to a smooth germ."""

    steps: tuple[BlowupStep, ...]
    multiplicity_sequence: tuple[int, ...]
    final_smooth: Polynomial


def resolve_branch(f: Polynomial) -> ResolutionSequence:
    """Blow up repeatedly until the followed germ is smooth.

    Raises NotABranchError (with the failing stage) as soon as some stage
    shows several tangent directions, and NonIsolatedSingularityError when
    the process exceeds 10 * deg(f)^2 steps, which only a non-reduced germ
    can do.
    """
    _require_germ(f)
    budget = 10 * f.total_degree() ** 2
    steps: list[BlowupStep] = []
    current = f
    while current.order() >= 2:
        if len(steps) >= budget:
            raise NonIsolatedSingularityError(
                f"not smooth after {budget} blowups; the germ is not reduced"
            )
        try:
            step = strict_transform_once(current)
        except ReducibleTangentConeError as exc:
            raise NotABranchError(
                f"tangent cone splits at stage {len(steps)}; the germ is not a branch",
                stage=len(steps),
            ) from exc
        steps.append(step)
        current = step.strict_transform
    return ResolutionSequence(
        steps=tuple(steps),
        multiplicity_sequence=tuple(s.multiplicity_before for s in steps),
        final_smooth=current,
    )


def delta_from_sequence(seq: ResolutionSequence) -> int:
    """Sum of m*(m-1)/2 over the multiplicity sequence."""
    return sum(m * (m - 1) // 2 for m in seq.multiplicity_sequence)


def mu_topological(seq: ResolutionSequence) -> int:
    """Milnor number of a branch from its multiplicity sequence alone."""
    return 2 * delta_from_sequence(seq)


@dataclass(frozen=True)
class PuiseuxCharacteristic:
    """Characteristic exponents (m; beta_1, ..., beta_g) of a branch.

    Valid data satisfies: m >= 1; for m = 1 there are no exponents; otherwise
    the exponents strictly increase, start above m and off the lattice m*Z,
    and the gcd chain e_0 = m, e_i = gcd(e_{i-1}, beta_i) strictly decreases
    down to e_g = 1.
    """

    m: int
    betas: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise InvalidCharacteristicError("multiplicity must be a positive integer")
        if self.m == 1:
            if self.betas:
                raise InvalidCharacteristicError(
                    "a smooth characteristic has no exponents"
                )
            return
        if not self.betas:
            raise InvalidCharacteristicError(
                "a singular characteristic needs at least one exponent"
            )
        if self.betas[0] <= self.m or self.betas[0] % self.m == 0:
            raise InvalidCharacteristicError(
                "the first exponent must exceed the multiplicity and avoid its multiples"
            )
        e = self.m
        previous = 0
        for beta in self.betas:
            if beta <= previous:
                raise InvalidCharacteristicError("exponents must strictly increase")
            previous = beta
            nxt = gcd(e, beta)
            if nxt == e:
                raise InvalidCharacteristicError(
                    f"exponent {beta} does not refine the gcd chain"
                )
            e = nxt
        if e != 1:
            raise InvalidCharacteristicError("the gcd chain must end at 1")

    @property
    def gcd_sequence(self) -> tuple[int, ...]:
        out = [self.m]
        for beta in self.betas:
            out.append(gcd(out[-1], beta))
        return tuple(out)

    def __str__(self) -> str:
        inner = ", ".join(str(b) for b in self.betas)
        return f"({self.m}; {inner})" if self.betas else f"({self.m};)"


def expected_sequence_from_characteristic(char: PuiseuxCharacteristic) -> list[int]:
    """Multiplicity sequence a branch with these exponents must produce.

    Walks the Euclidean-type recursion on (m; beta_1, ...): subtract m while
    the first exponent still exceeds 2m, otherwise restart from the remainder
    beta_1 - m. Smooth input gives the empty sequence.
    """
    m = char.m
    betas = list(char.betas)
    sequence: list[int] = []
    while m >= 2:
        sequence.append(m)
        b1 = betas[0]
        assert b1 % m != 0
        if b1 > 2 * m:
            betas = [b - m for b in betas]
            continue
        r = b1 - m
        rest = [b - b1 + m for b in betas[1:]]
        if m % r == 0:
            if not rest:
                # the gcd chain forces r = 1 here: next germ is smooth
                m, betas = r, []
            else:
                m, betas = r, rest
        else:
            m, betas = r, [m] + rest
    return sequence


def characteristic_from_sequence(
    seq: Union[ResolutionSequence, Sequence[int]],
) -> PuiseuxCharacteristic:
    """Reconstruct the characteristic exponents from a multiplicity sequence.

    Inverts the recursion of ``expected_sequence_from_characteristic`` one
    step at a time, from the smooth end backwards; each step has exactly one
    consistent preimage. Raises InconsistentSequenceError when no branch can
    realize the given sequence.
    """
    if isinstance(seq, ResolutionSequence):
        mults = list(seq.multiplicity_sequence)
    else:
        mults = list(seq)
    for m in mults:
        if not isinstance(m, int) or m < 2:
            raise InconsistentSequenceError(
                f"multiplicities must be integers >= 2, got {m!r}"
            )
    if not mults:
        return PuiseuxCharacteristic(1, ())

    state: tuple[int, list[int]] | None = None
    for m in reversed(mults):
        if state is None:
            # only the final blowup of a once-singular germ reaches smoothness
            state = (m, [m + 1])
            continue
        succ_m, succ_betas = state
        if succ_m == m:
            state = (m, [b + m for b in succ_betas])
        elif succ_m < m and m % succ_m == 0:
            state = (m, [m + succ_m] + [b + succ_m for b in succ_betas])
        elif succ_m < m and succ_betas[0] == m:
            state = (m, [m + succ_m] + [b + succ_m for b in succ_betas[1:]])
        else:
            raise InconsistentSequenceError(
                f"no branch continues multiplicity {m} with {succ_m} as the next stage"
            )
    assert state is not None
    try:
        char = PuiseuxCharacteristic(state[0], tuple(state[1]))
    except InvalidCharacteristicError as exc:
        raise InconsistentSequenceError(str(exc)) from exc
    if expected_sequence_from_characteristic(char) != mults:
        raise InconsistentSequenceError(
            "reconstructed exponents do not reproduce the sequence"
        )
    return char
