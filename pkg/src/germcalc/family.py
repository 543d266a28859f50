"""Parameterized families of germs and invariant scans.

A ``FamilySpec`` holds equation templates over the ring variables plus
named parameters (extra variables of the combined ring); evaluation
substitutes exact rational values for every parameter and checks that the
fiber still passes through the origin.  ``scan`` computes the invariants
fiber by fiber and flags the sample points where the Tjurina number leaves
the modal value (the most frequent finite value, ties to the smaller one,
matching upper semicontinuity: the generic value is the minimum).

The built-in catalog carries the families used throughout the test suite:

* ``tpqr:p,q,r``      x^p + y^q + z^r + lambda*x*y*z
* ``example6``        x^4+y^3+z^3+mu*x*y*z+r*x^3+s1*y+s2*y^2+t1*z+t2*z^2
* ``example7-martin`` x^4-x^2*y^2+s1*x+s2*y+s3*x*y+s4*y^2+s5*y^3+s6*x*y^2
                      +t*y^4+y^5
* ``example8-icis``   the pair (x^4+y^4+2*z^2, s*z-x*y)
* ``example9-y642``   x^6+y^4+z^2+x*y*z+r*x^4+s*x^5+t*y^3+v*z

Parameter defaults (used by the CLI when a point leaves parameters
unset) are zero except example6's mu, which defaults to 1: the family
needs a fixed nonzero value and any choice is recorded in the report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import inf
from typing import Mapping, Sequence

from .modular import modular_tangent_space
from .parse import parse_poly
from .poly import Polynomial
from .singularity import GermInput, find_weights, icis_tjurina, milnor_number, tjurina_number


@dataclass(frozen=True)
class FamilySpec:
    """Equation templates over ring variables plus named parameters."""

    name: str
    ring_vars: tuple[str, ...]
    parameters: tuple[str, ...]
    equations: tuple[Polynomial, ...]  # over ring_vars + parameters
    description: str
    defaults: dict[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if set(self.ring_vars) & set(self.parameters):
            raise ValueError("ring variables and parameters must be disjoint")
        combined = self.ring_vars + self.parameters
        for eq in self.equations:
            if eq.ring != combined:
                raise ValueError("template ring must be ring_vars + parameters")

    @property
    def k(self) -> int:
        return len(self.equations)


def _template(name, ring_vars, parameters, texts, description, defaults=None):
    combined = tuple(ring_vars) + tuple(parameters)
    eqs = tuple(parse_poly(t, combined) for t in texts)
    return FamilySpec(
        name=name,
        ring_vars=tuple(ring_vars),
        parameters=tuple(parameters),
        equations=eqs,
        description=description,
        defaults={k: Fraction(v) for k, v in (defaults or {}).items()},
    )


CATALOG_NAMES = ("tpqr:p,q,r", "example6", "example7-martin", "example8-icis", "example9-y642")


def catalog(name: str) -> FamilySpec:
    """Look up a built-in family; tpqr takes its three exponents inline."""
    ident = name.strip().lower()
    if ident.startswith("tpqr"):
        rest = ident[4:].strip()
        if rest.startswith(":"):
            rest = rest[1:]
        elif rest.startswith("(") and rest.endswith(")"):
            rest = rest[1:-1]
        elif rest:
            raise ValueError(f"unknown family {name!r}; known: {', '.join(CATALOG_NAMES)}")
        try:
            p, q, r = (int(part) for part in rest.split(","))
        except ValueError:
            raise ValueError("tpqr needs three integer exponents, e.g. tpqr:3,3,3") from None
        if min(p, q, r) < 2:
            raise ValueError("tpqr exponents must be at least 2")
        return _template(
            f"tpqr:{p},{q},{r}",
            ("x", "y", "z"),
            ("lambda",),
            [f"x^{p}+y^{q}+z^{r}+lambda*x*y*z"],
            f"three-term germ with exponents ({p},{q},{r}) and a scaled x*y*z term",
        )
    if ident == "example6":
        return _template(
            "example6",
            ("x", "y", "z"),
            ("mu", "r", "s1", "s2", "t1", "t2"),
            ["x^4+y^3+z^3+mu*x*y*z+r*x^3+s1*y+s2*y^2+t1*z+t2*z^2"],
            "five-parameter deformation of the (4,3,3) germ, mu fixed nonzero",
            defaults={"mu": 1},
        )
    if ident == "example7-martin":
        return _template(
            "example7-martin",
            ("x", "y"),
            ("s1", "s2", "s3", "s4", "s5", "s6", "t"),
            ["x^4-x^2*y^2+s1*x+s2*y+s3*x*y+s4*y^2+s5*y^3+s6*x*y^2+t*y^4+y^5"],
            "seven-parameter plane-curve family with a Milnor number jump",
        )
    if ident == "example8-icis":
        return _template(
            "example8-icis",
            ("x", "y", "z"),
            ("s",),
            ["x^4+y^4+2*z^2", "s*z-x*y"],
            "complete intersection space-curve family",
        )
    if ident == "example9-y642":
        return _template(
            "example9-y642",
            ("x", "y", "z"),
            ("r", "s", "t", "v"),
            ["x^6+y^4+z^2+x*y*z+r*x^4+s*x^5+t*y^3+v*z"],
            "four-parameter deformation of the (6,4,2) germ",
        )
    raise ValueError(f"unknown family {name!r}; known: {', '.join(CATALOG_NAMES)}")


def evaluate(spec: FamilySpec, point: Mapping[str, Fraction | int | str]) -> GermInput:
    """Specialize every parameter to an exact rational; fiber must pass 0."""
    values: dict[str, Fraction] = {}
    for p in spec.parameters:
        if p not in point:
            raise ValueError(f"missing value for parameter {p!r}")
        values[p] = Fraction(point[p])
    extra = set(point) - set(spec.parameters)
    if extra:
        raise ValueError(f"unknown parameters {sorted(extra)}")
    fibers = []
    for eq in spec.equations:
        sub = eq.substitute_values(values).restrict_ring(spec.ring_vars)
        if sub.constant_term() != 0:
            raise ValueError("fiber does not pass through the origin")
        fibers.append(sub)
    return GermInput(tuple(fibers))


@dataclass(frozen=True)
class ScanRow:
    point: dict[str, Fraction]
    mu: int | float | None
    tau: int | float | None
    modular_dim: int | None
    weights_found: bool
    non_isolated: bool
    error: str | None = None


@dataclass(frozen=True)
class ScanReport:
    family: str
    rows: tuple[ScanRow, ...]
    modal_tau: int | None
    jump_indices: tuple[int, ...]  # rows where tau leaves the modal value

    @property
    def jump_points(self) -> tuple[ScanRow, ...]:
        return tuple(self.rows[i] for i in self.jump_indices)


def scan(
    spec: FamilySpec,
    points: Sequence[Mapping[str, Fraction | int | str]],
    with_modular: bool = True,
) -> ScanReport:
    """Per-point invariants with jump detection against the modal tau.

    Hypersurface fibers get mu, tau, weight detection and (optionally) the
    modular tangent dimension; complete intersection fibers get the module
    Tjurina number.  Evaluation errors are reported per row, not raised.
    """
    if not points:
        raise ValueError("no sample points")
    rows: list[ScanRow] = []
    for point in points:
        clean = {p: Fraction(point[p]) for p in point}
        try:
            germ = evaluate(spec, clean)
        except ValueError as exc:
            rows.append(
                ScanRow(clean, None, None, None, False, False, error=str(exc))
            )
            continue
        if germ.k == 1:
            f = germ.equations[0]
            mu = milnor_number(germ)
            tau, t1 = tjurina_number(germ)
            non_isolated = t1 is None
            weights_found = find_weights(f) is not None
            modular_dim = None
            if with_modular and not non_isolated:
                modular_dim = modular_tangent_space(f).dimension
            rows.append(ScanRow(clean, mu, tau, modular_dim, weights_found, non_isolated))
        else:
            tau = icis_tjurina(germ)
            rows.append(
                ScanRow(clean, None, tau, None, False, tau == inf)
            )
    finite = [row.tau for row in rows if row.tau is not None and row.tau != inf]
    modal = None
    if finite:
        counts: dict[int, int] = {}
        for t in finite:
            counts[int(t)] = counts.get(int(t), 0) + 1
        best = max(counts.values())
        modal = min(t for t, c in counts.items() if c == best)
    jumps = tuple(
        i
        for i, row in enumerate(rows)
        if row.error is None and (row.tau == inf or (modal is not None and row.tau != modal))
    )
    return ScanReport(family=spec.name, rows=tuple(rows), modal_tau=modal, jump_indices=jumps)
