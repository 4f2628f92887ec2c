"""Macaulay inverse systems over an exact field.

Homogeneous forms are stored densely per degree, the variables of the dual
ring act by contraction (exponent subtraction, killing terms that would go
negative), and the Hilbert function of the module generated by a list of
forms is read off as the rank of the contraction coefficient matrix in each
degree.  On top of that sit the randomized drivers that check the
constructed level h-vectors against actual rank computations, including a
characteristic sweep.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import comb
from typing import Optional, Sequence

from .exact import (
    GENERATOR_NAME,
    DenseMatrix,
    FieldSpec,
    Scalar,
    mix,
    rank,
    sample_scalars,
)
from .families import (
    KIND_CODIM5_EVEN,
    KIND_CODIM5_ODD,
    KIND_SOCLE_DEGREE,
    NoSuchFamily,
    codim5_family,
    socle_degree_family,
)
from .sequences import HVector
from .version import VERSION

Monomial = tuple[int, ...]

VERIFICATION_KINDS = (KIND_SOCLE_DEGREE, KIND_CODIM5_ODD, KIND_CODIM5_EVEN)


@lru_cache(maxsize=None)
def monomials(num_vars: int, degree: int) -> tuple[Monomial, ...]:
    """All exponent tuples of the given degree, in descending lex order.

    This ordering is the canonical one used for dense form storage and for
    contraction-matrix rows and columns.
    """
    if num_vars < 1:
        raise ValueError(f"num_vars must be positive, got {num_vars}")
    if degree < 0:
        raise ValueError(f"degree must be nonnegative, got {degree}")
    if num_vars == 1:
        return ((degree,),)
    out = []
    for head in range(degree, -1, -1):
        out.extend((head, *tail) for tail in monomials(num_vars - 1, degree - head))
    return tuple(out)


@lru_cache(maxsize=None)
def _monomial_index(num_vars: int, degree: int) -> dict[Monomial, int]:
    return {m: k for k, m in enumerate(monomials(num_vars, degree))}


class Form:
    """Homogeneous form: a coefficient for every monomial of one degree.

    Coefficients live in a single :class:`FieldSpec` and are kept reduced;
    a zero coefficient means the monomial is absent.
    """

    __slots__ = ("num_vars", "degree", "field", "coeffs")

    def __init__(self, num_vars: int, degree: int, field: FieldSpec,
                 coeffs: Sequence[Scalar]):
        expected = len(monomials(num_vars, degree))
        if len(coeffs) != expected:
            raise ValueError(
                f"need {expected} coefficients for degree {degree} in "
                f"{num_vars} variables, got {len(coeffs)}"
            )
        self.num_vars = num_vars
        self.degree = degree
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, num_vars: int, degree: int, field: FieldSpec) -> "Form":
        n = len(monomials(num_vars, degree))
        return cls(num_vars, degree, field, (field.zero(),) * n)

    @classmethod
    def from_coefficients(cls, num_vars: int, degree: int, field: FieldSpec,
                          coeffs: Sequence) -> "Form":
        return cls(num_vars, degree, field,
                   [field.normalize(v) for v in coeffs])

    @classmethod
    def from_terms(cls, num_vars: int, degree: int, field: FieldSpec,
                   terms: dict) -> "Form":
        index = _monomial_index(num_vars, degree)
        dense = [field.zero()] * len(index)
        for mono, value in terms.items():
            mono = tuple(mono)
            if sum(mono) != degree:
                raise ValueError(f"monomial {mono} does not have degree {degree}")
            dense[index[mono]] = field.normalize(value)
        return cls(num_vars, degree, field, dense)

    @classmethod
    def monomial_form(cls, num_vars: int, exponents: Sequence[int],
                      field: FieldSpec) -> "Form":
        mono = tuple(exponents)
        return cls.from_terms(num_vars, sum(mono), field, {mono: 1})

    def coefficient(self, mono: Monomial) -> Scalar:
        return self.coeffs[_monomial_index(self.num_vars, self.degree)[tuple(mono)]]

    def terms(self) -> list[tuple[Monomial, Scalar]]:
        """Nonzero (monomial, coefficient) pairs in the canonical order."""
        order = monomials(self.num_vars, self.degree)
        return [(m, c) for m, c in zip(order, self.coeffs) if c != 0]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return (self.num_vars, self.degree, self.field, self.coeffs) == (
            other.num_vars, other.degree, other.field, other.coeffs)

    def __repr__(self) -> str:
        nonzero = sum(1 for c in self.coeffs if c != 0)
        return (f"Form(num_vars={self.num_vars}, degree={self.degree}, "
                f"field={self.field}, terms={nonzero})")


def contract(operator: Monomial, form: Form) -> Form:
    """Apply the contraction action of a monomial operator to a form.

    Each variable of the operator lowers the matching exponent by one;
    any term whose exponent would go negative is killed.  The result has
    degree ``form.degree - deg(operator)`` and may be the zero form.
    """
    operator = tuple(operator)
    if len(operator) != form.num_vars:
        raise ValueError(
            f"operator has {len(operator)} variables, form has {form.num_vars}"
        )
    if any(a < 0 for a in operator):
        raise ValueError(f"operator exponents must be nonnegative: {operator}")
    out_degree = form.degree - sum(operator)
    if out_degree < 0:
        raise ValueError(
            f"operator degree {sum(operator)} exceeds form degree {form.degree}"
        )
    index = _monomial_index(form.num_vars, out_degree)
    dense = [form.field.zero()] * len(index)
    for mono, value in form.terms():
        shifted = tuple(a - b for a, b in zip(mono, operator))
        if min(shifted) >= 0:
            dense[index[shifted]] = value
    return Form(form.num_vars, out_degree, form.field, dense)


def _check_generators(generators: Sequence[Form]) -> tuple[int, int, FieldSpec]:
    if not generators:
        raise ValueError("generator list is empty")
    num_vars = generators[0].num_vars
    degree = generators[0].degree
    field = generators[0].field
    for g in generators[1:]:
        if (g.num_vars, g.degree, g.field) != (num_vars, degree, field):
            raise ValueError(
                "generators must share variables, degree and field"
            )
    return num_vars, degree, field


@lru_cache(maxsize=None)
def _contraction_layout(num_vars: int, form_degree: int,
                        degree: int) -> tuple[tuple[int, ...], ...]:
    """For each operator monomial, the dense index of operator+column."""
    index = _monomial_index(num_vars, form_degree)
    cols = monomials(num_vars, degree)
    table = []
    for op in monomials(num_vars, form_degree - degree):
        table.append(tuple(
            index[tuple(a + b for a, b in zip(op, col))] for col in cols
        ))
    return tuple(table)


def contraction_matrix(generators: Sequence[Form], degree: int) -> DenseMatrix:
    """Coefficient matrix of all degree-lowering contractions.

    Rows are indexed by (generator, operator monomial of complementary
    degree), columns by the monomials of the target degree; the entry is
    the coefficient of the column monomial in the contracted generator.
    Its rank is the dimension of the generated module in that degree.
    """
    num_vars, form_degree, field = _check_generators(generators)
    if not 0 <= degree <= form_degree:
        raise ValueError(
            f"degree must lie in [0, {form_degree}], got {degree}"
        )
    layout = _contraction_layout(num_vars, form_degree, degree)
    rows = []
    for g in generators:
        co = g.coeffs
        for positions in layout:
            rows.append(tuple(co[k] for k in positions))
    return DenseMatrix(field, tuple(rows))


def hilbert_function(generators: Sequence[Form]) -> HVector:
    """Hilbert function of the module generated by the forms.

    Entry i is the rank of the degree-i contraction matrix; entry 0 is 1
    and the top entry counts linearly independent generators.
    """
    ranks, _ = _hilbert_ranks(generators)
    return HVector(ranks)


def _hilbert_ranks(generators: Sequence[Form]) -> tuple[tuple[int, ...], list[float]]:
    _, form_degree, _ = _check_generators(generators)
    if all(g.is_zero() for g in generators):
        raise ValueError("all generators are zero")
    ranks = []
    seconds = []
    for i in range(form_degree + 1):
        start = time.perf_counter()
        ranks.append(rank(contraction_matrix(generators, i)))
        seconds.append(time.perf_counter() - start)
    return tuple(ranks), seconds


def truncation_generators(ambient_vars: int, used_vars: int, degree: int,
                          field: FieldSpec) -> list[Form]:
    """All degree-``degree`` monomials in the first ``used_vars`` variables,
    embedded as forms in ``ambient_vars`` variables.

    Their module realizes the polynomial ring in ``used_vars`` variables
    truncated after ``degree``, with Hilbert function (1, 2, ..., degree+1)
    when ``used_vars`` is 2.
    """
    if not 1 <= used_vars <= ambient_vars:
        raise ValueError(
            f"need 1 <= used_vars <= ambient_vars, got {used_vars}, {ambient_vars}"
        )
    if degree < 1:
        raise ValueError(f"degree must be positive, got {degree}")
    padding = (0,) * (ambient_vars - used_vars)
    return [
        Form.monomial_form(ambient_vars, mono + padding, field)
        for mono in monomials(used_vars, degree)
    ]


def linear_combination(weights: Sequence[Scalar], forms: Sequence[Form]) -> Form:
    """Weighted sum of forms of one shape."""
    if len(weights) != len(forms):
        raise ValueError("one weight per form required")
    num_vars, degree, field = _check_generators(forms)
    dense = [field.zero()] * len(forms[0].coeffs)
    for w, f in zip(weights, forms):
        w = field.normalize(w)
        if w == 0:
            continue
        for k, c in enumerate(f.coeffs):
            if c != 0:
                dense[k] = field.add(dense[k], field.mul(w, c))
    return Form(num_vars, degree, field, dense)


def contraction_power(linear: Form, power: int) -> Form:
    """Degree-``power`` form playing the role of a power of a linear form.

    The coefficient of y^a is c^a (the product of the linear coefficients
    raised to the exponents, with no multinomial factors), so a monomial
    contraction acts coefficient-wise: x^b sends this form to c^b times
    the corresponding form of lower degree.  That mirrors how classical
    powers behave under differentiation in characteristic zero and stays
    valid over every field.
    """
    if linear.degree != 1:
        raise ValueError(f"need a linear form, got degree {linear.degree}")
    if power < 1:
        raise ValueError(f"power must be positive, got {power}")
    field = linear.field
    cs = linear.coeffs
    pows = [[field.one()] for _ in cs]
    for var, c in enumerate(cs):
        for _ in range(power):
            pows[var].append(field.mul(pows[var][-1], c))
    dense = []
    for mono in monomials(linear.num_vars, power):
        value = field.one()
        for var, a in enumerate(mono):
            if a:
                value = field.mul(value, pows[var][a])
        dense.append(value)
    return Form(linear.num_vars, power, field, dense)


@dataclass(frozen=True)
class PointConfiguration:
    """Sampled dual linear forms behind the codimension-5 generators.

    ``general_forms`` are fully general in 3 variables; ``line_forms``
    carry a zero first coefficient, dual to points on a fixed line.
    """

    general_forms: tuple[Form, ...]
    line_forms: tuple[Form, ...]
    field: FieldSpec
    seed: int


class FieldTooSmallError(ValueError):
    """The prime field is below the genericity floor: random points cannot
    be expected to behave generally, so verification would be meaningless
    rather than wrong."""

    def __init__(self, characteristic: int, floor: int):
        super().__init__(
            f"GF({characteristic}) is below the genericity floor {floor}"
        )
        self.characteristic = characteristic
        self.floor = floor


def _codim5_counts(d: int, parity: str) -> tuple[int, int]:
    n_general = comb(d + 1, 2)
    # The level plateau equals the total point count, which forces one
    # fewer collinear point in the even case.
    n_line = d + 4 if parity == "odd" else d + 3
    return n_general, n_line


def required_field_size(kind: str, parameter: int) -> int:
    """Genericity floor: 2 * (number of sampled linear forms)^2.

    Constructions that sample no linear forms (the socle-degree family
    samples one full form instead) have floor 0.
    """
    if kind == KIND_SOCLE_DEGREE:
        return 0
    if kind in (KIND_CODIM5_ODD, KIND_CODIM5_EVEN):
        parity = "odd" if kind == KIND_CODIM5_ODD else "even"
        n_general, n_line = _codim5_counts(parameter, parity)
        return 2 * (n_general + n_line) ** 2
    raise ValueError(f"unknown kind {kind!r}")


def codim5_generators(
    d: int, parity: str, field: FieldSpec, seed: int
) -> tuple[PointConfiguration, Form, Form]:
    """Two random generators for the codimension-5 level module.

    Samples C(d+1,2) general linear forms in 3 variables and d+4 (odd) or
    d+3 (even) linear forms supported on the last two variables, raises
    each to the contraction power 2d (odd) or 2d-1 (even), and returns two
    independent random combinations.  Fully determined by (d, parity,
    field, seed).
    """
    if parity not in ("odd", "even"):
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    if d < 10:
        raise ValueError(f"d must be >= 10, got {d}")
    kind = KIND_CODIM5_ODD if parity == "odd" else KIND_CODIM5_EVEN
    floor = required_field_size(kind, d)
    if field.is_modular and field.characteristic < floor:
        raise FieldTooSmallError(field.characteristic, floor)
    n_general, n_line = _codim5_counts(d, parity)
    power = 2 * d if parity == "odd" else 2 * d - 1
    total = 3 * n_general + 2 * n_line + 2 * (n_general + n_line)
    stream = iter(sample_scalars(field, total, seed))
    general = tuple(
        Form.from_coefficients(
            3, 1, field, [next(stream), next(stream), next(stream)]
        )
        for _ in range(n_general)
    )
    line = tuple(
        Form.from_coefficients(3, 1, field, [0, next(stream), next(stream)])
        for _ in range(n_line)
    )
    powers = [contraction_power(f, power) for f in general + line]
    weights_1 = [next(stream) for _ in range(n_general + n_line)]
    weights_2 = [next(stream) for _ in range(n_general + n_line)]
    config = PointConfiguration(general, line, field, seed)
    return config, linear_combination(weights_1, powers), \
        linear_combination(weights_2, powers)


@dataclass
class VerificationReport:
    """Outcome of checking a constructed h-vector by actual rank counts.

    ``best`` is the entrywise maximum over trials: reaching the target
    dimension is an open condition, so any witness certifies a degree.
    ``degree_seconds`` holds wall time per degree summed over trials; it is
    deliberately left out of the JSON view so that reruns with one seed
    are byte-identical.
    """

    kind: str
    parameter: int
    characteristic: int
    seed: int
    trials: int
    target: tuple[int, ...]
    trial_seeds: tuple[int, ...] = ()
    per_trial: tuple[tuple[int, ...], ...] = ()
    best: tuple[int, ...] = ()
    verdict: str = "inconclusive"
    status: str = "ok"
    detail: Optional[str] = None
    generator: str = GENERATOR_NAME
    version: str = VERSION
    degree_seconds: list[float] = dc_field(default_factory=list)

    def to_json_dict(self, command: str = "") -> dict:
        return {
            "kind": self.kind,
            "parameter": self.parameter,
            "characteristic": self.characteristic,
            "seed": self.seed,
            "trials": self.trials,
            "generator": self.generator,
            "version": self.version,
            "command": command,
            "target": list(self.target),
            "trial_seeds": list(self.trial_seeds),
            "per_trial": [list(t) for t in self.per_trial],
            "best": list(self.best),
            "verdict": self.verdict,
            "status": self.status,
            "detail": self.detail,
        }


def family_target(kind: str, parameter: int) -> HVector:
    """Level h-vector the verification must reproduce."""
    if kind == KIND_SOCLE_DEGREE:
        result = socle_degree_family(parameter)
        if isinstance(result, NoSuchFamily):
            raise ValueError(result.reason)
        return result.level
    if kind == KIND_CODIM5_ODD:
        return codim5_family(parameter, "odd").level
    if kind == KIND_CODIM5_EVEN:
        return codim5_family(parameter, "even").level
    raise ValueError(f"unknown kind {kind!r}")


def _trial_generators(kind: str, parameter: int, field: FieldSpec,
                      trial_seed: int) -> list[Form]:
    if kind == KIND_SOCLE_DEGREE:
        e = parameter
        coeffs = sample_scalars(field, comb(e + 1, 2), trial_seed)
        random_form = Form.from_coefficients(3, e - 1, field, coeffs)
        return truncation_generators(3, 2, e - 1, field) + [random_form]
    parity = "odd" if kind == KIND_CODIM5_ODD else "even"
    _, f1, f2 = codim5_generators(parameter, parity, field, trial_seed)
    return [f1, f2]


def verify_construction(kind: str, parameter: int, field: FieldSpec,
                        seed: int = 0, trials: int = 5) -> VerificationReport:
    """Recompute the Hilbert function from random witnesses and compare.

    Each trial draws fresh generators from a seed derived as
    ``mix(seed, trial)``, so the report is a pure function of its inputs
    and trials may run in any order.  The verdict is ``match`` exactly
    when the entrywise-best computed vector equals the target,
    ``inconclusive`` when the field is below the genericity floor.
    """
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    target = family_target(kind, parameter)
    report = VerificationReport(
        kind=kind,
        parameter=parameter,
        characteristic=field.characteristic,
        seed=seed,
        trials=trials,
        target=target.entries,
    )
    floor = required_field_size(kind, parameter)
    if field.is_modular and field.characteristic < floor:
        report.verdict = "inconclusive"
        report.detail = (
            f"GF({field.characteristic}) is below the genericity floor {floor}"
        )
        return report
    trial_seeds = tuple(mix(seed, t) for t in range(trials))
    per_trial = []
    degree_seconds = [0.0] * len(target)
    for trial_seed in trial_seeds:
        generators = _trial_generators(kind, parameter, field, trial_seed)
        if all(g.is_zero() for g in generators):
            per_trial.append((0,) * len(target))
            continue
        ranks, seconds = _hilbert_ranks(generators)
        per_trial.append(ranks)
        for i, s in enumerate(seconds):
            degree_seconds[i] += s
    best = tuple(max(col) for col in zip(*per_trial))
    report.trial_seeds = trial_seeds
    report.per_trial = tuple(per_trial)
    report.best = best
    report.verdict = "match" if best == target.entries else "mismatch"
    report.degree_seconds = degree_seconds
    return report


def sweep_characteristics(kind: str, parameter: int,
                          characteristics: Sequence[int], seed: int = 0,
                          trials: int = 5) -> list[VerificationReport]:
    """One verification report per characteristic, in the given order.

    Each characteristic is processed independently with the same base
    seed; a failure for one of them is recorded in that report's status
    and never aborts the rest of the sweep.
    """
    chars = list(characteristics)
    if not chars:
        raise ValueError("characteristics list is empty")
    target = family_target(kind, parameter)
    reports = []
    for ch in chars:
        try:
            reports.append(
                verify_construction(kind, parameter, FieldSpec(ch), seed, trials)
            )
        except Exception as exc:  # isolate per-characteristic failures
            reports.append(
                VerificationReport(
                    kind=kind,
                    parameter=parameter,
                    characteristic=ch,
                    seed=seed,
                    trials=trials,
                    target=target.entries,
                    verdict="inconclusive",
                    status="error",
                    detail=f"{type(exc).__name__}: {exc}",
                )
            )
    return reports
