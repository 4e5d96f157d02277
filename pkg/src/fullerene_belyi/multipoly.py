"""Sparse multivariate polynomials over Q and sequential linear elimination.

MultiPoly stores {exponent tuple: Fraction} over a fixed, ordered variable
tuple shared by every polynomial of one system; zero coefficients are never
stored.  ParamPoly is a polynomial in z whose coefficients are MultiPolys
(indeterminate-coefficient polynomials such as z^m + a_{m-1} z^{m-1} + ...).

The elimination engine walks a list of equations (by convention the
z-coefficients of some identity, highest degree first), repeatedly
substitutes everything solved so far, divides out factors that the caller
has declared nonzero, and solves each surviving equation for the
highest-priority unknown in which it is linear with an invertible
coefficient.  The full history is kept in an EliminationTrace so that runs
are replayable and reportable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .exact import GaussRat, UniPoly

Expo = tuple[int, ...]
RationalLike = Union[int, Fraction]


class NonDivisibleError(ArithmeticError):
    """Exact multivariate division failed; usually a wrong nonzero assumption."""


class MultiPoly:
    """Sparse polynomial over Q in a fixed ordered set of named variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str],
                 terms: Mapping[Expo, RationalLike] | None = None):
        vs = tuple(variables)
        cleaned: dict[Expo, Fraction] = {}
        for expo, c in (terms or {}).items():
            c = Fraction(c)
            if not c:
                continue
            if len(expo) != len(vs):
                raise ValueError("exponent arity does not match variable set")
            cleaned[tuple(expo)] = c
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(variables: Sequence[str]) -> "MultiPoly":
        return MultiPoly(variables, {})

    @staticmethod
    def const(variables: Sequence[str], c: RationalLike) -> "MultiPoly":
        vs = tuple(variables)
        return MultiPoly(vs, {(0,) * len(vs): Fraction(c)})

    @staticmethod
    def var(variables: Sequence[str], name: str) -> "MultiPoly":
        vs = tuple(variables)
        expo = [0] * len(vs)
        expo[vs.index(name)] = 1
        return MultiPoly(vs, {tuple(expo): Fraction(1)})

    def _check(self, other: "MultiPoly") -> None:
        if self.vars != other.vars:
            raise ValueError("operands use different variable sets")

    # -- structure --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant:
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=0)

    def coefficient_in(self, name: str, power: int) -> "MultiPoly":
        """Collect the coefficient of name**power (a MultiPoly without name)."""
        i = self.vars.index(name)
        out: dict[Expo, Fraction] = {}
        for expo, c in self.terms.items():
            if expo[i] == power:
                reduced = list(expo)
                reduced[i] = 0
                out[tuple(reduced)] = c
        return MultiPoly(self.vars, out)

    def __eq__(self, other) -> bool:
        return (isinstance(other, MultiPoly) and self.vars == other.vars
                and self.terms == other.terms)

    def __bool__(self) -> bool:
        return not self.is_zero

    __hash__ = None  # mutable-dict backed; identity hashing would mislead

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self.terms)
        for expo, c in other.terms.items():
            s = out.get(expo, Fraction(0)) + c
            if s:
                out[expo] = s
            else:
                out.pop(expo, None)
        return MultiPoly(self.vars, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out: dict[Expo, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                expo = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(expo, Fraction(0)) + ca * cb
                if s:
                    out[expo] = s
                else:
                    out.pop(expo, None)
        return MultiPoly(self.vars, out)

    def __rmul__(self, other) -> "MultiPoly":
        return self * other

    def scale(self, s: RationalLike) -> "MultiPoly":
        s = Fraction(s)
        if not s:
            return MultiPoly.zero(self.vars)
        return MultiPoly(self.vars, {e: c * s for e, c in self.terms.items()})

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(self.vars, 1)
        for _ in range(n):
            result = result * self
        return result

    def substitute(self, name: str, replacement: "MultiPoly | RationalLike") -> "MultiPoly":
        """Replace one variable by a polynomial (or constant) and renormalize."""
        if isinstance(replacement, (int, Fraction)):
            replacement = MultiPoly.const(self.vars, replacement)
        self._check(replacement)
        i = self.vars.index(name)
        out = MultiPoly.zero(self.vars)
        powers: dict[int, MultiPoly] = {0: MultiPoly.const(self.vars, 1)}
        maxp = max((e[i] for e in self.terms), default=0)
        for p in range(1, maxp + 1):
            powers[p] = powers[p - 1] * replacement
        for expo, c in self.terms.items():
            stripped = list(expo)
            stripped[i] = 0
            base = MultiPoly(self.vars, {tuple(stripped): c})
            out = out + base * powers[expo[i]]
        return out

    def evaluate(self, assignments: Mapping[str, RationalLike]) -> Fraction:
        idx = {name: self.vars.index(name) for name in assignments}
        total = Fraction(0)
        for expo, c in self.terms.items():
            t = c
            for pos, e in enumerate(expo):
                if not e:
                    continue
                name = self.vars[pos]
                if name not in assignments:
                    raise ValueError(f"no value for variable {name}")
                t *= Fraction(assignments[name]) ** e
            total += t
        return total

    def divide_exact(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact division, lex order; raises NonDivisibleError otherwise."""
        self._check(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return self
        lead_d = max(divisor.terms)
        cd = divisor.terms[lead_d]
        q: dict[Expo, Fraction] = {}
        r = self
        while not r.is_zero:
            lead_r = max(r.terms)
            expo = tuple(x - y for x, y in zip(lead_r, lead_d))
            if any(e < 0 for e in expo):
                raise NonDivisibleError(f"({divisor}) does not divide ({self})")
            c = r.terms[lead_r] / cd
            q[expo] = c
            r = r - MultiPoly(self.vars, {expo: c}) * divisor
        return MultiPoly(self.vars, q)

    # -- display -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for expo in sorted(self.terms, reverse=True):
            c = self.terms[expo]
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip(self.vars, expo) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        joined = parts[0]
        for p in parts[1:]:
            joined += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return joined

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


class ParamPoly:
    """Polynomial in z whose coefficients are MultiPolys over shared variables."""

    __slots__ = ("vars", "coeffs")

    def __init__(self, variables: Sequence[str], coeffs: Iterable[MultiPoly]):
        vs = tuple(variables)
        cs = list(coeffs)
        for c in cs:
            if c.vars != vs:
                raise ValueError("coefficient variable set mismatch")
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("ParamPoly is immutable")

    @staticmethod
    def zero(variables: Sequence[str]) -> "ParamPoly":
        return ParamPoly(variables, ())

    @staticmethod
    def from_terms(variables: Sequence[str],
                   terms: Mapping[int, MultiPoly]) -> "ParamPoly":
        vs = tuple(variables)
        if not terms:
            return ParamPoly.zero(vs)
        cs = [MultiPoly.zero(vs)] * (max(terms) + 1)
        for power, c in terms.items():
            cs[power] = c
        return ParamPoly(vs, cs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> MultiPoly:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return MultiPoly.zero(self.vars)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ParamPoly) and self.vars == other.vars
                and self.coeffs == other.coeffs)

    __hash__ = None

    def __add__(self, other: "ParamPoly") -> "ParamPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return ParamPoly(self.vars, out)

    def __neg__(self) -> "ParamPoly":
        return ParamPoly(self.vars, [-c for c in self.coeffs])

    def __sub__(self, other: "ParamPoly") -> "ParamPoly":
        return self + (-other)

    def __mul__(self, other) -> "ParamPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, MultiPoly):
            return ParamPoly(self.vars, [c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return ParamPoly.zero(self.vars)
        out = [MultiPoly.zero(self.vars)
               for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, x in enumerate(self.coeffs):
            if x.is_zero:
                continue
            for j, y in enumerate(other.coeffs):
                if y.is_zero:
                    continue
                out[i + j] = out[i + j] + x * y
        return ParamPoly(self.vars, out)

    def __rmul__(self, other) -> "ParamPoly":
        return self * other

    def scale(self, s: RationalLike) -> "ParamPoly":
        return ParamPoly(self.vars, [c.scale(s) for c in self.coeffs])

    def __pow__(self, n: int) -> "ParamPoly":
        if n < 0:
            raise ValueError("negative power")
        result = ParamPoly.from_terms(self.vars, {0: MultiPoly.const(self.vars, 1)})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self) -> "ParamPoly":
        return ParamPoly(self.vars,
                         [self.coeffs[i].scale(i) for i in range(1, len(self.coeffs))])

    def substitute(self, name: str, replacement: MultiPoly | RationalLike) -> "ParamPoly":
        return ParamPoly(self.vars,
                         [c.substitute(name, replacement) for c in self.coeffs])

    def evaluate_coeffs(self, assignments: Mapping[str, RationalLike]) -> UniPoly:
        """Assign every variable, producing an exact UniPoly over Q(i)."""
        return UniPoly([GaussRat.of(c.evaluate(assignments)) for c in self.coeffs])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero:
                continue
            mono = "z" if i == 1 else (f"z^{i}" if i else "")
            cs = str(c)
            if mono:
                parts.append(mono if cs == "1" else f"({cs})*{mono}")
            else:
                parts.append(f"({cs})" if (" " in cs) else cs)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ParamPoly({self})"


# ---------------------------------------------------------------------------
# Sequential linear elimination
# ---------------------------------------------------------------------------


class NonLinearStepError(RuntimeError):
    """No remaining equation is linear in any unsolved unknown.

    Carries the partial trace and the offending equation labels so the
    failure can be inspected.
    """

    def __init__(self, trace: "EliminationTrace", stuck_labels: list[int]):
        super().__init__(f"no linear unknown in equations {stuck_labels}")
        self.trace = trace
        self.stuck_labels = stuck_labels


class InconsistentSystemError(RuntimeError):
    """An equation reduced to a nonzero constant."""

    def __init__(self, label: int, value: Fraction):
        super().__init__(f"equation at degree {label} reduced to constant {value}")
        self.label = label
        self.value = value


@dataclass(frozen=True)
class EliminationStep:
    """One solved equation: at z-degree `label`, `equation` (already reduced
    under earlier substitutions) was divided by the recorded assumption
    factors and solved for `variable` = `substitution`."""

    label: int
    equation: MultiPoly
    divided_by: tuple[tuple[MultiPoly, int], ...]
    variable: str
    substitution: MultiPoly


@dataclass
class EliminationTrace:
    steps: list[EliminationStep] = field(default_factory=list)
    assumptions: tuple[MultiPoly, ...] = ()
    free_vars: tuple[str, ...] = ()

    def substitution_for(self, name: str) -> MultiPoly:
        for step in self.steps:
            if step.variable == name:
                return step.substitution
        raise KeyError(name)

    @property
    def solved_vars(self) -> tuple[str, ...]:
        return tuple(s.variable for s in self.steps)

    def apply(self, p: MultiPoly) -> MultiPoly:
        """Substitute every solved variable, in recorded order."""
        for step in self.steps:
            p = p.substitute(step.variable, step.substitution)
        return p

    def apply_param(self, p: ParamPoly) -> ParamPoly:
        for step in self.steps:
            p = p.substitute(step.variable, step.substitution)
        return p

    def resolved_substitutions(self) -> dict[str, MultiPoly]:
        """Each solved variable expressed purely in the free variables."""
        out: dict[str, MultiPoly] = {}
        for i, step in enumerate(self.steps):
            expr = step.substitution
            for later in self.steps[i + 1:]:
                expr = expr.substitute(later.variable, later.substitution)
            out[step.variable] = expr
        return out

    def evaluate(self, free_assignments: Mapping[str, RationalLike]) -> dict[str, Fraction]:
        """Concrete values for every variable given values of the free ones.

        Steps are evaluated in reverse order: a step's expression only
        mentions free variables and variables solved at later steps.
        """
        values: dict[str, Fraction] = {
            name: Fraction(v) for name, v in free_assignments.items()}
        for step in reversed(self.steps):
            values[step.variable] = step.substitution.evaluate(values)
        return values

    def to_report(self) -> dict:
        return {
            "assumptions": [str(a) for a in self.assumptions],
            "free_variables": list(self.free_vars),
            "steps": [
                {
                    "z_degree": s.label,
                    "equation": str(s.equation),
                    "divided_by": [
                        {"factor": str(f), "power": p} for f, p in s.divided_by],
                    "variable": s.variable,
                    "substitution": str(s.substitution),
                }
                for s in self.steps
            ],
        }


def divide_out_assumed_nonzero(eq: MultiPoly, factor: MultiPoly) -> MultiPoly:
    """Divide an equation by a factor the caller has proven nonzero."""
    if factor.is_constant:
        raise ValueError("assumption factors must be nonconstant")
    return eq.divide_exact(factor)


def _divide_assumptions(eq: MultiPoly, assumptions: Sequence[MultiPoly]
                        ) -> tuple[MultiPoly, tuple[tuple[MultiPoly, int], ...]]:
    divided = []
    for f in assumptions:
        count = 0
        while not eq.is_zero:
            try:
                eq = eq.divide_exact(f)
            except NonDivisibleError:
                break
            count += 1
        if count:
            divided.append((f, count))
    return eq, tuple(divided)


def _pick_linear_unknown(eq: MultiPoly, unknowns: Sequence[str],
                         unsolved: set[str], assumptions: Sequence[MultiPoly],
                         ) -> tuple[str, MultiPoly] | None:
    """First unknown (in priority order) with degree one and an invertible
    coefficient; returns (name, substitution expression)."""
    for name in unknowns:
        if name not in unsolved:
            continue
        if eq.degree_in(name) != 1:
            continue
        c1 = eq.coefficient_in(name, 1)
        c0 = eq.coefficient_in(name, 0)
        if c1.is_constant:
            return name, c0.scale(Fraction(-1) / c1.constant_value())
        # nonconstant coefficient: invertible only when it is a constant
        # times registered-nonzero factors, and it must divide the rest
        # exactly so the substitution stays polynomial
        stripped, _ = _divide_assumptions(c1, assumptions)
        if not stripped.is_constant:
            continue
        try:
            return name, -c0.divide_exact(c1)
        except NonDivisibleError:
            continue
    return None


def sequential_linear_solve(system: Sequence[tuple[int, MultiPoly]],
                            unknowns: Sequence[str],
                            assumptions: Sequence[MultiPoly] = (),
                            ) -> EliminationTrace:
    """Solve a triangular-by-luck polynomial system one linear step at a time.

    system      -- (z-degree label, equation) pairs, highest degree first.
    unknowns    -- variable names in solving priority (first wins when an
                   equation is linear in several).
    assumptions -- factors declared nonzero; they are divided out of every
                   reduced equation to maximal power and recorded.

    Equations that reduce to zero are dropped; an equation reducing to a
    nonzero constant raises InconsistentSystemError; if a full pass over the
    remaining equations solves nothing, NonLinearStepError carries the trace.
    """
    trace = EliminationTrace(assumptions=tuple(assumptions))
    unsolved = set(unknowns)
    remaining = list(system)
    while remaining:
        progressed = False
        leftover: list[tuple[int, MultiPoly]] = []
        for label, eq in remaining:
            raw = trace.apply(eq)
            reduced, divided = _divide_assumptions(raw, assumptions)
            if reduced.is_zero:
                progressed = True
                continue
            if reduced.is_constant:
                raise InconsistentSystemError(label, reduced.constant_value())
            pick = _pick_linear_unknown(reduced, unknowns, unsolved, assumptions)
            if pick is None:
                leftover.append((label, eq))
                continue
            name, expr = pick
            trace.steps.append(EliminationStep(
                label=label, equation=raw, divided_by=divided,
                variable=name, substitution=expr))
            unsolved.discard(name)
            progressed = True
        if not progressed:
            trace.free_vars = tuple(v for v in unknowns if v in unsolved)
            raise NonLinearStepError(trace, [label for label, _ in leftover])
        remaining = leftover
    trace.free_vars = tuple(v for v in unknowns if v in unsolved)
    return trace
