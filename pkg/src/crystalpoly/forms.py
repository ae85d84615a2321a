"""Exact affine forms and the piecewise-linear generation of inequality systems.

A LinearForm is c + sum phi_k x_k with exact rational coefficients on a
sparse, finitely supported set of positions.  DescentSystem bundles a
Cartan datum, an index sequence and an optional highest weight, and
applies the sign-split update that rewrites a form against the local
bracket form at a position; iterating those updates from the coordinate
seeds (plus the weight seeds in highest-weight mode) closes the system.

Generation is truncated: operators act at positions 1..K and every
produced form provably lives inside the window 1..W where W is the
furthest next-occurrence reachable from 1..K.  Membership and lattice
enumeration work over that window.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cartan import CartanData, IndexSequence, Weight
from .zvectors import BINF, ZVector


@dataclass(frozen=True)
class LinearForm:
    """Affine form: constant plus sparse rational coefficients by position."""

    const: Fraction
    coeffs: tuple[tuple[int, Fraction], ...]  # sorted, no zero coefficients

    @classmethod
    def make(cls, const=0, coeffs=None) -> "LinearForm":
        c = Fraction(const)
        items = []
        for pos, val in (coeffs or {}).items():
            v = Fraction(val)
            if v:
                items.append((int(pos), v))
        return cls(c, tuple(sorted(items)))

    @classmethod
    def x(cls, k: int) -> "LinearForm":
        """The coordinate form taking x -> x_k."""
        return cls(Fraction(0), ((k, Fraction(1)),))

    @classmethod
    def zero(cls) -> "LinearForm":
        return cls(Fraction(0), ())

    def coeff(self, k: int) -> Fraction:
        for pos, val in self.coeffs:
            if pos == k:
                return val
        return Fraction(0)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs and not self.const

    @property
    def support_max(self) -> int:
        return self.coeffs[-1][0] if self.coeffs else 0

    def __add__(self, other: "LinearForm") -> "LinearForm":
        d = dict(self.coeffs)
        for pos, val in other.coeffs:
            d[pos] = d.get(pos, Fraction(0)) + val
        return LinearForm.make(self.const + other.const, d)

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return self + other.scale(-1)

    def scale(self, factor) -> "LinearForm":
        f = Fraction(factor)
        if not f:
            return LinearForm.zero()
        return LinearForm(self.const * f, tuple((p, v * f) for p, v in self.coeffs))

    def evaluate(self, x) -> Fraction:
        """Value at a ZVector or a {position: value} mapping."""
        if isinstance(x, dict):
            get = lambda k: x.get(k, 0)
        else:
            get = x.get
        total = self.const
        for pos, val in self.coeffs:
            total += val * get(pos)
        return total

    def render(self) -> str:
        def num(v):
            return str(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

        parts = []
        if self.const:
            parts.append(num(self.const))
        for pos, val in self.coeffs:
            sign = "-" if val < 0 else "+"
            mag = abs(val)
            term = f"x{pos}" if mag == 1 else f"{num(mag)}*x{pos}"
            if not parts:
                parts.append(term if sign == "+" else f"-{term}")
            else:
                parts.append(f"{sign} {term}")
        return " ".join(parts) if parts else "0"

    def sort_key(self):
        return (self.coeffs, self.const)

    def to_json_obj(self) -> dict:
        return {
            "const": str(self.const),
            "coeffs": {str(pos): str(val) for pos, val in self.coeffs},
        }

    @classmethod
    def from_json_obj(cls, obj) -> "LinearForm":
        return cls.make(
            Fraction(obj["const"]),
            {int(k): Fraction(v) for k, v in obj["coeffs"].items()},
        )


class GenerationError(RuntimeError):
    pass


class DescentSystem:
    """Bracket forms and the sign-split rewriting operator at each position."""

    def __init__(self, cartan: CartanData, seq: IndexSequence, lam: Weight | None = None):
        if seq.rank != cartan.rank:
            raise ValueError("sequence rank must match the Cartan datum")
        if lam is not None and lam.rank != cartan.rank:
            raise ValueError("weight rank must match the Cartan datum")
        self.cartan = cartan
        self.seq = seq
        self.lam = lam

    def beta_plus(self, k: int) -> LinearForm:
        """x_k + pairing-weighted middle + x at the next occurrence of i_k."""
        ik = self.seq.index_at(k)
        kp = self.seq.next_occurrence(k)
        coeffs = {k: 1, kp: 1}
        for j in range(k + 1, kp):
            c = self.cartan.a(ik, self.seq.index_at(j))
            if c:
                coeffs[j] = coeffs.get(j, 0) + c
        return LinearForm.make(0, coeffs)

    def beta_minus(self, k: int) -> LinearForm:
        """Downward companion of beta_plus.

        At a position with an earlier occurrence this is beta_plus there;
        at a first occurrence it is the zero form in free mode and the
        weight-bearing boundary form in highest-weight mode.
        """
        km = self.seq.prev_occurrence(k)
        if km > 0:
            return self.beta_plus(km)
        if self.lam is None:
            return LinearForm.zero()
        ik = self.seq.index_at(k)
        coeffs = {k: 1}
        for j in range(1, k):
            c = self.cartan.a(ik, self.seq.index_at(j))
            if c:
                coeffs[j] = coeffs.get(j, 0) + c
        return LinearForm.make(-self.lam.pairing(ik), coeffs)

    def weight_seed(self, i: int) -> LinearForm:
        """Seed form bounding the first coordinate of index i by the weight."""
        if self.lam is None:
            raise ValueError("weight seeds exist only in highest-weight mode")
        return self.beta_minus(self.seq.first_occurrence(i)).scale(-1)

    def s(self, form: LinearForm, k: int) -> LinearForm:
        """Rewrite `form` against the bracket at k, split on the sign of phi_k."""
        c = form.coeff(k)
        if c > 0:
            return form - self.beta_plus(k).scale(c)
        if c < 0:
            return form - self.beta_minus(k).scale(c)
        return form

    def window_for(self, support_bound: int) -> int:
        """Furthest position any operator at 1..support_bound can reach."""
        return max(
            support_bound,
            max(self.seq.next_occurrence(k) for k in range(1, support_bound + 1)),
        )

    def generate(self, support_bound: int, max_rounds: int = 60) -> "FormSet":
        """Close the seed forms under the rewriting operators at 1..support_bound."""
        if support_bound < 1:
            raise ValueError("support bound must be >= 1")
        window = self.window_for(support_bound)
        trace: dict[LinearForm, tuple] = {}
        frontier: list[LinearForm] = []

        def admit(form, origin):
            if form not in trace:
                trace[form] = origin
                frontier.append(form)

        for j in range(1, support_bound + 1):
            admit(LinearForm.x(j), ("x", j, ()))
        if self.lam is not None:
            for i in self.cartan.indices:
                admit(self.weight_seed(i), ("wt", i, ()))

        rounds = 0
        saturated = True
        while frontier:
            if rounds >= max_rounds:
                saturated = False
                break
            rounds += 1
            layer, frontier = frontier, []
            for form in layer:
                kind, seed, word = trace[form]
                for k in range(1, support_bound + 1):
                    new = self.s(form, k)
                    if new == form:
                        continue
                    if new.support_max > window:
                        raise GenerationError(
                            f"support overflow at position {new.support_max} > window {window}"
                        )
                    admit(new, (kind, seed, word + (k,)))
        notes = () if saturated else (f"round limit {max_rounds} reached before fixpoint",)
        return FormSet(
            forms=tuple(sorted(trace, key=LinearForm.sort_key)),
            window=window,
            lam=self.lam,
            seq=self.seq,
            cartan=self.cartan,
            saturated=saturated,
            rounds=rounds,
            support_bound=support_bound,
            notes=notes,
            trace=trace,
        )


@dataclass
class FormSet:
    """A deduplicated inequality system over a finite window of positions."""

    forms: tuple[LinearForm, ...]
    window: int
    lam: Weight | None = None
    seq: IndexSequence | None = None
    cartan: CartanData | None = None
    saturated: bool = True
    rounds: int = 0
    support_bound: int = 0
    notes: tuple[str, ...] = ()
    trace: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.forms = tuple(sorted(set(self.forms), key=LinearForm.sort_key))

    def __contains__(self, form: LinearForm) -> bool:
        return form in set(self.forms)

    def member(self, x) -> bool:
        """True when every form is nonnegative at x (support within window)."""
        if isinstance(x, ZVector):
            if x.max_pos > self.window:
                raise ValueError("vector support exceeds the system window")
            x = x.as_dict()
        elif isinstance(x, dict):
            if any(k > self.window and v for k, v in x.items()):
                raise ValueError("vector support exceeds the system window")
        return all(f.evaluate(x) >= 0 for f in self.forms)

    def _int_rows(self):
        """(const, ((pos, coeff), ...)) rows as machine ints when possible."""
        rows = []
        for f in self.forms:
            if f.const.denominator != 1 or any(v.denominator != 1 for _, v in f.coeffs):
                return None
            rows.append((int(f.const), tuple((p, int(v)) for p, v in f.coeffs)))
        return rows

    def enumerate_points(self, budget: int) -> set[ZVector]:
        """Nonnegative window-supported lattice points with coordinate sum <= budget
        satisfying every form."""
        mode = BINF if self.lam is None else self.lam
        rows = self._int_rows()
        if rows is None:
            rows = [(f.const, f.coeffs) for f in self.forms]
        found: set[ZVector] = set()
        assignment: dict[int, int] = {}

        def rec(pos: int, remaining: int):
            if pos > self.window:
                if all(
                    const + sum(c * assignment.get(p, 0) for p, c in coeffs) >= 0
                    for const, coeffs in rows
                ):
                    found.add(ZVector.from_dict(assignment, mode))
                return
            for val in range(remaining + 1):
                if val:
                    assignment[pos] = val
                elif pos in assignment:
                    del assignment[pos]
                rec(pos + 1, remaining - val)
            if pos in assignment:
                del assignment[pos]

        rec(1, budget)
        return found

    def _require(self, mode_binf: bool):
        if self.seq is None:
            raise ValueError("this system carries no index sequence")
        if not self.saturated:
            raise ValueError("refusing to judge an unsaturated system")
        if mode_binf and self.lam is not None:
            raise ValueError("positivity applies to free-mode systems")
        if not mode_binf and self.lam is None:
            raise ValueError("ampleness applies to highest-weight systems")

    def positivity_report(self):
        """Nonnegative coefficient at every first-occurrence position, or witnesses."""
        self._require(mode_binf=True)
        witnesses = []
        for form in self.forms:
            for pos, val in form.coeffs:
                if self.seq.prev_occurrence(pos) == 0 and val < 0:
                    witnesses.append((form, pos))
        return not witnesses, witnesses

    def ampleness_report(self):
        """Nonnegative constant term on every form, or the failing forms."""
        self._require(mode_binf=False)
        witnesses = [form for form in self.forms if form.const < 0]
        return not witnesses, witnesses

    def render_text(self) -> str:
        return "\n".join(f"{form.render()} >= 0" for form in self.forms)

    def to_json_list(self) -> list:
        return [form.to_json_obj() for form in self.forms]
