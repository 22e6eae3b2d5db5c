"""Brute-force finite-model checking of the infon axioms and theorems.

Each property is a list of *blocks*.  A block names its bound variables,
gives one axis of ``(value, order)`` descriptors per variable, and a law
that evaluates both sides for one case.  The case space of a block is the
cartesian product of its axes, so every property has a closed-form case
count and a flat index that seeded sampling can draw from.

Counterexamples carry their bindings as rendered literals; :func:`replay`
parses them back, rebuilds fresh atoms and re-evaluates the law.
"""

from __future__ import annotations

import enum
import json
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import algebra as alg
from .algebra import NULL, Finite, Infon, JoinClass, Universe
from .syntax import parse_literal

Descriptor = tuple[Fraction, int]


class PropertyId(enum.Enum):
    COMMUTATIVITY_MUL = "CommutativityMul"
    COMMUTATIVITY_ADD = "CommutativityAdd"
    ASSOCIATIVITY_MUL = "AssociativityMul"
    ASSOCIATIVITY_ADD = "AssociativityAdd"
    ADDITIVE_GROUP = "AdditiveGroup"
    MULTIPLICATIVE_IDENTITY = "MultiplicativeIdentity"
    SIBLING = "Sibling"
    ONE_TO_ONE_ADD = "OneToOneAdd"
    ONTO_ADD = "OntoAdd"
    IDENTITY_GROUPS = "IdentityGroups"
    DISTRIBUTION = "Distribution"
    ORDER_OF_JOINS = "OrderOfJoins"
    FINITE_WRAPAROUND = "FiniteWraparound"
    NON_IDENTITY = "NonIdentity"
    CLOSED_EVOLUTION_COUNT = "ClosedEvolutionCount"
    ROUND_TRIPS = "RoundTrips"
    EXCLUDED_MIDDLE = "ExcludedMiddle"

    @classmethod
    def parse(cls, text: str) -> "PropertyId":
        for p in cls:
            if text.lower() in (p.value.lower(), p.name.lower()):
                return p
        raise ValueError(f"unknown property {text!r}")


class Verdict(enum.Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    HOLDS_CONDITIONALLY = "HoldsConditionally"
    ERROR = "Error"


class BudgetExceeded(Exception):
    pass


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class CheckConfig:
    max_order: int = 8
    denominator_bound: int = 1
    properties: frozenset[PropertyId] = frozenset(PropertyId)
    sample_seed: int | None = None
    case_budget: int = 10**7

    def __post_init__(self):
        if self.max_order < 2:
            raise ConfigError("max_order must be at least 2")
        if self.denominator_bound < 1:
            raise ConfigError("denominator_bound must be at least 1")
        if self.case_budget < 1:
            raise ConfigError("case_budget must be at least 1")

    @property
    def orders(self) -> range:
        return range(2, self.max_order + 1)

    def bounds(self) -> dict:
        return {"max_order": self.max_order, "denominator_bound": self.denominator_bound,
                "case_budget": self.case_budget, "sample_seed": self.sample_seed}


@dataclass(frozen=True)
class Counterexample:
    property: PropertyId
    law: str
    bindings: dict[str, str]
    lhs: str
    rhs: str
    note: str = ""

    def to_dict(self) -> dict:
        return {"property": self.property.value, "law": self.law, "bindings": self.bindings,
                "lhs": self.lhs, "rhs": self.rhs, "note": self.note}

    @classmethod
    def from_dict(cls, d: dict) -> "Counterexample":
        return cls(PropertyId(d["property"]), d["law"], dict(d["bindings"]),
                   d["lhs"], d["rhs"], d.get("note", ""))


@dataclass
class ReportEntry:
    property: PropertyId
    verdict: Verdict
    cases_checked: int
    total_cases: int
    sampled: bool
    counterexamples: list[Counterexample] = field(default_factory=list)
    failures: int = 0
    elapsed: float = 0.0
    bounds: dict = field(default_factory=dict)
    condition: str = ""
    error: str = ""

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "property": self.property.value,
            "verdict": self.verdict.value,
            "cases_checked": self.cases_checked,
            "sampled": self.sampled,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "elapsed_ms": round(self.elapsed * 1000, 3) if timing else None,
            "total_cases": self.total_cases,
            "failures": self.failures,
            "bounds": self.bounds,
        }
        if self.condition:
            d["condition"] = self.condition
        if self.error:
            d["error"] = self.error
        return d


@dataclass
class Report:
    entries: list[ReportEntry] = field(default_factory=list)

    def __getitem__(self, p: PropertyId) -> ReportEntry:
        for e in self.entries:
            if e.property is p:
                return e
        raise KeyError(p)

    def to_jsonl(self, timing: bool = False) -> str:
        return "".join(json.dumps(e.to_dict(timing), sort_keys=True) + "\n" for e in self.entries)

    def to_text(self, timing: bool = False) -> str:
        lines = []
        for e in self.entries:
            mode = f"sampled {e.cases_checked}/{e.total_cases}" if e.sampled else "exhaustive"
            line = f"{e.property.value:<24} {e.verdict.value:<20} cases={e.cases_checked:<9} {mode}"
            if timing:
                line += f"  {e.elapsed * 1000:.1f} ms"
            lines.append(line)
            if e.condition:
                lines.append(f"    holds when {e.condition}; {e.failures} case(s) outside it fail")
            if e.error:
                lines.append(f"    error: {e.error}")
            for c in e.counterexamples:
                binds = ", ".join(f"{k}={v}" for k, v in c.bindings.items())
                lines.append(f"    counterexample [{c.law}] {binds}: {c.lhs} vs {c.rhs}")
        return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# Laws
# ---------------------------------------------------------------------------

Sides = Callable[[Universe, dict[str, Infon]], tuple[object, object]]


def _show(x: object) -> str:
    if isinstance(x, Infon):
        return alg.render(x)
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, tuple):
        return "(" + ", ".join(_show(y) for y in x) + ")"
    return str(x)


def _show_structure(x: object) -> str:
    return alg.structure(x) if isinstance(x, Infon) else _show(x)


def _same(x: object, y: object) -> bool:
    return x == y


@dataclass(frozen=True)
class Law:
    name: str
    sides: Sides
    relation: Callable[[object, object], bool] = _same
    show: Callable[[object], str] = _show


def _grid(order: int, step: Fraction) -> list[Fraction]:
    return [step * k for k in range(int(order / step))]


def _comm_mul(u, b):
    return alg.mul_join(b["a"], b["b"]), alg.mul_join(b["b"], b["a"])


def _comm_add(u, b):
    return alg.add_join(b["a"], b["b"]), alg.add_join(b["b"], b["a"])


def _assoc_mul(u, b):
    x, y, z = b["a"], b["b"], b["c"]
    return alg.mul_join(alg.mul_join(x, y), z), alg.mul_join(x, alg.mul_join(y, z))


def _assoc_add(u, b):
    x, y, z = b["a"], b["b"], b["c"]
    return alg.add_join(alg.add_join(x, y), z), alg.add_join(x, alg.add_join(y, z))


def _group_closure(u, b):
    return alg.add_join(b["a"], b["b"]), b["s"]


def _group_identity(u, b):
    return alg.add_join(b["a"], b["z"]), b["a"]


def _group_inverse(u, b):
    return alg.add_join(b["a"], alg.add_inverse(b["a"])), b["z"]


def _mul_identity(u, b):
    return alg.mul_join(b["a"], NULL), b["a"]


def _mul_inverse(u, b):
    return alg.mul_join(b["a"], alg.mul_inverse(b["a"])), b["n"]


def _sibling(u, b):
    a, c = b["a"], b["c"]
    gap = alg.sub_join(c, a)
    witness = alg.new_atom(u, gap.value, a.order)
    return alg.add_join(a, witness), c


def _translates(u, b):
    a, q = b["a"], b["q"]
    xs = [alg.new_atom(u, v, a.order) for v in _grid(a.order.extent, q.value)]
    return xs, [alg.add_join(a, x) for x in xs]


def _one_to_one(u, b):
    xs, images = _translates(u, b)
    values = len({y.value for y in images})
    keys = len(set(images))
    return (values, keys), (len(xs), len(xs))


def _onto(u, b):
    xs, images = _translates(u, b)
    return sorted({y.value for y in images}), sorted(x.value for x in xs)


def _identity_unique(u, b):
    e, q = b["e"], b["q"]
    vs = [alg.new_atom(u, v, e.order) for v in _grid(e.order.extent, q.value)]
    acts = all(alg.equal(alg.add_join(v, e), v) for v in vs)
    return acts, e.value == 0


def _identity_mul(u, b):
    a = b["a"]
    i = alg.identity_element(a, JoinClass.MULTIPLICATIVE)
    return (alg.mul_join(a, i), i), (a, NULL)


def _identity_orders(u, b):
    ia = alg.identity_element(b["a"], JoinClass.ADDITIVE)
    ib = alg.identity_element(b["b"], JoinClass.ADDITIVE)
    return alg.equal(ia, ib), b["a"].order == b["b"].order


def _distribution(u, b):
    x, y, z = b["a"], b["b"], b["c"]
    lhs = alg.mul_join(x, alg.add_join(y, z))
    rhs = alg.add_join(alg.mul_join(x, y), alg.mul_join(x, z))
    return lhs, rhs


def _order_of_joins(u, b):
    m, n = b["a"].order.extent, b["b"].order.extent
    xs = [alg.new_atom(u, v, Finite(m)) for v in range(int(m))]
    ys = [alg.new_atom(u, v, Finite(n)) for v in range(int(n))]
    joins = [(x, y, alg.mul_join(x, y)) for x in xs for y in ys]
    states = len({j for _, _, j in joins})
    orders_ok = all(j.order == Finite(m * n) for _, _, j in joins)
    parts_ok = all(alg.contains(j, x) and alg.contains(j, y) for x, y, j in joins)
    return (states, orders_ok, parts_ok), (int(m * n), True, True)


def _wrap_zero(u, b):
    e, f = b["e"], b["f"]
    return alg.add_join(e, f), alg.add_join(alg.zero_of_order(f.order), f)


def _wrap_order(u, b):
    unit = b["q"]
    total, k = unit, 1
    while total.value != 0:
        total = alg.add_join(total, unit)
        k += 1
    return k, int(unit.order.extent)


def _non_identity(u, b):
    a, c = b["a"], b["b"]
    return (alg.identical(a, c), alg.equal(a, c)), (False, a.value == c.value)


def _closed_count(u, b):
    o = int(b["s"].order.extent)
    return alg.count_closed_evolutions(o), o


def _round_trip_mul(u, b):
    return alg.div_join(alg.mul_join(b["a"], b["b"]), b["b"]), b["a"]


def _round_trip_add(u, b):
    return alg.sub_join(alg.add_join(b["a"], b["b"]), b["b"]), b["a"]


def _excluded_middle(u, b):
    a, c = b["a"], b["b"]
    first, second = alg.identical(a, c), alg.identical(a, c)
    return (first, alg.identical(c, a)), (second, first)


def _excluded_middle_self(u, b):
    a = b["a"]
    return (alg.identical(a, a), alg.identical(a, a)), (True, True)


LAWS: dict[str, Law] = {
    law.name: law
    for law in [
        Law("comm_mul", _comm_mul, alg.identical, _show_structure),
        Law("comm_add", _comm_add, alg.identical, _show_structure),
        Law("assoc_mul", _assoc_mul, alg.identical, _show_structure),
        Law("assoc_add", _assoc_add, alg.identical, _show_structure),
        Law("group_closure", _group_closure, alg.equal),
        Law("group_identity", _group_identity, alg.equal),
        Law("group_inverse", _group_inverse, alg.equal),
        Law("mul_identity", _mul_identity, alg.identical, _show_structure),
        Law("mul_inverse", _mul_inverse, alg.equal),
        Law("sibling", _sibling, alg.equal),
        Law("one_to_one", _one_to_one),
        Law("onto", _onto),
        Law("identity_unique", _identity_unique),
        Law("identity_mul", _identity_mul, show=_show_structure),
        Law("identity_orders", _identity_orders),
        Law("distribution", _distribution, alg.equal),
        Law("order_of_joins", _order_of_joins),
        Law("wrap_zero", _wrap_zero, alg.equal),
        Law("wrap_order", _wrap_order),
        Law("non_identity", _non_identity),
        Law("closed_count", _closed_count),
        Law("round_trip_mul", _round_trip_mul, alg.equal),
        Law("round_trip_add", _round_trip_add, alg.equal),
        Law("excluded_middle", _excluded_middle),
        Law("excluded_middle_self", _excluded_middle_self),
    ]
}


# ---------------------------------------------------------------------------
# Case spaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Block:
    """Cartesian product of ``axes``, or an explicit list of ``rows``."""

    law: str
    names: tuple[str, ...]
    axes: tuple[Sequence[Descriptor], ...] = ()
    rows: Sequence[tuple[Descriptor, ...]] | None = None

    @property
    def size(self) -> int:
        if self.rows is not None:
            return len(self.rows)
        return math.prod(len(a) for a in self.axes)

    def case(self, index: int) -> tuple[Descriptor, ...]:
        if self.rows is not None:
            return self.rows[index]
        out = []
        for axis in reversed(self.axes):
            index, r = divmod(index, len(axis))
            out.append(axis[r])
        return tuple(reversed(out))


def enumerate_atoms(config: CheckConfig) -> list[Descriptor]:
    """Every ``(value, order)`` with ``2 <= order <= max_order``.

    Values are the multiples of ``1/denominator_bound`` in ``[0, order)``.
    """
    step = Fraction(1, config.denominator_bound)
    return [(v, o) for o in config.orders for v in _grid(o, step)]


def _by_order(config: CheckConfig) -> dict[int, list[Descriptor]]:
    step = Fraction(1, config.denominator_bound)
    return {o: [(v, o) for v in _grid(o, step)] for o in config.orders}


def _blocks(p: PropertyId, config: CheckConfig) -> list[Block]:
    atoms = enumerate_atoms(config)
    nonzero = [d for d in atoms if d[0] != 0]
    grids = _by_order(config)
    step = Fraction(1, config.denominator_bound)
    P = PropertyId
    if p is P.COMMUTATIVITY_MUL:
        return [Block("comm_mul", ("a", "b"), (atoms, atoms))]
    if p is P.COMMUTATIVITY_ADD:
        return [Block("comm_add", ("a", "b"), (g, g)) for g in grids.values()]
    if p is P.ASSOCIATIVITY_MUL:
        return [Block("assoc_mul", ("a", "b", "c"), (atoms, atoms, atoms))]
    if p is P.ASSOCIATIVITY_ADD:
        return [Block("assoc_add", ("a", "b", "c"), (g, g, g)) for g in grids.values()]
    if p is P.ADDITIVE_GROUP:
        out = []
        for o, g in grids.items():
            zero = [(Fraction(0), o)]
            # expected sums come from plain modular arithmetic, not add_join
            sums = [((va, o), (vb, o), ((va + vb) % o, o)) for va, _ in g for vb, _ in g]
            out.append(Block("group_closure", ("a", "b", "s"), rows=sums))
            out.append(Block("group_identity", ("a", "z"), (g, zero)))
            out.append(Block("group_inverse", ("a", "z"), (g, zero)))
        return out
    if p is P.MULTIPLICATIVE_IDENTITY:
        return [Block("mul_identity", ("a",), (atoms,)),
                Block("mul_inverse", ("a", "n"), (nonzero, [(Fraction(1), 1)]))]
    if p is P.SIBLING:
        return [Block("sibling", ("a", "c"), (g, g)) for g in grids.values()]
    if p is P.ONE_TO_ONE_ADD:
        return [Block("one_to_one", ("a", "q"), (g, [(step, o)])) for o, g in grids.items()]
    if p is P.ONTO_ADD:
        return [Block("onto", ("a", "q"), (g, [(step, o)])) for o, g in grids.items()]
    if p is P.IDENTITY_GROUPS:
        zeros = [(Fraction(0), o) for o in config.orders]
        out = [Block("identity_unique", ("e", "q"), (g, [(step, o)])) for o, g in grids.items()]
        out.append(Block("identity_mul", ("a",), (atoms,)))
        out.append(Block("identity_orders", ("a", "b"), (zeros, zeros)))
        return out
    if p is P.DISTRIBUTION:
        return [Block("distribution", ("a", "b", "c"), (atoms, g, g)) for g in grids.values()]
    if p is P.ORDER_OF_JOINS:
        zeros = [(Fraction(0), o) for o in config.orders]
        return [Block("order_of_joins", ("a", "b"), (zeros, zeros))]
    if p is P.FINITE_WRAPAROUND:
        out = [Block("wrap_zero", ("e", "f"), ([(Fraction(0), o)], g)) for o, g in grids.items()]
        out.append(Block("wrap_order", ("q",), ([(Fraction(1), o) for o in config.orders],)))
        return out
    if p is P.NON_IDENTITY:
        return [Block("non_identity", ("a", "b"), (g, g)) for g in grids.values()]
    if p is P.CLOSED_EVOLUTION_COUNT:
        sizes = sorted(set(range(1, config.max_order + 1)) | {256})
        return [Block("closed_count", ("s",), ([(Fraction(0), o) for o in sizes],))]
    if p is P.ROUND_TRIPS:
        out = [Block("round_trip_mul", ("a", "b"), (atoms, nonzero))]
        out += [Block("round_trip_add", ("a", "b"), (g, g)) for g in grids.values()]
        return out
    if p is P.EXCLUDED_MIDDLE:
        return [Block("excluded_middle", ("a", "b"), (atoms, atoms)),
                Block("excluded_middle_self", ("a",), (atoms,))]
    raise AssertionError(p)


def case_count(p: PropertyId, config: CheckConfig) -> int:
    return sum(b.size for b in _blocks(p, config))


# ---------------------------------------------------------------------------
# Statements shown by ``explain``
# ---------------------------------------------------------------------------

STATEMENTS: dict[PropertyId, tuple[str, str]] = {
    PropertyId.COMMUTATIVITY_MUL: (
        "Theorem of Commutativity of Joining",
        "a*b and b*a are the same infon for every pair of disjoint atoms."),
    PropertyId.COMMUTATIVITY_ADD: (
        "Theorem of Commutativity of Joining",
        "a+b and b+a are the same infon for every pair of atoms of one order."),
    PropertyId.ASSOCIATIVITY_MUL: (
        "Theorem of Associativity of Joining",
        "(a*b)*c and a*(b*c) are the same infon for all disjoint atoms."),
    PropertyId.ASSOCIATIVITY_ADD: (
        "Theorem of Associativity of Joining",
        "(a+b)+c and a+(b+c) are the same infon for atoms of one order."),
    PropertyId.ADDITIVE_GROUP: (
        "Def. Additive Joins, Def. Inverses",
        "Each order o carries a group under +: sums match (x+y) mod o, 0_o is "
        "neutral and every atom has an inverse."),
    PropertyId.MULTIPLICATIVE_IDENTITY: (
        "Def. Multiplicative Joins, Def. Null Infons",
        "Joining with the null infon 1_1 returns the same infon, and a*mulinv(a) is null."),
    PropertyId.SIBLING: (
        "Sibling Theorem",
        "For every v, w of order o there is an atom u of order o with v+u equal to w."),
    PropertyId.ONE_TO_ONE_ADD: (
        "Theorem of One-To-One Joins",
        "For fixed a, x -> a+x sends distinct atoms to distinct values and distinct infons."),
    PropertyId.ONTO_ADD: (
        "Theorem of Onto Joins",
        "For fixed a, the values of a+x over every x of order o cover all values of order o."),
    PropertyId.IDENTITY_GROUPS: (
        "Theorem of Identity Groups",
        "Per order the additive identity is unique, distinct orders have non-equal "
        "additive identities, and the multiplicative identity is always the null infon."),
    PropertyId.DISTRIBUTION: (
        "Theorem of Distribution",
        "a*(b+c) equals (a*b)+(a*c).  Under modular addition this holds exactly when "
        "value(b)+value(c) < order(b) or value(a) = 0."),
    PropertyId.ORDER_OF_JOINS: (
        "Theorem of Order of Joins",
        "Joining every state of an m-state atom with every state of an n-state atom "
        "gives m*n distinct infons, each of order m*n."),
    PropertyId.FINITE_WRAPAROUND: (
        "Theorem of Finite Infons, Def. Order of an Infon",
        "If e equals 0_o then e+f equals 0_o+f, and the least k >= 1 with k copies "
        "of 1_o summing to zero is o."),
    PropertyId.NON_IDENTITY: (
        "Theorem of Non-Identity",
        "Fresh atoms of one order are never identical; they are equal iff their values match."),
    PropertyId.CLOSED_EVOLUTION_COUNT: (
        "Introduction, closed eight-bit system",
        "A closed o-state system admits exactly o distinct additive evolutions "
        "(checked for o <= max_order and o = 256)."),
    PropertyId.ROUND_TRIPS: (
        "Def. Inverses (A/B and A-B notation)",
        "(a*b)/b equals a for nonzero b, and (a+b)-b equals a."),
    PropertyId.EXCLUDED_MIDDLE: (
        "Axiom of Excluded Middle, Theorems of Identity",
        "identical() gives one stable answer per pair, is symmetric, and is reflexive."),
}

CONDITIONS: dict[PropertyId, str] = {
    PropertyId.DISTRIBUTION: "value(b)+value(c) < order(b) (no wraparound)",
}


def _distribution_condition(descs: dict[str, Descriptor]) -> bool:
    (vb, ob), (vc, _) = descs["b"], descs["c"]
    return vb + vc < ob


SIDE_CONDITIONS: dict[PropertyId, Callable[[dict[str, Descriptor]], bool]] = {
    PropertyId.DISTRIBUTION: _distribution_condition,
}

EXPECTED: dict[PropertyId, Verdict] = {p: Verdict.HOLDS for p in PropertyId}
EXPECTED[PropertyId.DISTRIBUTION] = Verdict.HOLDS_CONDITIONALLY


# ---------------------------------------------------------------------------
# Running
# ---------------------------------------------------------------------------

MAX_COUNTEREXAMPLES = 5


def _materialize(universe: Universe, descs: dict[str, Descriptor]) -> dict[str, Infon]:
    return {k: alg.new_atom(universe, v, Finite(o)) for k, (v, o) in descs.items()}


def _render_descriptor(d: Descriptor) -> str:
    v, o = d
    return alg.render_value(Fraction(v), Finite(o))


def evaluate_law(law: Law, universe: Universe, atoms: dict[str, Infon]) -> tuple[bool, object, object]:
    lhs, rhs = law.sides(universe, atoms)
    return law.relation(lhs, rhs), lhs, rhs


def _indices(blocks: list[Block], config: CheckConfig, p: PropertyId):
    total = sum(b.size for b in blocks)
    if total <= config.case_budget:
        return total, False, range(total)
    nonempty = sum(1 for b in blocks if b.size)
    if config.case_budget < nonempty:
        raise BudgetExceeded(
            f"{p.value}: budget {config.case_budget} is below the {nonempty} quantified blocks")
    seed = 0 if config.sample_seed is None else config.sample_seed
    rng = random.Random(f"{seed}:{p.value}")
    return total, True, sorted(rng.sample(range(total), config.case_budget))


def check_property(p: PropertyId, config: CheckConfig) -> ReportEntry:
    started = time.perf_counter()
    blocks = _blocks(p, config)
    total, sampled, indices = _indices(blocks, config, p)
    side = SIDE_CONDITIONS.get(p)
    universe = Universe()
    offsets = []
    acc = 0
    for b in blocks:
        offsets.append(acc)
        acc += b.size
    checked = failures = 0
    inside_failures = 0
    found: list[Counterexample] = []
    bi = 0
    for index in indices:
        while index >= offsets[bi] + blocks[bi].size:
            bi += 1
        block = blocks[bi]
        law = LAWS[block.law]
        descs = dict(zip(block.names, block.case(index - offsets[bi])))
        holds, lhs, rhs = evaluate_law(law, universe, _materialize(universe, descs))
        checked += 1
        if holds:
            continue
        failures += 1
        inside = side is None or side(descs)
        if inside:
            inside_failures += 1
        if len(found) < MAX_COUNTEREXAMPLES:
            note = "violates side condition" if side is not None and not inside else ""
            found.append(Counterexample(
                p, law.name, {k: _render_descriptor(d) for k, d in descs.items()},
                law.show(lhs), law.show(rhs), note))
    if failures == 0:
        verdict = Verdict.HOLDS
    elif side is not None and inside_failures == 0:
        verdict = Verdict.HOLDS_CONDITIONALLY
    else:
        verdict = Verdict.FAILS
    return ReportEntry(
        property=p,
        verdict=verdict,
        cases_checked=checked,
        total_cases=total,
        sampled=sampled,
        counterexamples=found,
        failures=failures,
        elapsed=time.perf_counter() - started,
        bounds=config.bounds(),
        condition=CONDITIONS.get(p, "") if verdict is Verdict.HOLDS_CONDITIONALLY else "",
    )


def run_all(config: CheckConfig) -> Report:
    report = Report()
    for p in PropertyId:
        if p not in config.properties:
            continue
        try:
            report.entries.append(check_property(p, config))
        except Exception as exc:  # reported, not raised
            report.entries.append(ReportEntry(
                p, Verdict.ERROR, 0, 0, False, bounds=config.bounds(),
                error=f"{type(exc).__name__}: {exc}"))
    return report


def replay(cx: Counterexample) -> bool:
    """Re-evaluate a counterexample; true iff the recorded divergence recurs."""
    law = LAWS[cx.law]
    descs = {}
    for name, text in cx.bindings.items():
        value, order = parse_literal(text)
        if order.extent is None or order.extent.denominator != 1:
            return False
        descs[name] = (value, int(order.extent))
    universe = Universe()
    holds, lhs, rhs = evaluate_law(law, universe, _materialize(universe, descs))
    return not holds and law.show(lhs) == cx.lhs and law.show(rhs) == cx.rhs
