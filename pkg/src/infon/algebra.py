"""Exact-arithmetic infons: atoms, joins, inverses, orders.

An infon is either an :class:`Atom` (identity tag, exact value, order) or a
:class:`Join` node whose operands are kept in a canonical, flattened, sorted
form.  Python ``==`` on infons means *identity* (same canonical form); use
:func:`equal` for numeric equality, which ignores identity tags.

All values and orders are :class:`fractions.Fraction`.  The only inexact
number produced anywhere is the return value of :func:`order_to_bits`.
"""

from __future__ import annotations

import enum
import itertools
import math
import threading
import weakref
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Number = Union[int, str, Fraction]


class InfonError(Exception):
    """Base class for algebra errors."""


class ValueOutOfRange(InfonError):
    pass


class OrderMismatch(InfonError):
    pass


class EntwinedOperands(InfonError):
    pass


class EntwinedUnsupported(InfonError):
    pass


class ZeroValueInverse(InfonError):
    pass


class ZeroDivisor(InfonError):
    pass


class UnsupportedDivision(InfonError):
    pass


class UnboundedOrder(InfonError):
    pass


class JoinClass(enum.Enum):
    MULTIPLICATIVE = "Multiplicative"
    ADDITIVE = "Additive"
    ENTWINED = "Entwined"


_KIND_RANK = {JoinClass.MULTIPLICATIVE: 0, JoinClass.ADDITIVE: 1}


# ---------------------------------------------------------------------------
# Orders
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Order:
    """Number of states of an infon; ``extent is None`` means unbounded."""

    extent: Fraction | None

    @property
    def finite(self) -> bool:
        return self.extent is not None

    @property
    def integral(self) -> bool:
        return self.extent is not None and self.extent.denominator == 1

    def __str__(self) -> str:
        if self.extent is None:
            return "unbounded"
        return _rat(self.extent)


@lru_cache(maxsize=4096)
def Finite(extent: Number) -> Order:
    e = Fraction(extent)
    if e <= 0:
        raise ValueOutOfRange(f"order extent must be positive, got {e}")
    return Order(e)


UNBOUNDED = Order(None)


def _rat(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# Identity tags and universes
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class IdentityTag:
    universe: int
    serial: int


class Universe:
    """Allocates identity tags and keeps a weak registry of its atoms."""

    _ids = itertools.count()
    _ids_lock = threading.Lock()

    def __init__(self) -> None:
        with Universe._ids_lock:
            self.id = next(Universe._ids)
        self._serials = itertools.count()
        self._lock = threading.Lock()
        self._registry: weakref.WeakValueDictionary[int, Atom] = weakref.WeakValueDictionary()

    def allocate(self) -> IdentityTag:
        with self._lock:
            return IdentityTag(self.id, next(self._serials))

    def register(self, atom: Atom) -> None:
        self._registry[atom.tag.serial] = atom

    def atoms(self) -> list[Atom]:
        """Live atoms created in this universe, in allocation order."""
        return [self._registry[k] for k in sorted(self._registry.keys())]


# ---------------------------------------------------------------------------
# Infons
# ---------------------------------------------------------------------------


class Infon:
    """Common base of atoms and join nodes.  Instances are immutable."""

    __slots__ = ("value", "order", "key", "support", "_hash", "__weakref__")

    value: Fraction
    order: Order
    key: tuple
    support: frozenset

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Infon):
            return NotImplemented
        return self._hash == other._hash and self.key == other.key

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {structure(self)}>"


class Atom(Infon):
    __slots__ = ("tag",)

    def __init__(self, tag: IdentityTag | None, value: Fraction, order: Order, key: tuple):
        self.tag = tag
        self.value = value
        self.order = order
        self.key = key
        self._hash = hash(key)
        self.support = frozenset((self,)) if tag is not None else frozenset()


class Join(Infon):
    """A join node.  ``operands`` is a sorted tuple of ``(infon, inverted)``."""

    __slots__ = ("kind", "operands", "degenerate")

    def __init__(self, kind: JoinClass, operands: tuple, value: Fraction, order: Order,
                 degenerate: bool = False):
        self.kind = kind
        self.operands = operands
        self.value = value
        self.order = order
        self.degenerate = degenerate
        self.key = (1, _KIND_RANK[kind], tuple((op.key, inv) for op, inv in operands))
        self._hash = hash(self.key)
        self.support = frozenset().union(*(op.support for op, _ in operands))


NULL = Atom(None, Fraction(0), Finite(1), (-2,))
_ZEROS: dict[Order, Atom] = {}
_ZEROS_LOCK = threading.Lock()


def null_infon() -> Atom:
    """The canonical order-1 infon; multiplicative identity, zero bits."""
    return NULL


one = null_infon


def zero_of_order(order: Order) -> Atom:
    """Additive identity of the given order."""
    if order.extent == 1:
        return NULL
    with _ZEROS_LOCK:
        z = _ZEROS.get(order)
        if z is None:
            e = order.extent
            key = (-1, 0, 0) if e is None else (-1, e.numerator, e.denominator)
            z = _ZEROS[order] = Atom(None, Fraction(0), order, key)
    return z


def is_null(a: Infon) -> bool:
    return isinstance(a, Atom) and a.order.extent == 1


def _is_canonical_zero(a: Infon) -> bool:
    return a.key[0] == -1


def new_atom(universe: Universe, value: Number, order: Order) -> Atom:
    """Create a fresh atom.  Finite orders require ``0 <= value < extent``."""
    v = value if type(value) is Fraction else Fraction(value)
    e = order.extent
    if e is not None:
        if e < 1:
            raise ValueOutOfRange(f"atoms need an order of at least 1, got {_rat(e)}")
        if e.numerator == e.denominator:
            # null infon; "1_1" is the sanctioned spelling
            if v not in (0, 1):
                raise ValueOutOfRange(f"{_rat(v)} is not a value of the null infon")
            v = Fraction(0)
        elif not 0 <= v < e:
            hint = f" ({_rat(v)} mod {_rat(e)} = {_rat(v % e)})"
            raise ValueOutOfRange(f"{_rat(v)} is outside [0, {_rat(e)}){hint}")
    tag = universe.allocate()
    atom = Atom(tag, v, order, (0, tag.universe, tag.serial))
    universe.register(atom)
    return atom


# ---------------------------------------------------------------------------
# Identity, equality, membership
# ---------------------------------------------------------------------------


def identical(a: Infon, b: Infon) -> bool:
    return a.key == b.key


def equal(a: Infon, b: Infon) -> bool:
    if a.order != b.order:
        return False
    return a.order.extent == 1 or a.value == b.value


def members(a: Infon) -> frozenset[Infon]:
    """``a`` itself plus every operand, recursively."""
    out = {a}
    stack = [a]
    while stack:
        x = stack.pop()
        if isinstance(x, Join):
            for op, _ in x.operands:
                if op not in out:
                    out.add(op)
                    stack.append(op)
    return frozenset(out)


def contains(a: Infon, b: Infon) -> bool:
    return members(b) <= members(a)


def support(a: Infon) -> frozenset[Atom]:
    """Tagged atoms reachable from ``a``."""
    return a.support


def intersection(a: Infon, b: Infon) -> Infon:
    common = {m for m in members(a) & members(b) if not is_null(m)}
    if not common:
        return NULL
    subs = {m: members(m) for m in common}
    maximal = sorted(
        (m for m in common if not any(n is not m and m in subs[n] for n in common)),
        key=lambda m: m.key,
    )
    if len(maximal) == 1:
        return maximal[0]
    out = maximal[0]
    for m in maximal[1:]:
        if not out.support & m.support:
            out = mul_join(out, m)
        elif out.order == m.order:
            out = add_join(out, m)
        else:
            # no join of the maximal parts exists; fall back to shared atoms
            atoms = sorted(a.support & b.support, key=lambda x: x.key)
            if not atoms:
                return NULL
            out = atoms[0]
            for x in atoms[1:]:
                out = mul_join(out, x)
            break
    return out


def disjoint(a: Infon, b: Infon) -> bool:
    return is_null(intersection(a, b))


def classify(a: Infon, b: Infon) -> JoinClass:
    sa, sb = a.support, b.support
    overlap = sa & sb
    if overlap and sa != sb:
        return JoinClass.ENTWINED
    if a.order == b.order:
        return JoinClass.ADDITIVE
    if not overlap:
        return JoinClass.MULTIPLICATIVE
    return JoinClass.ENTWINED


# ---------------------------------------------------------------------------
# Joins
# ---------------------------------------------------------------------------


def _cancel(parts: Iterable[tuple[Infon, bool]]) -> list[tuple[Infon, bool]]:
    out: list[tuple[Infon, bool]] = []
    for op, inv in parts:
        for i, (o, j) in enumerate(out):
            if j is not inv and o == op:
                del out[i]
                break
        else:
            out.append((op, inv))
    return out


def _sort_key(part: tuple[Infon, bool]) -> tuple:
    return (part[0].key, part[1])


def _factors(a: Infon) -> list[tuple[Infon, bool]]:
    if isinstance(a, Join) and a.kind is JoinClass.MULTIPLICATIVE:
        return list(a.operands)
    return [(a, False)]


def _terms(a: Infon) -> list[tuple[Infon, bool]]:
    if isinstance(a, Join) and a.kind is JoinClass.ADDITIVE:
        return list(a.operands)
    return [(a, False)]


def _build_mul(parts: list[tuple[Infon, bool]]) -> Infon:
    parts = _cancel(parts)
    if not parts:
        return NULL
    if len(parts) == 1 and not parts[0][1]:
        return parts[0][0]
    seen: frozenset = frozenset()
    # integer accumulators; one normalisation per node
    vn = vd = en = ed = 1
    bounded = True
    degenerate = False
    for op, inv in parts:
        if seen & op.support:
            raise EntwinedOperands(
                f"operands share atoms ({structure(op)}); classify as {JoinClass.ENTWINED.value}"
            )
        seen |= op.support
        v = op.value
        if inv:
            vn *= v.denominator
            vd *= v.numerator
        else:
            vn *= v.numerator
            vd *= v.denominator
            if vn == 0:
                degenerate = True
        if isinstance(op, Join) and op.degenerate:
            degenerate = True
        e = op.order.extent
        if e is None:
            bounded = False
        elif inv:
            en *= e.denominator
            ed *= e.numerator
        else:
            en *= e.numerator
            ed *= e.denominator
    value = Fraction(vn, vd)
    extent = Fraction(en, ed) if bounded else None
    parts.sort(key=_sort_key)
    order = UNBOUNDED if extent is None else Order(extent)
    return Join(JoinClass.MULTIPLICATIVE, tuple(parts), value, order, degenerate)


def _build_add(parts: list[tuple[Infon, bool]], order: Order) -> Infon:
    parts = _cancel(parts)
    if not parts:
        return zero_of_order(order)
    if len(parts) == 1 and not parts[0][1]:
        return parts[0][0]
    num, den = 0, 1
    for op, inv in parts:
        v = op.value
        n = -v.numerator if inv else v.numerator
        if v.denominator == den:
            num += n
        else:
            num, den = num * v.denominator + n * den, den * v.denominator
    total = Fraction(num, den)
    if order.finite:
        total %= order.extent
    degenerate = any(isinstance(op, Join) and op.degenerate for op, _ in parts)
    parts.sort(key=_sort_key)
    return Join(JoinClass.ADDITIVE, tuple(parts), total, order, degenerate)


def mul_join(a: Infon, b: Infon) -> Infon:
    """Disjoint join ``a * b``: values and extents multiply."""
    if is_null(a):
        return b
    if is_null(b):
        return a
    return _build_mul(_factors(a) + _factors(b))


def add_join(a: Infon, b: Infon) -> Infon:
    """Covering join ``a + b``: equal orders, values add modulo the extent."""
    if a.order != b.order:
        raise OrderMismatch(f"cannot add orders {a.order} and {b.order}")
    if _is_canonical_zero(a) or a is NULL:
        return b
    if _is_canonical_zero(b) or b is NULL:
        return a
    return _build_add(_terms(a) + _terms(b), a.order)


def add_inverse(a: Infon) -> Infon:
    if _is_canonical_zero(a) or a is NULL:
        return a
    return _build_add([(op, not inv) for op, inv in _terms(a)], a.order)


def mul_inverse(a: Infon) -> Infon:
    if is_null(a):
        return NULL
    if a.value == 0:
        raise ZeroValueInverse(f"{render(a)} has no multiplicative inverse")
    return _build_mul([(op, not inv) for op, inv in _factors(a)])


def sub_join(a: Infon, b: Infon) -> Infon:
    if a.order != b.order:
        raise OrderMismatch(f"cannot subtract order {b.order} from order {a.order}")
    return add_join(a, add_inverse(b))


def div_join(a: Infon, b: Infon) -> Infon:
    """Remove ``b``'s multiplicative contribution from ``a``."""
    if is_null(b):
        return a
    if b.value == 0:
        raise ZeroDivisor(f"division by zero-valued {render(b)}")
    if isinstance(a, Join) and not b.support <= a.support:
        raise UnsupportedDivision(f"{structure(b)} is not a part of {structure(a)}")
    try:
        return mul_join(a, mul_inverse(b))
    except EntwinedOperands as exc:
        raise UnsupportedDivision(str(exc)) from None


def identity_element(a: Infon, kind: JoinClass) -> Infon:
    if kind is JoinClass.MULTIPLICATIVE:
        return NULL
    if kind is JoinClass.ADDITIVE:
        return zero_of_order(a.order)
    raise EntwinedUnsupported("identity members of entwined joins are not modelled")


# ---------------------------------------------------------------------------
# Orders, bits, closed evolution
# ---------------------------------------------------------------------------


def order_of(a: Infon) -> Order:
    return a.order


def order_to_bits(order: Order) -> float:
    """``log2`` of the number of states."""
    if order.extent is None:
        raise UnboundedOrder("an unbounded order has no bit count")
    n, d = order.extent.numerator, order.extent.denominator
    if d == 1 and n & (n - 1) == 0:
        return float(n.bit_length() - 1)
    return math.log2(n) - math.log2(d)


def _require_integral(a: Infon, step: Infon) -> None:
    if a.order != step.order:
        raise OrderMismatch(f"cannot evolve order {a.order} by a step of order {step.order}")
    if not a.order.integral:
        raise UnboundedOrder(f"evolution needs a finite integral order, got {a.order}")


def evolve(a: Infon, step: Infon) -> Infon:
    _require_integral(a, step)
    return add_join(a, step)


def trajectory(a: Infon, step: Infon) -> list[Infon]:
    """States visited from ``a`` until its value recurs."""
    _require_integral(a, step)
    states = [a]
    current = add_join(a, step)
    while current.value != a.value:
        states.append(current)
        current = add_join(current, step)
    return states


def count_closed_evolutions(o: int) -> int:
    """Distinct permutation tables ``x -> (x + s) mod o`` over all steps."""
    if o < 1:
        raise ValueOutOfRange("a closed system needs at least one state")
    tables = {tuple((x + s) % o for x in range(o)) for s in range(o)}
    return len(tables)


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def render_value(value: Fraction, order: Order) -> str:
    """Bit-exact text for a value at an order.

    Finite values in canonical range print as ``v_o``; anything else at a
    finite order prints as a quotient of two in-range literals that divides
    back to the same value and extent.
    """
    if order.extent is None:
        return _rat(value)
    e = order.extent
    if e == 1:
        return "1_1"
    if e.denominator == 1 and 0 <= value < e:
        return f"{_rat(value)}_{e.numerator}"
    a, b = value.numerator, value.denominator
    c, d = e.numerator, e.denominator
    k = max(a // c + 1, b // d + 1)
    return f"{a}_{c * k}/{b}_{d * k}"


def render(a: Infon) -> str:
    return render_value(a.value, a.order)


def structure(a: Infon) -> str:
    """Join tree as a parenthesised expression, e.g. ``(3_4*4_5)``."""
    if isinstance(a, Atom):
        text = render(a)
        if a.order.extent is None and (a.value < 0 or a.value.denominator != 1):
            return f"({text})"
        return text
    if a.kind is JoinClass.MULTIPLICATIVE:
        plain, inverted, unit = "*", "/", "1_1"
    else:
        plain, inverted, unit = "+", "-", None
    pieces: list[str] = []
    for op, inv in a.operands:
        s = structure(op)
        if not pieces:
            if not inv:
                pieces.append(s)
            elif unit is not None:
                pieces.append(f"{unit}/{s}")
            else:
                pieces.append(f"addinv({s})")
        else:
            pieces.append((inverted if inv else plain) + s)
    return "(" + "".join(pieces) + ")"
