"""Exact infon algebra, a finite-model checker for its laws, and a small expression language."""

from .algebra import (
    NULL,
    UNBOUNDED,
    Atom,
    EntwinedOperands,
    EntwinedUnsupported,
    Finite,
    IdentityTag,
    Infon,
    InfonError,
    Join,
    JoinClass,
    Order,
    OrderMismatch,
    UnboundedOrder,
    Universe,
    UnsupportedDivision,
    ValueOutOfRange,
    ZeroDivisor,
    ZeroValueInverse,
    add_inverse,
    add_join,
    classify,
    contains,
    count_closed_evolutions,
    disjoint,
    div_join,
    equal,
    evolve,
    identical,
    identity_element,
    intersection,
    members,
    mul_inverse,
    mul_join,
    new_atom,
    null_infon,
    one,
    order_of,
    order_to_bits,
    render,
    structure,
    sub_join,
    trajectory,
    zero_of_order,
)

__version__ = "0.1.0"
