"""Exact computations in the fixed subalgebra of twisted differential
operators on the circle: brackets, PBW normal forms, the level-one Fock
action, the twisted Heisenberg embedding, graded dimensions, and the
presented-relation checker.

Elements pass as canonical text, e.g. ``bracket("w[1,0]", "w[0,3]")``.
"""

from wminus._core import (
    act,
    bracket,
    calibrate,
    check,
    dims,
    expand,
    heis_bracket,
    heis_embed,
    is_member,
    ledger,
    manifest,
    multiset_count,
    normalize,
    phi,
    reduce,
    sigma,
    verify,
)

__all__ = [
    "act",
    "bracket",
    "calibrate",
    "check",
    "dims",
    "expand",
    "heis_bracket",
    "heis_embed",
    "is_member",
    "ledger",
    "manifest",
    "multiset_count",
    "normalize",
    "phi",
    "reduce",
    "sigma",
    "verify",
]
