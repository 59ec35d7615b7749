"""Involutory permutation polynomials over F_q (q odd, q = 1 mod 3).

Six coefficient families (three trinomial, three six-term), each producing
involutions with (q+2)/3 fixed points, together with exhaustive verification,
a Lagrange-interpolation cross-check, and surveys across generators and field
orders. Field elements cross this API as canonical indices: the coefficient
vector of an element read as a base-p integer (for prime fields, simply the
residue).
"""

import json as _json

from ._core import (
    FAMILIES,
    DisjointnessReport,
    Field,
    FieldReport,
    Generator,
    Record,
    Verdict,
    admissible_orders,
    all_records,
    construct,
    expected_map,
    lagrange,
    survey_field,
    survey_generators,
    survey_range,
    verify,
)

__all__ = [
    "FAMILIES",
    "DisjointnessReport",
    "Field",
    "FieldReport",
    "Generator",
    "Record",
    "Verdict",
    "admissible_orders",
    "all_records",
    "as_dict",
    "construct",
    "expected_map",
    "lagrange",
    "survey_field",
    "survey_generators",
    "survey_range",
    "verify",
]


def as_dict(obj):
    """Parse the JSON form of a record, verdict or report into a dict."""
    return _json.loads(obj.json())
