"""Exact finite-stage constructions of uniquely universal closed sets in [0,1]×ω and (-1,1)×ω."""

from .intervals import Interval, IntervalSet, format_rational, parse_interval_set, rational
from .sequences import SeqClass, SeqSpec, classify, limit_point

__all__ = [
    "Interval",
    "IntervalSet",
    "SeqClass",
    "SeqSpec",
    "classify",
    "format_rational",
    "limit_point",
    "parse_interval_set",
    "rational",
]
