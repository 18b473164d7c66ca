"""Exact-arithmetic toolkit for saw-tooth norms of integer lists,
integral factorial ratios, recursive norm lower bounds, and the
classification searches behind them."""

from ratio_lab.lists import (
    SignedList,
    classify_type,
    concat,
    evaluate,
    involute,
    make_list,
    norm,
    norm_by_integration,
    scale,
)

__all__ = [
    "SignedList",
    "classify_type",
    "concat",
    "evaluate",
    "involute",
    "make_list",
    "norm",
    "norm_by_integration",
    "scale",
]
