"""Enumeration caps.

Every exhaustive construction checks its input size against a named cap.
The ``POLARITY_CAP`` environment variable overrides them: either a bare
integer (applies to ``closed_sets``) or ``name=value`` pairs separated by
commas, e.g. ``POLARITY_CAP="closed_sets=28,tensor=10"``.
"""
from __future__ import annotations

import os

from .errors import CapExceeded

DEFAULT_CAPS = {
    "closed_sets": 24,  # carrier size on the enumerated side
    "hom_bits": 16,  # lower(A) * upper(B) for hom_enumerate
    "standardize": 12,  # lower carrier, upper becomes its powerset
    "reduction": 10,  # both carriers for is_reduced
    "tensor": 9,  # |A-| * |B-|, upper carrier is 2 ** that
    "subsets": 16,  # carriers scanned subset-by-subset
}


def _overrides():
    raw = os.environ.get("POLARITY_CAP", "").strip()
    if not raw:
        return {}
    if raw.isdigit():
        return {"closed_sets": int(raw)}
    out = {}
    for part in raw.split(","):
        name, _, value = part.partition("=")
        name = name.strip()
        if name not in DEFAULT_CAPS or not value.strip().isdigit():
            raise ValueError(f"bad POLARITY_CAP entry: {part!r}")
        out[name] = int(value)
    return out


def get_cap(name: str) -> int:
    return _overrides().get(name, DEFAULT_CAPS[name])


def check_cap(name: str, size: int, what: str = "") -> None:
    limit = get_cap(name)
    if size > limit:
        detail = f" ({what})" if what else ""
        raise CapExceeded(f"{name} cap is {limit}, got {size}{detail}")
