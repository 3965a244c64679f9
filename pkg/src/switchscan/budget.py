"""Work budgets for element enumeration and subset bitmaps.

``SWITCHSCAN_BUDGET`` overrides the defaults.  Either a single integer (used
for both limits) or ``elements=N,bitmap=M``.
"""

from __future__ import annotations

import os

DEFAULT_ELEMENTS = 10**7
DEFAULT_BITMAP_BITS = 2**24


class BudgetExceeded(RuntimeError):
    """A computation would exceed its configured work budget."""


def _parse(value: str) -> dict[str, int]:
    value = value.strip()
    if not value:
        return {}
    if "=" not in value:
        n = int(value)
        return {"elements": n, "bitmap": n}
    out = {}
    for part in value.split(","):
        key, _, num = part.partition("=")
        key = key.strip()
        if key not in ("elements", "bitmap"):
            raise ValueError(f"unknown budget key {key!r}")
        out[key] = int(num)
    return out


def element_budget() -> int:
    return _parse(os.environ.get("SWITCHSCAN_BUDGET", "")).get("elements", DEFAULT_ELEMENTS)


def bitmap_budget() -> int:
    return _parse(os.environ.get("SWITCHSCAN_BUDGET", "")).get("bitmap", DEFAULT_BITMAP_BITS)
