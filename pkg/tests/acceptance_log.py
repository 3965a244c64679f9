"""Per-criterion outcomes collected while the acceptance tests run."""

from __future__ import annotations

from contextlib import contextmanager

TITLES = {
    1: "six exceptional classes up to degree 16",
    2: "PSL(2,17) witness in fast mode",
    3: "icosahedron class types 6, 6, 10, 10",
    4: "A5 on pairs and the Paley symmetric difference",
    5: "fixed graphs in invariant classes equal fix_W",
    6: "Burnside counts against explicit partitions",
    7: "regular orbits on the power set",
    8: "Kneser and grid orbit identities and profiles",
    9: "automorphism and fix_W oracles",
}

RESULTS: dict[int, list[tuple[str, bool]]] = {}


@contextmanager
def check(criterion: int, label: str):
    try:
        yield
    except BaseException:
        RESULTS.setdefault(criterion, []).append((label, False))
        raise
    RESULTS.setdefault(criterion, []).append((label, True))


def summary_lines() -> list[str]:
    out = []
    for k in sorted(TITLES):
        parts = RESULTS.get(k)
        if not parts:
            out.append(f"criterion {k}: NOT RUN ({TITLES[k]})")
            continue
        ok = all(p for _, p in parts)
        failed = [lbl for lbl, p in parts if not p]
        tail = "" if ok else f"; failed: {', '.join(failed)}"
        out.append(f"criterion {k}: {'PASS' if ok else 'FAIL'} ({TITLES[k]}){tail}")
    return out
