"""Linear polyacenes L_h and their closed-form edge indices.

Cut naming on L_h (hexagon k = 1..h, left to right): ``B`` is the cut of
all h+1 vertical edges; ``C_k`` is the direction-2 cut through hexagon k
(its upper-right and lower-left edges) and ``D_k`` the direction-3 cut
(upper-left and lower-right).
"""

from __future__ import annotations

from dataclasses import dataclass

from .benzenoid import Benzenoid, build_benzenoid, pair_parts
from .errors import ConsistencyError
from .graph import checked, pairs

FAMILIES = ("B,C", "B,D", "C,C", "D,D", "C,D")


def generate_polyacene(h: int) -> Benzenoid:
    if h < 1:
        raise ValueError("a polyacene needs h >= 1 hexagons")
    return build_benzenoid([(i, 0) for i in range(h)])


def _sixth(value: int, what: str) -> int:
    if value % 6:
        raise ConsistencyError(f"{what}: {value} is not divisible by 6")
    return checked(value // 6, what)


@dataclass(frozen=True)
class PolyaceneFormulas:
    h: int
    m: int
    w_e: int
    ww_star: int
    ww_e: int

    def table1_rows(self) -> dict[str, tuple]:
        """Symbolic component sizes, as evaluable strings in ``h``, ``k`` and ``l``."""
        return {
            "B,C_k": ("2k-1", "2h-2k+1", "2h-2k", "2k-2"),
            "B,D_k": ("2k-2", "2h-2k", "2h-2k+1", "2k-1"),
            "C_k,C_l (k<l)": ("5k-3", "5h-5l+2", None, None),
            "D_k,D_l (k<l)": ("5k-3", "5h-5l+2", None, None),
            "C_k,D_l (k<l)": ("5k-3", "5h-5l+2", None, None),
            "C_k,D_l (k>l)": ("5l-3", "5h-5k+2", None, None),
            "C_k,D_k": ("5k-4", "5h-5k+1", "0", "0"),
        }


def closed_formulas(h: int) -> PolyaceneFormulas:
    if h < 1:
        raise ValueError("h must be >= 1")
    m = 5 * h + 1
    w_e = _sixth(h * (50 * h * h + 69 * h + 43), "W_e")
    star = _sixth(h * (25 * h**3 - 29 * h * h + 14 * h + 8), "WW_e*")
    ww_e = _sixth(h * (25 * h**3 + 71 * h * h + 77 * h + 79), "WW_e")
    if ww_e != 2 * w_e + star - pairs(m):
        raise ConsistencyError(f"closed forms disagree with WW_e = 2W_e + WW_e* - C(m,2) at h = {h}")
    return PolyaceneFormulas(h, m, w_e, star, ww_e)


def table1_components(h: int, family: str, k: int, l: int | None = None) -> tuple[int | None, ...]:
    """Component edge counts ``(a, b, c, d)`` for a pair of cuts on L_h.

    ``family`` is one of ``FAMILIES``; for ``"B,C"``/``"B,D"`` only ``k`` is
    used. Non-crossing pairs have ``c = d = None``. ``"C,D"`` covers k < l,
    k > l and k == l.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown pair family {family!r}")
    if not 1 <= k <= h:
        raise ValueError(f"k = {k} outside 1..{h}")
    if family in ("B,C", "B,D"):
        row = (2 * k - 1, 2 * h - 2 * k + 1, 2 * h - 2 * k, 2 * k - 2)
        return row if family == "B,C" else (row[3], row[2], row[1], row[0])
    if l is None or not 1 <= l <= h:
        raise ValueError(f"l = {l} outside 1..{h}")
    if family in ("C,C", "D,D"):
        if not k < l:
            raise ValueError("same-direction pairs need k < l")
        return 5 * k - 3, 5 * h - 5 * l + 2, None, None
    if k == l:
        return 5 * k - 4, 5 * h - 5 * k + 1, 0, 0
    lo, hi = min(k, l), max(k, l)
    return 5 * lo - 3, 5 * h - 5 * hi + 2, None, None


def named_cuts(b: Benzenoid) -> dict[str, int]:
    """Map ``"B"``, ``"C1"``..``"Ch"``, ``"D1"``..``"Dh"`` to cut indices of ``b``."""
    h = b.h
    out: dict[str, int] = {}
    for idx, cut in enumerate(b.cuts):
        direction = b.edge_direction[cut[0]]
        if direction == 1:
            if len(cut) != h + 1 or "B" in out:
                raise ConsistencyError("expected a single vertical cut of size h+1")
            out["B"] = idx
            continue
        if len(cut) != 2:
            raise ConsistencyError(f"oblique cut {idx} has {len(cut)} edges, expected 2")
        hexes = {x for e in cut for x in b.edge_hexes[e]}
        if len(hexes) != 1:
            raise ConsistencyError(f"oblique cut {idx} spans {len(hexes)} hexagons")
        q, _ = b.hexes[hexes.pop()]
        out[("C" if direction == 2 else "D") + str(q + 1)] = idx
    return out


def measured_components(b: Benzenoid, first: str, second: str) -> tuple[int | None, ...]:
    """Measured ``(a, b, c, d)`` of ``G - first - second`` on a polyacene.

    Non-crossing pairs report only the two extremal components, as Table-style
    ``(a, b, None, None)``.
    """
    names = named_cuts(b)
    parts = pair_parts(b, names[first], names[second])
    if parts.intersecting:
        return parts.parts
    return parts.parts[0], parts.parts[1], None, None
