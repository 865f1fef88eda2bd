"""Per-degree tables of minimal XOR-counts, regenerated from scratch.

No cell is transcribed from anywhere: every row comes out of the same
exhaustive enumeration the searches use, so the table doubles as a
regression surface.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Optional

from .gf2poly import Gf2Poly, enumerate_irreducibles
from .xorform import CycleType, XorProduct, classified_products


@dataclass
class TableRow:
    poly: Gf2Poly
    degree: int
    weight: int
    min_xor_count: Optional[int]  # None means "greater than t_max"
    witness: Optional[XorProduct]

    def count_text(self, t_max: int) -> str:
        return str(self.min_xor_count) if self.min_xor_count is not None else f">{t_max}"

    def witness_text(self) -> str:
        if self.witness is None:
            return "-"
        parts = "+".join(str(m) for m in self.witness.cycle_type.parts)
        factors = "".join(f"({i},{j})" for i, j in self.witness.factors)
        return f"[{parts}] {factors}" if factors else f"[{parts}]"


def build_table(degree: int, t_max: int = 2, threads: int = 1) -> list[TableRow]:
    """One row per irreducible of the degree, ascending bitstring order."""
    if not 2 <= degree <= 8:
        raise ValueError(f"table degree must be in 2..8, got {degree}")
    best: dict[int, tuple[int, XorProduct]] = {}
    for t in range(t_max + 1):
        _, entries = classified_products(degree, t, threads=threads)
        for parts, factors, mp in entries:
            if mp.bit_length() - 1 == degree and mp not in best:
                best[mp] = (t, XorProduct(CycleType(parts), factors))
    rows = []
    for f in enumerate_irreducibles(degree):
        hit = best.get(f.bits)
        rows.append(
            TableRow(
                poly=f,
                degree=degree,
                weight=f.weight(),
                min_xor_count=hit[0] if hit else None,
                witness=hit[1] if hit else None,
            )
        )
    return rows


def render_csv(rows: list[TableRow], t_max: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["poly", "hex", "degree", "weight", "min_xor_count", "witness"])
    for r in rows:
        writer.writerow(
            [
                str(r.poly),
                r.poly.to_hex(),
                r.degree,
                r.weight,
                r.count_text(t_max),
                r.witness_text(),
            ]
        )
    return buf.getvalue()


def render_markdown(rows: list[TableRow], t_max: int) -> str:
    lines = [
        "| poly | hex | degree | weight | min XOR-count | witness |",
        "| --- | --- | --- | --- | --- | --- |",
    ]
    for r in rows:
        lines.append(
            f"| {r.poly} | {r.poly.to_hex()} | {r.degree} | {r.weight} "
            f"| {r.count_text(t_max)} | {r.witness_text()} |"
        )
    return "\n".join(lines) + "\n"


def render_json(rows: list[TableRow], t_max: int) -> str:
    payload = {
        "degree": rows[0].degree if rows else None,
        "t_max": t_max,
        "rows": [
            {
                "poly": str(r.poly),
                "hex": r.poly.to_hex(),
                "degree": r.degree,
                "weight": r.weight,
                "min_xor_count": r.min_xor_count,
                "witness": r.witness.to_dict() if r.witness else None,
            }
            for r in rows
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


RENDERERS = {"csv": render_csv, "md": render_markdown, "json": render_json}
