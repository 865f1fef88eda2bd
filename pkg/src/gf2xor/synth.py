"""Straight-line XOR programs realizing searched products.

A product C(P) * prod_k (I + E_{i_k,j_k}) acts on a column vector by
applying the factors rightmost first -- factor (i, j) is the single
operation v_i ^= v_j -- and then routing wires through the permutation,
which costs nothing in hardware. The emitted program therefore has
exactly one XOR step per factor, in reverse factor order, plus a final
relabeling.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .gf2mat import Gf2Mat
from .xorform import XorProduct

SAMPLE_COUNT = 10_000


@dataclass(frozen=True)
class XorProgram:
    """Ordered xor-assignments w_a ^= w_b plus a final wire permutation.

    output_perm[k-1] = p means output wire k reads intermediate wire p.
    """

    n: int
    steps: tuple[tuple[int, int], ...]
    output_perm: tuple[int, ...]

    def __post_init__(self):
        for a, b in self.steps:
            if a == b:
                raise ValueError(f"step ({a},{b}) must use two distinct wires")
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise IndexError(f"step ({a},{b}) out of range for n={self.n}")
        if sorted(self.output_perm) != list(range(1, self.n + 1)):
            raise ValueError("output_perm must be a permutation of 1..n")

    def to_netlist(self) -> str:
        lines = [f"x[{a}] ^= x[{b}]" for a, b in self.steps]
        outs = ", ".join(f"x[{p}]" for p in self.output_perm)
        lines.append(f"out = {outs}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "steps": [list(s) for s in self.steps],
            "output_perm": list(self.output_perm),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def emit_program(x: XorProduct) -> XorProgram:
    """Program computing realize(x) @ v; step count equals the factor count."""
    n = x.cycle_type.n
    steps = tuple(reversed(x.factors))
    # permutation of the block-diagonal part: offset c, block size m maps
    # wire c+k to c+k+1 and wraps c+m back to c+1
    rho = [0] * (n + 1)
    offset = 0
    for m in x.cycle_type.parts:
        for k in range(1, m):
            rho[offset + k] = offset + k + 1
        rho[offset + m] = offset + 1
        offset += m
    rho_inv = [0] * (n + 1)
    for src, dst in enumerate(rho[1:], start=1):
        rho_inv[dst] = src
    return XorProgram(n, steps, tuple(rho_inv[1:]))


def simulate(p: XorProgram, v: list[int]) -> list[int]:
    """Run the program on a bit vector: steps in order, then relabeling."""
    if len(v) != p.n:
        raise ValueError(f"expected {p.n} input bits, got {len(v)}")
    w = list(v)
    for a, b in p.steps:
        w[a - 1] ^= w[b - 1]
    return [w[q - 1] for q in p.output_perm]


def _simulate_mask(p: XorProgram, mask: int) -> int:
    for a, b in p.steps:
        if mask >> (b - 1) & 1:
            mask ^= 1 << (a - 1)
    out = 0
    for k, q in enumerate(p.output_perm):
        if mask >> (q - 1) & 1:
            out |= 1 << k
    return out


def _matvec_mask(a: Gf2Mat, mask: int) -> int:
    out = 0
    for i, r in enumerate(a.rows):
        if (r & mask).bit_count() & 1:
            out |= 1 << i
    return out


def check_equivalence(
    p: XorProgram, a: Gf2Mat, mode: str = "exhaustive", seed: int = 0
) -> bool:
    """Whether the program computes v -> A @ v.

    Exhaustive mode walks all 2^n inputs (n <= 12); sample mode draws
    10^4 seeded inputs. Linearity would make basis vectors sufficient,
    but full vectors also catch step-ordering mistakes.
    """
    if p.n != a.n:
        return False
    if mode == "exhaustive":
        if p.n > 12:
            raise ValueError("exhaustive equivalence capped at n <= 12")
        return all(
            _simulate_mask(p, m) == _matvec_mask(a, m) for m in range(1 << p.n)
        )
    if mode == "sample":
        rng = random.Random(seed)
        top = 1 << p.n
        return all(
            _simulate_mask(p, m) == _matvec_mask(a, m)
            for m in (rng.randrange(top) for _ in range(SAMPLE_COUNT))
        )
    raise ValueError(f"unknown equivalence mode {mode!r}")
