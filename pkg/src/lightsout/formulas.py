"""Nullity formulas and lower bounds for the product-game operator.

Everything here evaluates the nullity of kron(I, A) - kron(B^T, I) by some
route: the min-sum over matching irreducible factor data, the double sum of
gcd degrees over invariant factors, the weighted self-product form, the
path specialization, the gcd-degree lower bound, or plain Gaussian
elimination on the assembled operator (the oracle the others are checked
against).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from lightsout import gfmat
from lightsout.gfmat import PrimeFieldMatrix
from lightsout.gfpoly import Poly, poly_gcd, shift_one
from lightsout.snf import FactorData, SnfResult, charpoly_oracle

#: Largest operator size (rows = m*n) the elimination oracle accepts.
ORACLE_SIZE_CAP = 4096

MODES = ("open", "closed")

REPORT_METHODS = frozenset(
    {
        "theorem_sum",
        "snf_product",
        "snf_self",
        "snf_path",
        "oracle",
        "lower_bound_open",
        "lower_bound_closed",
    }
)


@dataclass(frozen=True)
class NullityReport:
    """A single computed nullity (or bound) with its provenance."""

    method: str
    value: int
    inputs: str
    seed: int | None = None

    def __post_init__(self):
        if self.method not in REPORT_METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.value < 0:
            raise ValueError("nullity values are nonnegative")

    def to_dict(self) -> dict:
        d = {"method": self.method, "value": self.value, "inputs": self.inputs}
        if self.seed is not None:
            d["seed"] = self.seed
        return d


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    return mode


def partition_min_sum(pi: Sequence[int], tau: Sequence[int]) -> int:
    """Double sum of min(pi_i, tau_j); always >= min(sum(pi), sum(tau))."""
    for parts in (pi, tau):
        if any(part < 1 for part in parts):
            raise ValueError("partition parts must be positive integers")
    return sum(min(a, b) for a in pi for b in tau)


def nullity_from_factor_data(fa: FactorData, fb: FactorData) -> int:
    """Min-sum nullity over matching irreducibles.

    For each irreducible q appearing in both factor maps, add
    deg(q) * sum_{i,j} min(e_i, f_j) over the exponent lists.
    """
    total = 0
    for q, es in fa.exponents.items():
        fs = fb.exponents.get(q)
        if fs is None:
            continue
        total += (q.degree or 0) * sum(min(e, f) for e in es for f in fs)
    return total


def nullity_snf_product(sa: SnfResult, sb: SnfResult) -> int:
    """Double sum of deg gcd(s_i, t_j) over the two invariant factor lists."""
    pa, pb = sa.field, sb.field
    if pa is not None and pb is not None and pa != pb:
        raise ValueError(f"field mismatch: GF({pa}) vs GF({pb})")
    total = 0
    for si in sa.invariant_factors:
        if not si.degree:
            continue
        for tj in sb.invariant_factors:
            if not tj.degree:
                continue
            total += poly_gcd(si, tj).degree or 0
    return total


def nullity_snf_self(sa: SnfResult) -> int:
    """Self-product nullity: sum of (2m - 2i + 1) * deg(s_i), i = 1..m.

    Equals nullity_snf_product(sa, sa); the divisibility chain collapses
    each gcd to the smaller-indexed factor.
    """
    m = len(sa.invariant_factors)
    return sum(
        (2 * m - 2 * i + 1) * (f.degree or 0)
        for i, f in enumerate(sa.invariant_factors, start=1)
    )


def path_adjacency(m: int) -> list[list[int]]:
    """0/1 adjacency matrix of the path on m vertices."""
    if m < 1:
        raise ValueError("paths have at least one vertex")
    return [[1 if abs(i - j) == 1 else 0 for j in range(m)] for i in range(m)]


def nullity_path_product(m: int, sg: SnfResult) -> int:
    """Nullity of the path-by-G product operator over GF(2).

    Paths are non-derogatory, so only the characteristic polynomial of the
    path enters: sum of deg gcd(c_path, s_i) over G's invariant factors.
    """
    if m < 1:
        raise ValueError("paths have at least one vertex")
    p = sg.field
    if p is None:
        return 0
    c_path = charpoly_oracle(path_adjacency(m), p)
    return sum(
        poly_gcd(c_path, si).degree or 0
        for si in sg.invariant_factors
        if si.degree
    )


def gcd_lower_bound(ca: Poly, cb: Poly, mode: str = "open") -> int:
    """Degree of gcd(c_A, c_B) (open) or gcd(c_A(x+1), c_B) (closed).

    A lower bound for the nullity of the open (resp. closed, over
    characteristic 2) product operator built from matrices with these
    characteristic polynomials.
    """
    check_mode(mode)
    if ca.p != cb.p:
        raise ValueError(f"field mismatch: GF({ca.p}) vs GF({cb.p})")
    if mode == "closed":
        ca = shift_one(ca)
    return poly_gcd(ca, cb).degree or 0


def oracle_nullity(
    A: PrimeFieldMatrix, B: PrimeFieldMatrix, max_dim: int = ORACLE_SIZE_CAP
) -> int:
    """Ground-truth nullity of the product operator by Gaussian elimination."""
    if not A.is_square or not B.is_square:
        raise ValueError("oracle requires square A and B")
    size = A.rows * B.rows
    if size > max_dim:
        raise ValueError(f"operator size {size} exceeds the oracle cap {max_dim}")
    op = gfmat.sylvester_operator(A, B)
    return gfmat.rank_nullity(op).nullity
