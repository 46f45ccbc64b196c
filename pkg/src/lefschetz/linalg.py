"""Exact rank and determinant over the fields the oracle works with.

Rank over Q uses a modular certificate first: rank mod p never exceeds the
rational rank, so a full-rank answer mod p is already exact; only deficient
matrices pay for fraction-free elimination over the integers.
"""

from __future__ import annotations

from ._kernels import BACKEND, det_bareiss, rank_bareiss, rank_mod_p

__all__ = ["BACKEND", "rank_q", "rank_gf", "rank_over", "det_q", "det_gf"]

_CERT_PRIME = 2147483629  # largest prime below 2^31


def rank_q(rows: list[list[int]]) -> int:
    """Exact rank over the rationals of an integer matrix.

    rank mod p <= rational rank <= min(dims), so a full-rank answer modulo
    the certificate prime is already exact; only deficient matrices pay for
    the fraction-free elimination.
    """
    if not rows or not rows[0]:
        return 0
    bound = min(len(rows), len(rows[0]))
    if rank_mod_p(rows, _CERT_PRIME) == bound:
        return bound
    return rank_bareiss(rows)


def rank_gf(rows: list[list[int]], p: int) -> int:
    """Exact rank over GF(p)."""
    return rank_mod_p(rows, p)


def rank_over(rows: list[list[int]], char: int) -> int:
    return rank_q(rows) if char == 0 else rank_gf(rows, char)


def det_q(rows: list[list[int]]) -> int:
    """Exact determinant over the integers/rationals."""
    return det_bareiss(rows)


def det_gf(rows: list[list[int]], p: int) -> int:
    return det_bareiss(rows) % p
