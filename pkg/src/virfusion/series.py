"""Truncated integer q-series helpers."""
from __future__ import annotations


def partition_numbers(order: int) -> list[int]:
    """``p(0), ..., p(order)``: coefficients of ``1 / prod_{n>=1} (1 - q^n)``."""
    p = [1] + [0] * order
    for part in range(1, order + 1):
        for n in range(part, order + 1):
            p[n] += p[n - part]
    return p


def mul(a: list[int], b: list[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            for j, y in enumerate(b[: order + 1 - i]):
                out[i + j] += x * y
    return out


def shift(a: list[int], k: int, order: int) -> list[int]:
    """Multiply by ``q^k`` and truncate."""
    out = [0] * (order + 1)
    for i, x in enumerate(a):
        if 0 <= i + k <= order:
            out[i + k] = x
    return out
