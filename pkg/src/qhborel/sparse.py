"""Sparse vectors as ``{index: scalar}`` dicts (zero entries dropped)."""
from __future__ import annotations

import itertools


def add_into(acc: dict, vec: dict, c=1):
    for k, v in vec.items():
        x = acc.get(k)
        x = v * c if x is None else x + v * c
        if x == 0:
            acc.pop(k, None)
        else:
            acc[k] = x
    return acc


def scale(vec: dict, c) -> dict:
    if c == 0:
        return {}
    return {k: v * c for k, v in vec.items()}


def clean(vec: dict) -> dict:
    return {k: v for k, v in vec.items() if v != 0}


def multilinear(func, vectors):
    """Sum of func(idx_tuple) * product of coefficients over the supports."""
    out = {}
    for combo in itertools.product(*[list(v.items()) for v in vectors]):
        c = 1
        for _, x in combo:
            c = c * x
        res = func(tuple(k for k, _ in combo))
        if res:
            add_into(out, res, c)
    return out


def to_dense(vec: dict, n: int, zero):
    out = [zero] * n
    for k, v in vec.items():
        out[k] = v
    return out


def from_dense(values) -> dict:
    return {k: v for k, v in enumerate(values) if v != 0}
