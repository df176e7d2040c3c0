"""
Geometry presets: P^n1 x P^n2 with a twist and specialised weights.

A twist is either a line bundle sum whose Euler class is inserted (the
``a`` entries, degrees on H1 and H2) or a local direction (the ``b``
entries, negative degrees).  Every preset satisfies the Calabi-Yau
condition sum(a) - sum(b) = n_k + 1 on each factor k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import CohomRing
from .field import root_of_unity

__all__ = ["Geometry", "PRESETS", "get_preset", "LOCAL_P1P1", "E_SURFACE_32", "E_3FOLD_33", "K3_FIB_42"]


@dataclass(frozen=True)
class Geometry:
    name: str
    n: tuple
    twist: tuple          # degrees (t1, t2) of the single twisting bundle
    local: bool           # True: b-twist (negative bundle), False: a-twist
    weights1: tuple
    weights2: tuple
    order: int

    def __post_init__(self):
        t1, t2 = self.twist
        a = (0, 0) if self.local else (t1, t2)
        b = (t1, t2) if self.local else (0, 0)
        for k in range(2):
            if a[k] - b[k] != self.n[k] + 1:
                raise ValueError(f"{self.name}: Calabi-Yau condition fails on factor {k + 1}")

    def ring(self):
        return _ring(self)

    @property
    def fixed_points(self):
        return [(i, j) for i in range(self.n[0] + 1) for j in range(self.n[1] + 1)]

    def weight(self, axis, k):
        return (self.weights1 if axis == 1 else self.weights2)[k]


_RINGS = {}


def _ring(g):
    r = _RINGS.get(g.name)
    if r is None:
        r = _RINGS[g.name] = CohomRing(g.n[0], g.n[1], g.weights1, g.weights2, g.order)
    return r


def _roots(n, order, count=None):
    step = order // n
    return tuple(root_of_unity(order, step * k) for k in range(count or n))


LOCAL_P1P1 = Geometry(
    name="local-p1p1", n=(1, 1), twist=(-2, -2), local=True,
    weights1=_roots(2, 4), weights2=(root_of_unity(4, 1), root_of_unity(4, 3)), order=4)

E_SURFACE_32 = Geometry(
    name="e-surface-32", n=(2, 1), twist=(3, 2), local=False,
    weights1=_roots(3, 12), weights2=_roots(2, 12), order=12)

E_3FOLD_33 = Geometry(
    name="e-3fold-33", n=(2, 2), twist=(3, 3), local=False,
    weights1=_roots(3, 3), weights2=_roots(3, 3), order=3)

K3_FIB_42 = Geometry(
    name="k3-fib-42", n=(3, 1), twist=(4, 2), local=False,
    weights1=_roots(4, 4), weights2=_roots(2, 4), order=4)

PRESETS = {g.name: g for g in (LOCAL_P1P1, E_SURFACE_32, E_3FOLD_33, K3_FIB_42)}
_ALIASES = {"LOCAL_P1P1": "local-p1p1", "E_SURFACE_32": "e-surface-32",
            "E_3FOLD_33": "e-3fold-33", "K3_FIB_42": "k3-fib-42",
            "local": "local-p1p1", "32": "e-surface-32", "33": "e-3fold-33", "42": "k3-fib-42"}


def get_preset(name):
    key = _ALIASES.get(name, name)
    key = _ALIASES.get(key.upper(), key) if key not in PRESETS else key
    if key not in PRESETS:
        raise KeyError(f"unknown geometry preset {name!r}; choose from {sorted(PRESETS)}")
    return PRESETS[key]
