"""Exact tropical intersection toolkit.

Objects are exchanged as the JSON-compatible dicts of the command-line
formats: scalars are strings such as "3/2", polyhedra are
{"ineqs": [{"a": [...], "b": "..."}]}, weighted complexes are
{"dim": n, "puredim": d, "cells": [{"poly": ..., "weight": w}]}.
"""

import json as _json

from . import _troplift


class TropliftError(Exception):
    """Raised for invalid input or failed preconditions; `kind` names the error."""

    def __init__(self, kind, message):
        super().__init__(message)
        self.kind = kind


def _call(fn, *args):
    try:
        return fn(*args)
    except _troplift.Error as e:
        kind, _, message = str(e).partition("|")
        raise TropliftError(kind, message) from None


def _enc(obj):
    return _json.dumps(obj)


def tropicalize(poly):
    return _json.loads(_call(_troplift.tropicalize, _enc(poly)))


def check_balancing(complex_):
    return _call(_troplift.check_balancing, _enc(complex_))


def stable_intersect(a, b, vector=None):
    v = None if vector is None else _enc([str(x) for x in vector])
    return _json.loads(_call(_troplift.stable_intersect, _enc(a), _enc(b), v))


def stable_intersect_multi(cycles):
    return _json.loads(_call(_troplift.stable_intersect_multi, [_enc(c) for c in cycles]))


def intersect_components(a, b):
    return _json.loads(_call(_troplift.intersect_components, _enc(a), _enc(b)))["components"]


def is_compactifying(fan, coll):
    return _call(_troplift.is_compactifying, _enc(fan), _enc(coll))


def is_compatible(fan, coll):
    return _call(_troplift.is_compatible, _enc(fan), _enc(coll))


def build_compactifying_fan(coll, minimal=False):
    return _json.loads(_call(_troplift.build_compactifying_fan, _enc(coll), minimal))


def extended_closure(coll, fan):
    return _json.loads(_call(_troplift.extended_closure, _enc(coll), _enc(fan)))


def newton_polygon_valuations(coeff_vals):
    """Root valuations of a polynomial given the valuations of its coefficients
    (None for a zero coefficient), as a list of (valuation, multiplicity)."""
    vals = [None if c is None else str(c) for c in coeff_vals]
    roots = _json.loads(_call(_troplift.newton_polygon_valuations, _enc({"coeff_vals": vals})))["roots"]
    return [(r["val"], r["mult"]) for r in roots]


def moving_data(a, b, fan, coll, component=0, samples=4):
    return _json.loads(_call(_troplift.moving_data, _enc(a), _enc(b), _enc(fan), _enc(coll), component, samples))


def render_svg(complex_, stable=None, project=None):
    s = None if stable is None else _enc(stable)
    return _call(_troplift.render_svg, _enc(complex_), s, project)


def run_cli(args):
    """Runs the command-line front end in process; returns (exit code, stdout, stderr)."""
    return _troplift.run_cli(list(args))


__all__ = [
    "TropliftError",
    "build_compactifying_fan",
    "check_balancing",
    "extended_closure",
    "intersect_components",
    "is_compactifying",
    "is_compatible",
    "moving_data",
    "newton_polygon_valuations",
    "render_svg",
    "run_cli",
    "stable_intersect",
    "stable_intersect_multi",
    "tropicalize",
]
