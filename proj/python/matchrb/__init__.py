"""Exact checks and constructions for matching Rota-Baxter structures.

Objects are plain dicts in the workspace JSON format.
"""

import json

from . import _core
from ._core import MatchrbError

__all__ = [
    "MatchrbError",
    "check",
    "cohomology",
    "induce_dendriform",
    "functor_g",
    "semidirect_embedding",
    "extend_to_labelled_dendriform",
    "operators_from_rmatrix",
    "operators_on_dual",
    "family_from_rb_pair",
    "family_from_central_elements",
    "homotopy_functor_g",
    "induce_homotopy_dendriform",
    "cocycle_count",
    "cocycle_to_deformation",
    "truncated_integration",
    "zero_family",
    "line_dendriform",
    "dual_numbers_dg",
    "tensor_with_dual_numbers",
    "run_cli",
]


def _dump(obj):
    return json.dumps(obj)


def _load(text):
    return json.loads(text)


def _scalars(values):
    return [str(v) for v in values]


def check(kind, obj, arity_bound=3):
    """Run a checker; returns the certificate dict."""
    return _load(_core.check(kind, _dump(obj), arity_bound))


def cohomology(obj, complex, degree, max_degree=3):
    return _load(_core.cohomology(_dump(obj), complex, degree, max_degree))


def induce_dendriform(family):
    return _load(_core.induce_dendriform(_dump(family)))


def functor_g(dendriform):
    return _load(_core.functor_g(_dump(dendriform)))


def semidirect_embedding(dendriform):
    return _load(_core.semidirect_embedding(_dump(dendriform)))


def extend_to_labelled_dendriform(dendriform):
    return _load(_core.extend_to_labelled_dendriform(_dump(dendriform)))


def operators_from_rmatrix(rmatrix, bimodule):
    return _load(_core.operators_from_rmatrix(_dump(rmatrix), _dump(bimodule)))


def operators_on_dual(rmatrix):
    return _load(_core.operators_on_dual(_dump(rmatrix)))


def family_from_rb_pair(single):
    return _load(_core.family_from_rb_pair(_dump(single)))


def family_from_central_elements(single, labels, elements):
    return _load(_core.family_from_central_elements(_dump(single), list(labels), [_scalars(e) for e in elements]))


def homotopy_functor_g(h, arity_bound=3):
    return _load(_core.homotopy_functor_g(_dump(h), arity_bound))


def induce_homotopy_dendriform(h, arity_bound=3):
    return _load(_core.induce_homotopy_dendriform(_dump(h), arity_bound))


def cocycle_count(family):
    return _core.cocycle_count(_dump(family))


def cocycle_to_deformation(family, index):
    return _load(_core.cocycle_to_deformation(_dump(family), index))


def truncated_integration(n=6, q=2):
    return _load(_core.truncated_integration(n, q))


def zero_family(a, m, q):
    return _load(_core.zero_family(a, m, q))


def line_dendriform(prec, succ):
    return _load(_core.line_dendriform(_scalars(prec), _scalars(succ)))


def dual_numbers_dg():
    return _load(_core.dual_numbers_dg())


def tensor_with_dual_numbers(obj):
    return _load(_core.tensor_with_dual_numbers(_dump(obj)))


def run_cli(args):
    """Returns (exit code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
