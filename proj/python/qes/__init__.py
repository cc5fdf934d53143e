"""Exact spectra of quasi-exactly solvable operators built from polynomial master functions."""

import json

from . import _core
from ._core import QesError, closed_form_V

__version__ = _core.__version__


def _params(params):
    return {k: str(v) for k, v in (params or {}).items()}


def list_models(k=0):
    return json.loads(_core.list_models(k))


def solve(model, params=None, n=0, N_extra=6, tol=1e-12):
    return json.loads(_core.solve(model, _params(params), n, N_extra, tol))


def solve_custom(A, F, n, lo=0.0, hi=float("inf"), fill_F3=False):
    def coeffs(c):
        return c if isinstance(c, str) else ",".join(str(x) for x in c)

    return json.loads(_core.solve_custom(coeffs(A), coeffs(F), n, lo, hi, fill_F3))


def verify(models=(), trials=5, seed=1, threads=0):
    return json.loads(_core.verify(list(models), trials, seed, threads))


def potential(model, params=None, n=0, t_min=0.5, t_max=3.0, steps=100, closed_form=False):
    return json.loads(_core.potential(model, _params(params), n, t_min, t_max, steps, closed_form))


__all__ = ["QesError", "closed_form_V", "list_models", "solve", "solve_custom", "verify", "potential"]
