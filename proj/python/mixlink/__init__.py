"""Mixed polynomials, cyclic covering pull-backs and link certification."""

import json as _json

from ._core import (
    ParseError,
    c_certificate,
    covering_degree,
    evaluate,
    is_convenient,
    parse,
    pullback,
    run,
    weights,
)

__all__ = [
    "ParseError",
    "analyze",
    "c_certificate",
    "certify",
    "covering_degree",
    "evaluate",
    "identity_check",
    "is_convenient",
    "parse",
    "pullback",
    "run",
    "weights",
]


def _csv(values):
    if isinstance(values, (int, float)):
        return str(values)
    return ",".join(str(v) for v in values)


def _json_call(args):
    code, out, err = run(args + ["--json"])
    if code == 1:
        raise ValueError(err.strip() or out.strip())
    result = _json.loads(out)
    return code, result


def analyze(expr, trials=200, seed=1):
    """Homogeneity, convenience and Newton boundary report as a dict."""
    return _json_call(["analyze", "-e", expr, "--trials", str(trials), "--seed", str(seed)])[1]


def certify(expr, check="all", radius=(0.25, 0.5, 1.0), samples=200, seed=1, a=None, b=None,
            sphere_weights=None, expected_sign="+", tube_delta=None):
    """Runs the link certification; returns the JSON report as a dict."""
    args = ["certify", "-e", expr, "--check", check, "--radius", _csv(radius),
            "--samples", str(samples), "--seed", str(seed), "--expected-sign", expected_sign]
    if a is not None or b is not None:
        args += ["--a", _csv(a), "--b", _csv(b)]
    if sphere_weights is not None:
        args += ["--sphere-weights", _csv(sphere_weights)]
    if tube_delta is not None:
        args += ["--tube-delta", str(tube_delta)]
    return _json_call(args)[1]


def identity_check(expr, which, trials=100, seed=1, a=None, b=None):
    """Runs one identity check; returns the JSON result as a dict."""
    args = ["identity-check", "-e", expr, "--which", which, "--trials", str(trials), "--seed", str(seed)]
    if a is not None or b is not None:
        args += ["--a", _csv(a), "--b", _csv(b)]
    return _json_call(args)[1]
