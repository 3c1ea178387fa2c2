"""Small-cancellation presentations, contour arrays and verification suites."""

import json

from ._scarrays import (
    Error,
    InvariantViolation,
    Presentation,
    ball_size,
    fixtures,
    load,
    minimal_exponent,
)
from . import _scarrays as _core


def check(presentation):
    return json.loads(_core.check(presentation))


def verify(presentation, suite, **kw):
    return json.loads(_core.verify(presentation, suite, **kw))


def embed(presentation, N, exponent=None, cap=1000000):
    return _core.embed(presentation, N, exponent, cap)


__all__ = [
    "Error",
    "InvariantViolation",
    "Presentation",
    "ball_size",
    "check",
    "embed",
    "fixtures",
    "load",
    "minimal_exponent",
    "verify",
]
