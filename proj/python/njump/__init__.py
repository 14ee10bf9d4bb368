"""Newton numbers of convenient singularities and the non-degenerate jump.

All arithmetic is exact: counts are Python ints of any size, measures are
fractions.Fraction. Supports come from :func:`parse` or the :class:`Support`
constructor; the main entry points are :func:`newton_number`,
:func:`lambda_nd` and :func:`fastpath`.
"""

from ._core import (
    Support,
    base_identity,
    candidates,
    diagram,
    extended_gcd,
    fastpath,
    forced_witness,
    is_convenient,
    jump_of_candidate,
    lambda_nd,
    metrics,
    newton_number,
    parse,
    to_string,
    __version__,
)

__all__ = [
    "Support",
    "base_identity",
    "candidates",
    "diagram",
    "extended_gcd",
    "fastpath",
    "forced_witness",
    "is_convenient",
    "jump_of_candidate",
    "lambda_nd",
    "metrics",
    "newton_number",
    "parse",
    "to_string",
    "__version__",
]
