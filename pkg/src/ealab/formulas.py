"""Tiny formula language for dimension-dependent parameters.

Experiment parameters like the distortion bonus or the target gap scale
with n, so configs accept either plain numbers or one of a closed set of
formula strings that are resolved once n (and for one form, lambda) is
known.  Allowed forms: a numeric literal, "ln(n)", "n^ALPHA",
"n*ln(n)", and "(e/(e-1))^-lambda".  Whitespace and case are ignored.
"""

from __future__ import annotations

import math

__all__ = ["resolve_param"]

_ALLOWED = "a number, 'ln(n)', 'n^ALPHA', 'n*ln(n)', '(e/(e-1))^-lambda'"


def resolve_param(value, n: int, lam=None, name: str = "parameter") -> float:
    """Resolve a numeric or formula-valued parameter at dimension n.

    lam feeds the '(e/(e-1))^-lambda' form and may be left None when that
    form is not used.  Unknown strings raise ValueError naming the field
    and listing the allowed forms.
    """
    if isinstance(value, bool):
        raise ValueError(f"{name}: expected a number or formula, got {value!r}")
    if isinstance(value, (int, float)):
        return float(value)
    if not isinstance(value, str):
        raise ValueError(f"{name}: expected a number or formula, got {value!r}")
    s = value.strip().lower().replace(" ", "")
    if not s:
        raise ValueError(f"{name}: empty formula; allowed forms are {_ALLOWED}")
    try:
        return float(s)
    except ValueError:
        pass
    if s in ("ln(n)", "lnn"):
        return math.log(n)
    if s in ("n*ln(n)", "n*lnn", "nln(n)", "nlnn"):
        return n * math.log(n)
    if s == "(e/(e-1))^-lambda":
        if lam is None:
            raise ValueError(f"{name}: formula {value!r} needs a lambda value")
        return (math.e / (math.e - 1.0)) ** (-float(lam))
    if s.startswith("n^"):
        try:
            alpha = float(s[2:])
        except ValueError:
            raise ValueError(f"{name}: bad exponent in {value!r}") from None
        return float(n) ** alpha
    raise ValueError(f"{name}: unrecognized formula {value!r}; allowed forms are {_ALLOWED}")
