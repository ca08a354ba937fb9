"""Scalars: Python ints, or integer polynomials in named parameters.

Polynomials are sympy expressions kept in expanded form. A polynomial with
no free symbols is collapsed back to an int so the integer code paths stay
fast and exact.
"""

import sympy


def symbols(names):
    """Integer-valued sympy symbols, one per whitespace-separated name."""
    out = sympy.symbols(names, integer=True)
    return out if isinstance(out, tuple) else (out,)


def normalize(x):
    """Canonical form: int if constant, otherwise an expanded polynomial."""
    if isinstance(x, int):
        return x
    x = sympy.expand(sympy.sympify(x))
    if x.free_symbols:
        poly = sympy.Poly(x, *sorted(x.free_symbols, key=str))
        if any(not c.is_integer for c in poly.coeffs()):
            raise ValueError(f"non-integer coefficient in {x}")
        return x
    if not x.is_integer:
        raise ValueError(f"{x} is not an integer")
    return int(x)


def is_symbolic(x):
    return not isinstance(x, int)


def is_zero(x):
    return normalize(x) == 0


def parameters(x):
    return set() if isinstance(x, int) else {str(s) for s in x.free_symbols}


def to_text(x):
    """Canonical text, e.g. ``2*c + d - 1``."""
    return str(normalize(x))


def parse(value):
    """Read an int or a polynomial string such as ``"2*c + d - 1"``."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        expr = sympy.sympify(value, locals=_local_symbols(value))
        return normalize(expr)
    raise TypeError(f"cannot read scalar from {value!r}")


def _local_symbols(text):
    names = {tok for tok in _identifiers(text)}
    return {name: sympy.Symbol(name, integer=True) for name in names}


def _identifiers(text):
    tok = ""
    for ch in text + " ":
        if ch.isalnum() or ch == "_":
            tok += ch
        else:
            if tok and not tok[0].isdigit():
                yield tok
            tok = ""
