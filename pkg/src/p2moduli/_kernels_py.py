"""Pure-Python implementations of the dense integer-polynomial kernels.

Coefficient lists are dense, ascending by exponent, with no trailing zeros.
Coefficients are plain Python ints (arbitrary precision); nothing here may
truncate to machine words.  A compiled twin of this module lives in
``_speedups.pyx``; ``_kernels`` picks one at import time.
"""

from __future__ import annotations


def mul_dense(a: list, b: list) -> list:
    """Convolution product of two coefficient lists."""
    if not a or not b:
        return []
    if len(a) > len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                if d:
                    out[i + j] += c * d
    return out


def div_exact_int(a: list, b: list):
    """Quotient of a by b when it exists over the integers, else None.

    Long division from the top; every leading-coefficient division must be
    exact and the remainder must vanish.  b must be nonzero.
    """
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return []
    nb = len(b)
    if len(a) < nb:
        return None
    lead = b[-1]
    rem = list(a)
    q = [0] * (len(a) - nb + 1)
    for i in range(len(q) - 1, -1, -1):
        c = rem[i + nb - 1]
        if c:
            qc, r = divmod(c, lead)
            if r:
                return None
            q[i] = qc
            for j in range(nb - 1):
                if b[j]:
                    rem[i + j] -= qc * b[j]
            rem[i + nb - 1] = 0
    for c in rem[: nb - 1]:
        if c:
            return None
    return q


def div_binomial(a: list, j: int) -> list | None:
    """Quotient of a by (x^j - 1) if exactly divisible, else None."""
    if not a:
        return []
    n = len(a)
    if n <= j:
        return None
    q = [0] * (n - j)
    rem = list(a)
    for i in range(n - 1, j - 1, -1):
        c = rem[i]
        if c:
            q[i - j] = c
            rem[i - j] += c
    for c in rem[:j]:
        if c:
            return None
    return q


def mul_binomial(a: list, j: int) -> list:
    """Product of a with (x^j - 1)."""
    if not a:
        return []
    out = [0] * (len(a) + j)
    for i, c in enumerate(a):
        if c:
            out[i + j] += c
            out[i] -= c
    return out
