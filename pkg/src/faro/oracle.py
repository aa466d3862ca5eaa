"""Out-of-place reference shuffles: ground truth for everything else.

These are deliberately naive. ``oracle_shuffle`` places each element
directly from the closed-form index map; ``oracle_interleave`` builds the
same deck the way a card table would describe it. The two formulations are
independent of each other and of the in-place machinery, so agreement is
meaningful.
"""

from .permcore import ShuffleKind, validate_order

__all__ = ["oracle_shuffle", "oracle_interleave"]


def oracle_shuffle(values, kind: ShuffleKind) -> list:
    """New list holding the shuffle of `values`, by direct placement."""
    n = len(values)
    validate_order(kind, n)
    out = [None] * n
    if kind.family == "in":
        for i in range(1, n + 1):
            out[2 * i % (n + 1) - 1] = values[i - 1]
    elif kind.family == "out":
        out[0], out[n - 1] = values[0], values[n - 1]
        for i in range(2, n):
            out[2 * (i - 1) % (n - 1)] = values[i - 1]
    else:
        k = kind.k
        for i in range(1, n + 1):
            out[k * i % (n + 1) - 1] = values[i - 1]
    return out


def oracle_interleave(first_half, second_half) -> list:
    """Perfect interleave with the second half's first card on top."""
    if len(first_half) != len(second_half):
        raise ValueError(
            f"halves differ in length: {len(first_half)} vs {len(second_half)}"
        )
    out = []
    for s, f in zip(second_half, first_half):
        out.append(s)
        out.append(f)
    return out
