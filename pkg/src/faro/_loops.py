"""Innermost element-moving loops.

Kept in the restricted style that both CPython and numba can execute, so the
optional compiled twins in ``_fastpath`` are built from this exact source and
cannot drift from the reference behaviour.

All slots here are 0-based. Callers own validation and instrumentation; these
loops only move elements.
"""


def reverse_slots(buf, lo, hi):
    # swap ends inward: (hi - lo) // 2 swaps, one temporary per swap
    hi -= 1
    while lo < hi:
        buf[lo], buf[hi] = buf[hi], buf[lo]
        lo += 1
        hi -= 1


def cycle_walk(buf, base, leader, mult, modulus):
    # Realize one permutation cycle: hold buf[base + leader] in a temporary,
    # then follow the orbit of `leader` under j -> j * mult (mod modulus),
    # swapping the temporary into each visited slot until the orbit closes.
    # Local positions j are 1-based; the slot for j is buf[base + j].
    j = leader
    t = buf[base + j]
    while True:
        j = j * mult % modulus
        p = base + j
        buf[p], t = t, buf[p]
        if j == leader:
            break
