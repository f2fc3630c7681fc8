"""Shared test utilities: string-level wrappers and brute-force oracles.

The oracles here are deliberately naive (window scans, substring tests)
so they stay independent of the code paths they verify.
"""
from __future__ import annotations

import random

from translocsearch.seqcore import Sequence, encode, infer_alphabet

LETTERS = "abcdefghijklmnopqrst"

EX1_X = "agcagccag"
EX2_X, EX2_Y = "gtgaccgtccag", "ggatcccagcgt"
EX3_X, EX3_Y = "cattcatgatcat", "atcatgacttactgactta"
EX4_X, EX4_Y = "aggga", "aggagcatgggactaga"


def encode_pair(pattern: str, text: str) -> tuple[Sequence, Sequence]:
    """Encode both strings against the pattern's alphabet; text characters
    the pattern lacks become the sentinel code."""
    alphabet = infer_alphabet(pattern)
    return encode(pattern, alphabet), encode(text, alphabet)


def rand_str(rng: random.Random, sigma: int, length: int) -> str:
    return "".join(rng.choice(LETTERS[:sigma]) for _ in range(length))


def brute_longest_factor_suffix(x: str, scanned: str) -> int:
    """Length of the longest suffix of ``scanned`` that occurs in ``x``."""
    for length in range(min(len(x), len(scanned)), 0, -1):
        if scanned[len(scanned) - length :] in x:
            return length
    return 0


def brute_end_positions(x: str, w: str) -> set[int]:
    """1-based positions of ``x`` at which occurrences of ``w`` end."""
    return {
        i + len(w)
        for i in range(len(x) - len(w) + 1)
        if x[i : i + len(w)] == w
    }


def brute_factor_suffix_ends(x: str, scanned: str, k: int) -> set[int]:
    """1-based pattern positions where the length-k suffix of ``scanned``
    ends, empty when that suffix is not a factor of ``x``."""
    if k < 1 or k > len(scanned):
        return set()
    return brute_end_positions(x, scanned[len(scanned) - k :])


def brute_common_suffix(x: str, y: str, i: int, j: int) -> int:
    """Length of the longest common suffix of x[1..i] and y[1..j]."""
    length = 0
    while length < i and length < j and x[i - 1 - length] == y[j - 1 - length]:
        length += 1
    return length


def bits(mask: int) -> set[int]:
    out = set()
    pos = 0
    while mask:
        if mask & 1:
            out.add(pos)
        mask >>= 1
        pos += 1
    return out
