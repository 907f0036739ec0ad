"""
Words in free groups and braid groups as tuples of signed 1-based generator
indices: ``(1, -2, 3)`` is x1 x2^-1 x3 (or sigma_1 sigma_2^-1 sigma_3).
"""
from __future__ import annotations

from typing import Iterable, Sequence

Word = tuple[int, ...]


def reduce(word: Iterable[int]) -> Word:
    """Free reduction."""
    out: list[int] = []
    for letter in word:
        if letter == 0:
            raise ValueError("0 is not a generator index")
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def inverse(word: Sequence[int]) -> Word:
    return tuple(-letter for letter in reversed(word))


def cyclic_reduce(word: Iterable[int]) -> Word:
    out = list(reduce(word))
    while len(out) > 1 and out[0] == -out[-1]:
        out = out[1:-1]
    return tuple(out)


def multiply(*words: Sequence[int]) -> Word:
    return reduce(letter for word in words for letter in word)


def conjugate(word: Sequence[int], by: Sequence[int]) -> Word:
    """by * word * by^-1."""
    return multiply(by, word, inverse(by))


def transport(images: Sequence[Word], letter: int) -> list[Word]:
    """
    Move the meridian words ``images`` (one per strand position) across one
    braid letter.  +i: the strand at position i passes below its right
    neighbour; -i is the inverse move.
    """
    i = abs(letter) - 1
    if not 0 <= i < len(images) - 1:
        raise ValueError(f"braid letter {letter} out of range for {len(images)} strands")
    out = list(images)
    left, right = images[i], images[i + 1]
    if letter > 0:
        out[i] = right
        out[i + 1] = multiply(inverse(right), left, right)
    else:
        out[i] = multiply(left, right, inverse(left))
        out[i + 1] = left
    return out


def artin_images(braid: Iterable[int], strands: int) -> list[Word]:
    """Images of x1..xn after transport along ``braid``; faithful on the braid group."""
    images: list[Word] = [(k,) for k in range(1, strands + 1)]
    for letter in braid:
        images = transport(images, letter)
    return images


def braids_equivalent(first: Iterable[int], second: Iterable[int], strands: int) -> bool:
    return artin_images(first, strands) == artin_images(second, strands)


def is_trivial_braid(braid: Sequence[int], strands: int) -> bool:
    return not braid or braids_equivalent(braid, (), strands)


def format_word(word: Sequence[int], symbol: str = "x") -> str:
    if not word:
        return "1"
    return " ".join(f"{symbol}{abs(k)}" + ("^-1" if k < 0 else "") for k in word)
