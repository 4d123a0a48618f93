"""Flags of subsets (equivalently ordered set partitions) and their types."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graphcore import full_set, popcount, subsets

MAX_FLAG_N = 9


@dataclass(frozen=True)
class Flag:
    """Chain F_1 < ... < F_k of vertex masks; F_0 = 0 is implicit.

    ``chain[-1]`` is the whole ground set the flag lives on.
    """

    chain: tuple[int, ...]

    def __post_init__(self):
        if not self.chain:
            raise ValueError("a flag needs at least one block")
        prev = 0
        for f in self.chain:
            if f & prev != prev or f == prev:
                raise ValueError("flag inclusions must be strict")
            prev = f

    @classmethod
    def from_blocks(cls, blocks) -> "Flag":
        chain, acc = [], 0
        for b in blocks:
            acc |= b
            chain.append(acc)
        return cls(tuple(chain))

    @property
    def ground(self) -> int:
        return self.chain[-1]

    def steps(self) -> Iterator[tuple[int, int]]:
        """Pairs (F_{i-1}, F_i)."""
        prev = 0
        for f in self.chain:
            yield prev, f
            prev = f

    def blocks(self) -> list[int]:
        return [cur & ~prev for prev, cur in self.steps()]

    def type(self) -> tuple[int, ...]:
        return tuple(popcount(b) for b in self.blocks())


def flags_on(ground: int) -> Iterator[Flag]:
    """Every flag whose top element is ``ground``, first block chosen first."""
    def rec(rest: int, chain: tuple[int, ...], acc: int):
        if not rest:
            yield Flag(chain)
            return
        for first in subsets(rest):
            if first:
                yield from rec(rest & ~first, chain + (acc | first,), acc | first)

    if ground == 0:
        return
    yield from rec(ground, (), 0)


def enumerate_flags(n: int) -> Iterator[Flag]:
    if not 1 <= n <= MAX_FLAG_N:
        raise ValueError(f"flag enumeration supports 1 <= n <= {MAX_FLAG_N}")
    yield from flags_on(full_set(n))
