"""Codebook container and its text file format.

A codebook file starts with one ``# key=value ...`` header line followed by
the sorted codewords, one bit string per line.  Tuple-valued metadata is
written comma separated.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import Iterable

from .seqcore import BitSequence, bits, to_str


def _fmt(v) -> str:
    if isinstance(v, (tuple, list)):
        return ",".join(str(e) for e in v)
    s = str(v)
    if not s or any(c.isspace() for c in s) or "=" in s:
        raise ValueError(f"metadata value {v!r} cannot be serialized")
    return s


def _parse(s: str):
    if "," in s:
        return tuple(int(e) for e in s.split(","))
    try:
        return int(s)
    except ValueError:
        return s


@dataclass
class Codebook:
    words: tuple = ()
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.words = tuple(sorted(set(tuple(w) for w in self.words)))

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, x) -> bool:
        return self.index(x) is not None

    def __iter__(self):
        return iter(self.words)

    def index(self, x) -> int | None:
        x = tuple(x)
        k = bisect.bisect_left(self.words, x)
        if k < len(self.words) and self.words[k] == x:
            return k
        return None

    def encode(self, msg: int) -> BitSequence:
        """Message index -> codeword by lexicographic rank."""
        if not 0 <= msg < len(self.words):
            raise IndexError(f"message index {msg} out of range [0, {len(self.words)})")
        return self.words[msg]

    def dumps(self) -> str:
        head = " ".join(f"{k}={_fmt(v)}" for k, v in self.meta.items())
        return "\n".join([f"# {head}".rstrip()] + [to_str(w) for w in self.words]) + "\n"

    @classmethod
    def loads(cls, text: str) -> "Codebook":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("#"):
            raise ValueError("codebook file lacks a header line")
        meta = {}
        for tok in lines[0][1:].split():
            k, _, v = tok.partition("=")
            meta[k] = _parse(v)
        return cls(tuple(bits(ln) for ln in lines[1:]), meta)


def from_words(words: Iterable, **meta) -> Codebook:
    return Codebook(tuple(words), dict(meta))
