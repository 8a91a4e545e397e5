"""Group words as sequences of (generator, exponent) syllables, and their text grammar.

Words are written as terms ``GEN`` or ``GEN^INT`` separated by ``*`` or
spaces; the empty string is the empty word.  Which generator names are legal
depends on the group: ``t`` and ``a`` for BS(1,n), ``g.<vertex>`` and
``t.<edge>`` for a labeled graph.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator

from .errors import ParseError

_TERM_RE = re.compile(r"^([^\s*^]+)(?:\^([+-]?\d+))?$")
_SEP_RE = re.compile(r"[\s*]+")


class GroupWord:
    """Freely reduced word: nonzero exponents, adjacent syllables on distinct generators."""

    __slots__ = ("_syllables",)

    def __init__(self, syllables: Iterable[tuple[str, int]] = ()):
        out: list[tuple[str, int]] = []
        for sym, exp in syllables:
            if exp == 0:
                continue
            if out and out[-1][0] == sym:
                total = out[-1][1] + exp
                out.pop()
                if total:
                    out.append((sym, total))
            else:
                out.append((sym, exp))
        self._syllables = tuple(out)

    @classmethod
    def parse(cls, text: str, generators: Iterable[str] | None = None) -> GroupWord:
        """Parse ``text``; if ``generators`` is given, any other name is a :class:`ParseError`."""
        allowed = None if generators is None else set(generators)
        text = text.strip()
        if not text:
            return cls()
        syllables = []
        for term in _SEP_RE.split(text):
            m = _TERM_RE.match(term)
            if m is None:
                raise ParseError(f"malformed term {term!r} in word {text!r}")
            sym, exp = m.group(1), m.group(2)
            if allowed is not None and sym not in allowed:
                raise ParseError(f"unknown generator {sym!r} in word {text!r}")
            syllables.append((sym, int(exp) if exp is not None else 1))
        return cls(syllables)

    @property
    def syllables(self) -> tuple[tuple[str, int], ...]:
        return self._syllables

    def __iter__(self) -> Iterator[tuple[str, int]]:
        return iter(self._syllables)

    def __len__(self) -> int:
        return len(self._syllables)

    def __add__(self, other: GroupWord) -> GroupWord:
        return GroupWord(self._syllables + other._syllables)

    def inverse(self) -> GroupWord:
        return GroupWord((s, -e) for s, e in reversed(self._syllables))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroupWord) and self._syllables == other._syllables

    def __hash__(self) -> int:
        return hash(self._syllables)

    def __str__(self) -> str:
        return " ".join(s if e == 1 else f"{s}^{e}" for s, e in self._syllables)

    def __repr__(self) -> str:
        return f"GroupWord({str(self)!r})"
