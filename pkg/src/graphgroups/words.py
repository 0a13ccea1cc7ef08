"""Free words over named alphabets and finite presentations.

Words are stored run-length encoded as ``(symbol, exponent)`` pairs, so a
power like ``z^(10**40)`` costs one letter.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidInput, ParseError
from .zmat import IntMatrix

__all__ = [
    "Alphabet",
    "FreeWord",
    "FpPresentation",
    "free_reduce",
    "word_multiply",
    "word_invert",
    "abelianized_relation_matrix",
    "parse_word",
    "format_word",
    "commutator",
]

SYMBOL_RE = re.compile(r"[A-Za-z0-9_]+\Z")
# Symbols written inside word text must not start with a digit, so that the
# literal "1" can denote the identity.
_WORD_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*([+-]?\s*\d+))?")


class AlphabetMismatch(InvalidInput):
    pass


class UnknownSymbol(InvalidInput):
    pass


@dataclass(frozen=True)
class Alphabet:
    names: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        seen = set()
        for n in names:
            if not isinstance(n, str) or not SYMBOL_RE.match(n):
                raise InvalidInput(f"invalid generator name {n!r}")
            if n in seen:
                raise InvalidInput(f"duplicate generator name {n!r}")
            seen.add(n)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __contains__(self, name) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownSymbol(f"symbol {name!r} is not in the alphabet") from None


@dataclass(frozen=True)
class FreeWord:
    """Reduced word. Build through :func:`free_reduce` unless already reduced."""

    letters: tuple[tuple[str, int], ...] = ()
    alphabet: Alphabet | None = None

    def __post_init__(self):
        prev = None
        for sym, exp in self.letters:
            if exp == 0 or sym == prev:
                raise InvalidInput(f"word {self.letters!r} is not reduced")
            prev = sym

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return word_multiply(self, other)

    def __invert__(self) -> "FreeWord":
        return word_invert(self)

    def __pow__(self, k: int) -> "FreeWord":
        if k < 0:
            return word_invert(self) ** -k
        out = FreeWord((), self.alphabet)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def exponent_sum(self, symbol: str) -> int:
        return sum(e for s, e in self.letters if s == symbol)

    def length(self) -> int:
        """Word length counted letter by letter."""
        return sum(abs(e) for _, e in self.letters)

    def symbols(self) -> set[str]:
        return {s for s, _ in self.letters}

    def __str__(self):
        return format_word(self)


def free_reduce(raw: Iterable[tuple[str, int]], alphabet: Alphabet | None = None) -> FreeWord:
    out: list[list] = []
    for sym, exp in raw:
        if alphabet is not None and sym not in alphabet:
            raise UnknownSymbol(f"symbol {sym!r} is not in the alphabet")
        exp = int(exp)
        if exp == 0:
            continue
        if out and out[-1][0] == sym:
            out[-1][1] += exp
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([sym, exp])
    return FreeWord(tuple((s, e) for s, e in out), alphabet)


def _common_alphabet(u: FreeWord, v: FreeWord) -> Alphabet | None:
    if u.alphabet is not None and v.alphabet is not None and u.alphabet != v.alphabet:
        raise AlphabetMismatch("cannot combine words over different alphabets")
    return u.alphabet if u.alphabet is not None else v.alphabet


def word_multiply(u: FreeWord, v: FreeWord) -> FreeWord:
    alphabet = _common_alphabet(u, v)
    return free_reduce(u.letters + v.letters, alphabet)


def word_invert(u: FreeWord) -> FreeWord:
    return FreeWord(tuple((s, -e) for s, e in reversed(u.letters)), u.alphabet)


def commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    """``u v u^-1 v^-1``."""
    return u * v * ~u * ~v


def parse_word(text: str, alphabet: Alphabet | None = None) -> FreeWord:
    """Parse ``a^2 b^-3 c``. The bare literal ``1`` (or an empty string) is the identity."""
    s = text.strip()
    if s in ("", "1"):
        return FreeWord((), alphabet)
    raw = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _WORD_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r} in word {text!r}",
                             column=pos + 1)
        exp = int(m.group(2).replace(" ", "")) if m.group(2) else 1
        raw.append((m.group(1), exp))
        pos = m.end()
    return free_reduce(raw, alphabet)


def format_word(w: FreeWord) -> str:
    if not w.letters:
        return "1"
    return " ".join(s if e == 1 else f"{s}^{e}" for s, e in w.letters)


@dataclass(frozen=True)
class FpPresentation:
    generators: Alphabet
    relators: tuple[FreeWord, ...] = ()

    def __post_init__(self):
        rels = []
        for r in self.relators:
            if r.alphabet is not None and r.alphabet != self.generators:
                raise AlphabetMismatch("relator alphabet differs from presentation alphabet")
            for s in r.symbols():
                if s not in self.generators:
                    raise UnknownSymbol(f"relator uses {s!r}, not a generator")
            if r.letters:
                rels.append(FreeWord(r.letters, self.generators))
        object.__setattr__(self, "relators", tuple(rels))

    @classmethod
    def from_text(cls, gens: Sequence[str], relators: Sequence[str]) -> "FpPresentation":
        alphabet = Alphabet(gens)
        return cls(alphabet, tuple(parse_word(r, alphabet) for r in relators))

    def word(self, text: str) -> FreeWord:
        return parse_word(text, self.generators)

    def __str__(self):
        gens = ", ".join(self.generators.names)
        rels = ", ".join(format_word(r) for r in self.relators)
        return f"< {gens} | {rels} >"


def abelianized_relation_matrix(p: FpPresentation) -> IntMatrix:
    """One row per relator, one column per generator; entries are exponent sums."""
    rows = []
    for r in p.relators:
        row = [0] * len(p.generators)
        for s, e in r.letters:
            row[p.generators.index(s)] += e
        rows.append(row)
    return IntMatrix.from_rows(rows, len(p.generators))
