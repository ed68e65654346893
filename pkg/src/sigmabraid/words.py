"""
Typed generator alphabets and freely reduced words.

Everything in this package computes over words in a small set of letter
families:

- ``s``    Artin half-twist generators s1 .. s(n-1);
- ``a, b`` strand-indexed surface pure braid generators a1 .. an, b1 .. bn
           (strand i crossing the two handle walls of the torus or the
           Klein bottle);
- ``C``    the encircling pure braids C[i,j], 1 <= i < j <= n;
- ``A``    the punctured-disc band generators A[i,j] that coordinatise the
           sphere pure braid groups, 1 <= i < j <= n with {i,j} != {1,2};
- ``D``    the full twist of the disc braid group;
- bare model letters x y a b u v w ub vb w2 w3, the generators of the
           semidirect-product models of the small pure braid groups.

Words are kept freely reduced at all times; construction APIs reduce
eagerly, so word-problem engines further up the stack can compare normal
forms by plain sequence equality.

Text syntax: whitespace-separated tokens ``a1 b3 s2 C[1,3] A[2,4] D x ub w2``
with inverses written ``^-1`` (for example ``C[1,3]^-1``).  Indices are
1-based everywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator


class DomainError(ValueError):
    """Base class for all input errors raised by this package."""


class WordSyntaxError(DomainError):
    """A token could not be parsed; carries the 0-based token position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"token {position}: {message}")
        self.position = position


class AlphabetError(DomainError):
    """A symbol is outside the ambient alphabet or violates index bounds."""


MODEL_LETTER_NAMES = ("x", "y", "a", "b", "u", "v", "w", "ub", "vb", "w2", "w3")

# Letter families.  Indexed families carry strand indices; model letters and
# the full twist carry none.
_INDEXED_ONE = ("s", "a", "b")
_INDEXED_TWO = ("C", "A")


@dataclass(frozen=True)
class GeneratorSymbol:
    """One signed letter: a family tag, optional indices and a sign (+1/-1).

    A symbol with ``kind`` in {"a","b"} and empty indices is a bare model
    letter; with one index it is the strand-indexed braid generator.
    """

    kind: str
    indices: tuple[int, ...] = ()
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise AlphabetError(f"sign must be +1 or -1, got {self.sign}")
        if self.kind in _INDEXED_TWO:
            i, j = self.indices
            if not (1 <= i < j):
                raise AlphabetError(f"{self.kind}[{i},{j}]: indices must satisfy 1 <= i < j")
        elif self.kind in _INDEXED_ONE and self.indices:
            if self.indices[0] < 1:
                raise AlphabetError(f"{self}: index must be >= 1")
        elif self.kind == "D" or self.kind in MODEL_LETTER_NAMES:
            if self.indices:
                raise AlphabetError(f"{self.kind} takes no indices")
        else:
            raise AlphabetError(f"unknown letter family {self.kind!r}")

    def inverse(self) -> "GeneratorSymbol":
        return GeneratorSymbol(self.kind, self.indices, -self.sign)

    @property
    def base(self) -> "GeneratorSymbol":
        """The positive letter underlying this symbol."""
        return self if self.sign == 1 else GeneratorSymbol(self.kind, self.indices)

    def __str__(self) -> str:
        if self.kind in _INDEXED_TWO:
            token = f"{self.kind}[{self.indices[0]},{self.indices[1]}]"
        elif self.indices:
            token = f"{self.kind}{self.indices[0]}"
        else:
            token = self.kind
        return token + ("^-1" if self.sign == -1 else "")


def sym_s(i: int, sign: int = 1) -> GeneratorSymbol:
    return GeneratorSymbol("s", (i,), sign)


def sym_a(i: int, sign: int = 1) -> GeneratorSymbol:
    return GeneratorSymbol("a", (i,), sign)


def sym_b(i: int, sign: int = 1) -> GeneratorSymbol:
    return GeneratorSymbol("b", (i,), sign)


def sym_C(i: int, j: int, sign: int = 1) -> GeneratorSymbol:
    return GeneratorSymbol("C", (i, j), sign)


def sym_A(i: int, j: int, sign: int = 1) -> GeneratorSymbol:
    return GeneratorSymbol("A", (i, j), sign)


def model_sym(name: str, sign: int = 1) -> GeneratorSymbol:
    if name not in MODEL_LETTER_NAMES:
        raise AlphabetError(f"unknown model letter {name!r}")
    return GeneratorSymbol(name, (), sign)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; the empty word is the identity.

    ``Word`` values are immutable; ``*`` concatenates with free reduction
    and ``~`` (or :meth:`inverse`) inverts.  Construction rejects
    unreduced letter sequences; use :func:`reduce` to build from raw ones.
    """

    letters: tuple[GeneratorSymbol, ...] = ()

    def __post_init__(self):
        for prev, cur in zip(self.letters, self.letters[1:]):
            if prev.kind == cur.kind and prev.indices == cur.indices \
                    and prev.sign == -cur.sign:
                raise DomainError(f"unreduced word: {prev} {cur} cancel")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[GeneratorSymbol]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return reduce(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple(s.inverse() for s in reversed(self.letters)))

    def __invert__(self) -> "Word":
        return self.inverse()

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return self.inverse() ** (-k)
        out = IDENTITY
        for _ in range(k):
            out = out * self
        return out

    def __str__(self) -> str:
        return serialize_word(self)


IDENTITY = Word()


def reduce(raw: Iterable[GeneratorSymbol]) -> Word:
    """Freely reduce a letter sequence (cancel adjacent g g^-1 pairs)."""
    stack: list[GeneratorSymbol] = []
    for s in raw:
        if stack and stack[-1].kind == s.kind and stack[-1].indices == s.indices \
                and stack[-1].sign == -s.sign:
            stack.pop()
        else:
            stack.append(s)
    return Word(tuple(stack))


def word(*symbols: GeneratorSymbol) -> Word:
    return reduce(symbols)


def serialize_word(w: Word) -> str:
    return " ".join(str(s) for s in w.letters)


# ---------------------------------------------------------------------------
# Parsing

_TOKEN_RE = re.compile(
    r"^(?:(?P<br>[CA])\[(?P<i>\d+),(?P<j>\d+)\]"
    r"|(?P<ix>[sab])(?P<k>\d+)"
    r"|(?P<bare>ub|vb|w2|w3|[xyabuvwD]))"
    r"(?P<inv>\^-1)?$"
)


@dataclass(frozen=True)
class GroupContext:
    """Ambient group for parsing and validation: family P or B, a surface
    tag in {"T","K","S2","RP2","D"} and the strand parameter n.

    For the sphere family the parameter n bounds the A[i,j] indices; the
    underlying pure braid group has n+1 strands (see :mod:`sigmabraid.sigma`).
    """

    family: str
    surface: str
    n: int

    def __post_init__(self):
        if self.family not in ("P", "B"):
            raise DomainError(f"family must be P or B, got {self.family!r}")
        if self.surface not in ("T", "K", "S2", "RP2", "D"):
            raise DomainError(f"unknown surface tag {self.surface!r}")
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")

    def __str__(self) -> str:
        return f"{self.family}_{self.n}({self.surface})"


def _context_kinds(ctx: GroupContext) -> tuple[str, ...]:
    if ctx.surface in ("T", "K"):
        return ("a", "b", "C") if ctx.family == "P" else ("a", "b", "C", "s")
    if ctx.surface == "D":
        if ctx.family == "P":
            raise DomainError("pure disc braid words are not supported")
        return ("s", "D")
    if ctx.surface == "S2":
        return ("A",) if ctx.family == "P" else ("s",)
    # RP2
    return ("a",) if ctx.family == "P" else ("s", "a")


def validate_symbol(sym: GeneratorSymbol, ctx: GroupContext) -> None:
    """Check one symbol against the ambient alphabet; raise AlphabetError."""
    kinds = _context_kinds(ctx)
    if sym.kind not in kinds:
        raise AlphabetError(f"{sym}: not a generator of {ctx}")
    n = ctx.n
    if sym.kind == "s":
        if not (1 <= sym.indices[0] <= n - 1):
            raise AlphabetError(f"{sym}: index out of range for {ctx} (need 1..{n-1})")
    elif sym.kind in ("a", "b"):
        if not sym.indices or not (1 <= sym.indices[0] <= n):
            raise AlphabetError(f"{sym}: index out of range for {ctx} (need 1..{n})")
    elif sym.kind in ("C", "A"):
        i, j = sym.indices
        if not (1 <= i < j <= n):
            raise AlphabetError(f"{sym}: indices out of range for {ctx} (need 1<=i<j<={n})")
        if sym.kind == "A" and {i, j} == {1, 2}:
            raise AlphabetError(f"{sym}: A[1,2] is not a coordinate letter")


def parse_symbols(text: str) -> list[GeneratorSymbol]:
    """Tokenize without context validation (model parsers layer on top)."""
    out: list[GeneratorSymbol] = []
    for pos, token in enumerate(text.split()):
        m = _TOKEN_RE.match(token)
        if m is None:
            raise WordSyntaxError(f"cannot parse {token!r}", pos)
        sign = -1 if m.group("inv") else 1
        # index violations surface as AlphabetError, naming the symbol
        if m.group("br"):
            out.append(GeneratorSymbol(m.group("br"), (int(m.group("i")), int(m.group("j"))), sign))
        elif m.group("ix"):
            out.append(GeneratorSymbol(m.group("ix"), (int(m.group("k")),), sign))
        else:
            out.append(GeneratorSymbol(m.group("bare"), (), sign))
    return out


def parse_word(text: str, context: GroupContext) -> Word:
    """Parse a braid word and validate every symbol against ``context``.

    Round-trips with :func:`serialize_word`.  Model words are parsed by
    :func:`sigmabraid.models.parse_model_word` instead.
    """
    symbols = parse_symbols(text)
    for sym in symbols:
        validate_symbol(sym, context)
    return reduce(symbols)


# ---------------------------------------------------------------------------
# Standard word builders

def alpha_beta_word(kind: str, j: int, i: int, n: int) -> Word:
    """The descending product a_j a_{j-1} ... a_i (kind "alpha") or
    b_j ... b_i (kind "beta"); the empty word when i > j."""
    if kind not in ("alpha", "beta"):
        raise DomainError(f"kind must be 'alpha' or 'beta', got {kind!r}")
    if not (1 <= i <= n and 1 <= j <= n):
        raise AlphabetError(f"alpha/beta indices must lie in 1..{n}")
    mk = sym_a if kind == "alpha" else sym_b
    return Word(tuple(mk(k) for k in range(j, i - 1, -1)))


def aij_word(i: int, j: int, n: int) -> Word:
    """The band generator A[i,j] spelled in Artin letters:
    s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1."""
    if not (1 <= i < j <= n):
        raise AlphabetError(f"A[{i},{j}]: need 1 <= i < j <= {n}")
    head = [sym_s(k) for k in range(j - 1, i, -1)]
    tail = [sym_s(k, -1) for k in range(i + 1, j)]
    return reduce(head + [sym_s(i), sym_s(i)] + tail)


def delta_word(n: int) -> Word:
    """The full twist spelled in Artin letters:
    A[1,2] (A[1,3] A[2,3]) ... (A[1,n] ... A[n-1,n])."""
    if n < 2:
        raise AlphabetError("the full twist needs n >= 2")
    out = IDENTITY
    for k in range(2, n + 1):
        for i in range(1, k):
            out = out * aij_word(i, k, n)
    return out


def build_aij_delta(kind: str, i: int | None, j: int | None, n: int) -> Word:
    """Dispatcher for the two Artin-letter spellings above."""
    if kind == "A":
        assert i is not None and j is not None
        return aij_word(i, j, n)
    if kind == "D":
        return delta_word(n)
    raise DomainError(f"kind must be 'A' or 'D', got {kind!r}")


def omega_word(n: int) -> Word:
    """The sphere-coordinate companion of the full twist: the inverse of
    (A[1,3] A[2,3]) (A[1,4] A[2,4] A[3,4]) ... (A[1,n] ... A[n-1,n]),
    a word in the A letters (A[1,2] does not occur)."""
    if n < 3:
        return IDENTITY
    inv: list[GeneratorSymbol] = []
    for k in range(3, n + 1):
        for i in range(1, k):
            if {i, k} != {1, 2}:
                inv.append(sym_A(i, k))
    return Word(tuple(inv)).inverse()
