"""Binary vectors and linear block codes over GF(2).

A :class:`BitVector` stores its coordinates in a Python int with coordinate 1
as the most significant bit, so the integer order of two vectors is the
lexicographic order of their bitstrings (``"011" < "101"``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_LENGTH = 64
MAX_ENUM_DIMENSION = 24


class CodeError(ValueError):
    """Raised for malformed vectors, codes and code files."""


@dataclass(frozen=True, order=True)
class BitVector:
    length: int
    value: int

    def __post_init__(self) -> None:
        if not 1 <= self.length <= MAX_LENGTH:
            raise CodeError(f"length must be in 1..{MAX_LENGTH}, got {self.length}")
        if self.value < 0 or self.value >> self.length:
            raise CodeError(f"value {self.value} does not fit in {self.length} bits")

    @classmethod
    def from_str(cls, text: str) -> BitVector:
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise CodeError(f"not a bitstring: {text!r}")
        return cls(len(text), int(text, 2))

    @classmethod
    def zero(cls, length: int) -> BitVector:
        return cls(length, 0)

    @classmethod
    def unit(cls, length: int, i: int) -> BitVector:
        """The standard basis vector with a single 1 at coordinate ``i`` (1-based)."""
        if not 1 <= i <= length:
            raise CodeError(f"coordinate {i} out of range 1..{length}")
        return cls(length, 1 << (length - i))

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> BitVector:
        value = 0
        for i in support:
            value |= cls.unit(length, i).value
        return cls(length, value)

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b")

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= self.length:
            raise IndexError(i)
        return (self.value >> (self.length - i)) & 1

    def _check(self, other: BitVector) -> None:
        if self.length != other.length:
            raise CodeError(f"length mismatch: {self.length} vs {other.length}")

    def __xor__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.length, self.value ^ other.value)

    __add__ = __xor__

    def __and__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.length, self.value & other.value)

    @property
    def weight(self) -> int:
        return self.value.bit_count()

    def support(self) -> list[int]:
        return [i for i in range(1, self.length + 1) if self[i]]


def weight(v: BitVector) -> int:
    return v.weight


def weight_sum_identity(x1: BitVector, x2: BitVector) -> tuple[int, int, int]:
    """Return ``(wt(x1+x2), wt(x1)+wt(x2), wt(x1&x2))``.

    The three numbers always satisfy ``wt(x1+x2) = wt(x1) + wt(x2) - 2 wt(x1&x2)``;
    this is asserted before returning.
    """
    total = (x1 ^ x2).weight
    parts = x1.weight + x2.weight
    overlap = (x1 & x2).weight
    assert total == parts - 2 * overlap
    return total, parts, overlap


def _leading_bit(x: int) -> int:
    return x.bit_length() - 1


def _rref_rows(rows: Iterable[int]) -> tuple[int, ...]:
    """Fully reduced row echelon form of integer rows, highest pivot first."""
    pivots: dict[int, int] = {}
    for v in rows:
        for p in sorted(pivots, reverse=True):
            if v >> p & 1:
                v ^= pivots[p]
        if not v:
            continue
        p = _leading_bit(v)
        for q, row in pivots.items():
            if row >> p & 1:
                pivots[q] = row ^ v
        pivots[p] = v
    return tuple(pivots[p] for p in sorted(pivots, reverse=True))


@dataclass(frozen=True)
class LinearCode:
    """A linear code held by its canonical (reduced row echelon) basis.

    Two codes are equal exactly when their canonical bases are equal.
    Construct through :func:`rref_basis`, which canonicalizes.
    """

    length: int
    rows: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> list[BitVector]:
        return [BitVector(self.length, r) for r in self.rows]

    def __len__(self) -> int:
        return 1 << self.dimension

    def reduce(self, x: int) -> int:
        """Smallest member of the coset ``x + C`` (as an int)."""
        for r in self.rows:
            if x >> _leading_bit(r) & 1:
                x ^= r
        return x

    def __contains__(self, v: BitVector) -> bool:
        if v.length != self.length:
            return False
        return self.reduce(v.value) == 0

    def codewords(self) -> list[BitVector]:
        return enumerate_codewords(self)

    def __str__(self) -> str:
        if not self.rows:
            return f"<zero code of length {self.length}>"
        return "\n".join(str(b) for b in self.basis)


def rref_basis(vectors: Iterable[BitVector], length: int | None = None) -> LinearCode:
    vectors = list(vectors)
    if length is None:
        if not vectors:
            raise CodeError("cannot infer the length of an empty spanning set")
        length = vectors[0].length
    if not 1 <= length <= MAX_LENGTH:
        raise CodeError(f"length must be in 1..{MAX_LENGTH}, got {length}")
    for v in vectors:
        if v.length != length:
            raise CodeError(f"length mismatch: {v.length} vs {length}")
    return LinearCode(length, _rref_rows(v.value for v in vectors))


def zero_code(length: int) -> LinearCode:
    return rref_basis([], length)


def enumerate_codewords(code: LinearCode) -> list[BitVector]:
    """All codewords in ascending order (the zero word is the smallest)."""
    if code.dimension > MAX_ENUM_DIMENSION:
        raise CodeError(
            f"dimension {code.dimension} exceeds enumeration limit {MAX_ENUM_DIMENSION}"
        )
    words = [0]
    for r in code.rows:
        words += [w ^ r for w in words]
    return [BitVector(code.length, w) for w in sorted(words)]


def d2n_family(n: int) -> LinearCode:
    """The code ``d_{2n}``: ``n-1`` weight-4 rows, each shifted 2 places from the last."""
    if n < 3:
        raise CodeError(f"d_2n needs n >= 3, got {n}")
    length = 2 * n
    rows = [BitVector.from_support(length, range(2 * j + 1, 2 * j + 5)) for j in range(n - 1)]
    return rref_basis(rows, length)


@dataclass(frozen=True)
class CodeClass:
    has_weight_1_or_2: bool
    even: bool
    doubly_even: bool


def has_low_weight_word(code: LinearCode) -> BitVector | None:
    """A codeword of weight 1 or 2 if one exists, by membership tests on all candidates."""
    n = code.length
    for i in range(1, n + 1):
        e = BitVector.unit(n, i)
        if e in code:
            return e
    for i, j in combinations(range(1, n + 1), 2):
        e = BitVector.from_support(n, (i, j))
        if e in code:
            return e
    return None


def _classify_enumerate(code: LinearCode) -> CodeClass:
    words = enumerate_codewords(code)
    weights = [w.weight for w in words]
    return CodeClass(
        has_weight_1_or_2=any(w in (1, 2) for w in weights),
        even=all(w % 2 == 0 for w in weights),
        doubly_even=all(w % 4 == 0 for w in weights),
    )


def _classify_basis(code: LinearCode) -> CodeClass:
    rows = code.rows
    even = all(r.bit_count() % 2 == 0 for r in rows)
    doubly = all(r.bit_count() % 4 == 0 for r in rows) and all(
        (a & b).bit_count() % 2 == 0 for a, b in combinations(rows, 2)
    )
    return CodeClass(
        has_weight_1_or_2=has_low_weight_word(code) is not None,
        even=even,
        doubly_even=doubly,
    )


def classify(code: LinearCode, method: str = "auto") -> CodeClass:
    """Weight classification of a code.

    ``method="enumerate"`` walks all ``2^k`` codewords (``k <= 24``);
    ``method="basis"`` uses the basis rows and their pairwise overlaps;
    ``"auto"`` enumerates when feasible and falls back to the basis test.
    """
    if method == "enumerate" or (method == "auto" and code.dimension <= MAX_ENUM_DIMENSION):
        return _classify_enumerate(code)
    if method in ("basis", "auto"):
        return _classify_basis(code)
    raise ValueError(f"unknown method {method!r}")


def parse_code_file(text: str, length: int | None = None) -> LinearCode:
    """Read a spanning set: one bitstring per line, ``#`` starts a comment."""
    vectors = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            v = BitVector.from_str(line)
        except CodeError as exc:
            raise CodeError(f"line {lineno}: {exc}") from None
        if vectors and v.length != vectors[0].length:
            raise CodeError(f"line {lineno}: length {v.length}, expected {vectors[0].length}")
        vectors.append(v)
    if length is not None and vectors and vectors[0].length != length:
        raise CodeError(f"code has length {vectors[0].length}, expected {length}")
    return rref_basis(vectors, length)


def format_code(code: LinearCode) -> str:
    lines = [f"# length {code.length}, dimension {code.dimension}"]
    lines += [str(b) for b in code.basis]
    return "\n".join(lines) + "\n"


def all_linear_codes(length: int) -> Iterator[LinearCode]:
    """Every linear code of the given length, each exactly once (small lengths only)."""
    seen: set[tuple[int, ...]] = set()
    frontier = [zero_code(length)]
    seen.add(())
    while frontier:
        nxt = []
        for code in frontier:
            yield code
            for x in range(1, 1 << length):
                if code.reduce(x) != x:
                    continue
                bigger = LinearCode(length, _rref_rows(code.rows + (x,)))
                if bigger.rows not in seen:
                    seen.add(bigger.rows)
                    nxt.append(bigger)
        frontier = nxt


def solve_linear_system(
    rows: Sequence[int], rhs: Sequence[int], nvars: int
) -> tuple[bool, int, int | None, list[int]]:
    """Solve ``A x = b`` over GF(2), variables as bits ``0..nvars-1`` of each row.

    Returns ``(consistent, rank, particular, nullspace_basis)``; the particular
    solution is ``None`` when the system is inconsistent.
    """
    pivots: dict[int, tuple[int, int]] = {}
    consistent = True
    for a, b in zip(rows, rhs):
        for p in sorted(pivots, reverse=True):
            if a >> p & 1:
                pa, pb = pivots[p]
                a ^= pa
                b ^= pb
        if not a:
            if b:
                consistent = False
            continue
        p = _leading_bit(a)
        for q, (qa, qb) in list(pivots.items()):
            if qa >> p & 1:
                pivots[q] = (qa ^ a, qb ^ b)
        pivots[p] = (a, b)
    rank = len(pivots)
    if not consistent:
        particular = None
    else:
        particular = 0
        for p, (_, b) in pivots.items():
            if b:
                particular |= 1 << p
    nullspace = []
    for f in range(nvars):
        if f in pivots:
            continue
        vec = 1 << f
        for p, (a, _) in pivots.items():
            if a >> f & 1:
                vec |= 1 << p
        nullspace.append(vec)
    return consistent, rank, particular, nullspace
