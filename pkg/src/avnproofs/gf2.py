"""Bit vectors and linear algebra over GF(2).

Vectors have an explicit length that is checked on every binary operation;
the bits themselves are packed into a single int (the package is capped at
word-sized problems, so this keeps the hot 2^n sweeps allocation-free).
Parity systems are solved by Gaussian elimination with deterministic
pivoting, so equal inputs always produce equal solutions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import LengthMismatchError

#: Hard cap on vector length (one machine word).
MAX_BITS = 64


@dataclass(frozen=True, order=True)
class Bitvec:
    """Fixed-length GF(2) vector, bit ``i`` stored at position ``i`` of ``bits``."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if not 0 <= self.n <= MAX_BITS:
            raise ValueError(f"Bitvec length must be in 0..{MAX_BITS}, got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(
                f"bits 0x{self.bits:x} do not fit in {self.n} positions"
            )

    @classmethod
    def from_indices(cls, n: int, indices) -> "Bitvec":
        """Vector of length ``n`` with ones at the given 0-based positions."""
        bits = 0
        for i in indices:
            if not 0 <= i < n:
                raise ValueError(f"index {i} out of range for length {n}")
            bits |= 1 << i
        return cls(n, bits)

    def _check(self, other: "Bitvec") -> None:
        if not isinstance(other, Bitvec):
            raise TypeError(f"expected Bitvec, got {type(other).__name__}")
        if other.n != self.n:
            raise LengthMismatchError(f"length mismatch: {self.n} vs {other.n}")

    def __xor__(self, other: "Bitvec") -> "Bitvec":
        self._check(other)
        return Bitvec(self.n, self.bits ^ other.bits)

    def __and__(self, other: "Bitvec") -> "Bitvec":
        self._check(other)
        return Bitvec(self.n, self.bits & other.bits)

    def __or__(self, other: "Bitvec") -> "Bitvec":
        self._check(other)
        return Bitvec(self.n, self.bits | other.bits)

    def test(self, i: int) -> bool:
        if not 0 <= i < self.n:
            raise ValueError(f"index {i} out of range for length {self.n}")
        return bool((self.bits >> i) & 1)

    def count(self) -> int:
        return self.bits.bit_count()

    def parity(self) -> int:
        return self.bits.bit_count() & 1

    def indices(self) -> tuple:
        """0-based positions of the set bits, ascending."""
        return tuple(i for i in range(self.n) if (self.bits >> i) & 1)

    def indices_1based(self) -> tuple:
        """Set bits as 1-based labels (qubit/generator numbering at interfaces)."""
        return tuple(i + 1 for i in range(self.n) if (self.bits >> i) & 1)

    def is_zero(self) -> bool:
        return self.bits == 0

    def __str__(self):
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))


@dataclass
class Gf2System:
    """A list of parity equations ``coeffs . x = rhs`` over GF(2)."""

    num_vars: int
    rows: list = field(default_factory=list)

    def add_row(self, coeffs, rhs: int) -> None:
        """Append one equation; ``coeffs`` is a Bitvec or a raw bit mask."""
        if isinstance(coeffs, Bitvec):
            if coeffs.n != self.num_vars:
                raise LengthMismatchError(
                    f"row length {coeffs.n} != num_vars {self.num_vars}"
                )
        else:
            coeffs = Bitvec(self.num_vars, coeffs)
        self.rows.append((coeffs, rhs & 1))


def gf2_solve_explain(system: Gf2System):
    """Solve the system, reporting why it is infeasible when it is.

    Returns ``(solution, None)`` for a consistent system and
    ``(None, certificate)`` otherwise, where ``certificate`` is a tuple of
    row indices whose GF(2) sum is the contradiction 0 = 1.  The solution is
    the unique reduced-echelon one with all free variables set to zero.
    """
    n = system.num_vars
    # Each working row: (coefficient mask, rhs bit, provenance mask over input rows).
    pivot_rows = {}  # pivot column -> (mask, rhs, provenance)
    for k, (coeffs, rhs) in enumerate(system.rows):
        mask, b, prov = coeffs.bits, rhs, 1 << k
        while mask:
            col = (mask & -mask).bit_length() - 1
            piv = pivot_rows.get(col)
            if piv is None:
                pivot_rows[col] = (mask, b, prov)
                mask = 0
                break
            mask ^= piv[0]
            b ^= piv[1]
            prov ^= piv[2]
        else:
            if b:
                witness = tuple(i for i in range(len(system.rows)) if (prov >> i) & 1)
                return None, witness
    # Back-substitute in decreasing column order; free variables stay 0.
    x = 0
    for col in sorted(pivot_rows, reverse=True):
        mask, b, _ = pivot_rows[col]
        # x still has bit `col` clear, so the pivot column contributes nothing.
        if b ^ ((mask & x).bit_count() & 1):
            x |= 1 << col
    return Bitvec(n, x), None


def gf2_solve(system: Gf2System):
    """Any solution of the system (free variables zero), or None if infeasible."""
    solution, _ = gf2_solve_explain(system)
    return solution
