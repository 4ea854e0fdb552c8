"""n-qubit Pauli operators in symplectic form with exact phase tracking.

An operator is ``i**phase`` times a tensor product of per-qubit letters; the
letter on qubit ``q`` is read off the (x, z) bit pair at position ``q - 1``:
(0,0) identity, (1,0) X, (0,1) Z, (1,1) the Hermitian Y.  Writing each letter
as ``i**(x*z) * X**x * Z**z`` makes products pure integer arithmetic, so signs
of stabilizing operators are exact, never floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LengthMismatchError, NonHermitianSignError
from .gf2 import Bitvec

_LETTERS = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}


@dataclass(frozen=True)
class PauliOperator:
    """``i**phase * P_1 otimes ... otimes P_n`` with the bits of qubit q at position q-1."""

    x: Bitvec
    z: Bitvec
    phase: int = 0  # exponent of i, mod 4

    def __post_init__(self):
        if self.x.n != self.z.n:
            raise LengthMismatchError(
                f"x length {self.x.n} != z length {self.z.n}"
            )
        object.__setattr__(self, "phase", self.phase % 4)

    @property
    def n(self) -> int:
        return self.x.n

    def letter(self, qubit: int) -> str:
        """Single-qubit letter at 1-based position: one of I, X, Y, Z."""
        if not 1 <= qubit <= self.n:
            raise ValueError(f"qubit {qubit} out of range 1..{self.n}")
        q = qubit - 1
        return _LETTERS[(self.x.bits >> q) & 1, (self.z.bits >> q) & 1]

    def support(self) -> tuple:
        """1-based qubits where the operator is not the identity."""
        both = self.x.bits | self.z.bits
        return tuple(q + 1 for q in range(self.n) if (both >> q) & 1)

    def is_identity_pauli(self) -> bool:
        return self.x.bits == 0 and self.z.bits == 0

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        return pauli_multiply(self, other)

    def __str__(self):
        return format_pauli(self)


def identity(n: int) -> PauliOperator:
    return PauliOperator(Bitvec(n), Bitvec(n))


def single_letter(n: int, qubit: int, letter: str) -> PauliOperator:
    """The operator acting as ``letter`` on one 1-based qubit, identity elsewhere."""
    if letter not in ("I", "X", "Y", "Z"):
        raise ValueError(f"unknown Pauli letter {letter!r}")
    bit = 1 << (qubit - 1)
    x = bit if letter in ("X", "Y") else 0
    z = bit if letter in ("Y", "Z") else 0
    return PauliOperator(Bitvec(n, x), Bitvec(n, z))


def pauli_multiply(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    """Exact operator product p*q, phases included.

    Per qubit, with letters written as i**(x*z) X**x Z**z and commuting the
    inner Z past the inner X, the accumulated exponent of i is
    ``x1*z1 + x2*z2 + 2*z1*x2 - x3*z3`` where (x3, z3) is the XOR result;
    summing over qubits is three popcounts.
    """
    if p.n != q.n:
        raise LengthMismatchError(f"qubit count mismatch: {p.n} vs {q.n}")
    px, pz, qx, qz = p.x.bits, p.z.bits, q.x.bits, q.z.bits
    x3 = px ^ qx
    z3 = pz ^ qz
    phase = (
        p.phase
        + q.phase
        + (px & pz).bit_count()
        + (qx & qz).bit_count()
        + 2 * (pz & qx).bit_count()
        - (x3 & z3).bit_count()
    ) % 4
    return PauliOperator(Bitvec(p.n, x3), Bitvec(p.n, z3), phase)


def sign_of(p: PauliOperator) -> int:
    """+1 or -1 for a Hermitian-signed operator; phase +-i is an upstream bug."""
    if p.phase == 0:
        return 1
    if p.phase == 2:
        return -1
    raise NonHermitianSignError(f"operator has phase exponent {p.phase}, not 0 or 2")


def format_pauli(p: PauliOperator) -> str:
    """Render like ``-X1 X2 X3 Z4`` (identity letters omitted, no leading +)."""
    sign = "-" if sign_of(p) < 0 else ""
    parts = [f"{p.letter(q)}{q}" for q in p.support()]
    if not parts:
        return sign + "1"
    return sign + " ".join(parts)
