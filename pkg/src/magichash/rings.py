"""Exact arithmetic in GF(p) and the local rings Z/p^e, with division-free determinants."""

from __future__ import annotations

# Products of two canonical residues must fit in double-width exact integers.
MAX_MODULUS = 1 << 62


def _is_prime(p: int) -> bool:
    """Trial-division primality check."""
    if p < 2:
        return False
    for q in (2, 3):
        if p % q == 0:
            return p == q
    d = 5
    while d * d <= p:
        if p % d == 0 or p % (d + 2) == 0:
            return False
        d += 6
    return True


class Ring:
    """Residues modulo p^e: the prime field GF(p) when e == 1, else the local ring Z/p^e.

    Units are exactly the residues not divisible by p. All operations return
    canonical residues in [0, p^e), so equality is structural.
    """

    __slots__ = ("p", "e", "modulus")

    def __init__(self, p: int, e: int = 1):
        if e < 1:
            raise ValueError(f"exponent must be >= 1, got {e}")
        if not _is_prime(p):
            raise ValueError(f"ring base must be prime, got {p}")
        modulus = p**e
        if modulus > MAX_MODULUS:
            raise ValueError(f"{p}^{e} exceeds the 2^62 modulus cap")
        self.p = p
        self.e = e
        self.modulus = modulus

    @property
    def is_field(self) -> bool:
        return self.e == 1

    @property
    def is_local(self) -> bool:
        # Z/p^e has the unique maximal ideal (p); fields count as local too.
        return True

    @property
    def zero(self) -> "RingElement":
        return RingElement(self, 0)

    @property
    def one(self) -> "RingElement":
        return RingElement(self, 1)

    def __call__(self, value: int) -> "RingElement":
        return RingElement(self, value)

    def elements(self):
        """All residues, in canonical order."""
        for v in range(self.modulus):
            yield RingElement(self, v)

    def det(self, matrix) -> "RingElement":
        """Determinant of a square matrix of elements of this ring."""
        rows = []
        for row in matrix:
            vals = []
            for entry in row:
                if not isinstance(entry, RingElement) or entry.ring != self:
                    raise ValueError("matrix entries must all belong to this ring")
                vals.append(entry.value)
            rows.append(vals)
        return RingElement(self, det_values(rows, self.modulus))

    def descriptor(self) -> str:
        return str(self.p) if self.e == 1 else f"{self.p}^{self.e}"

    @classmethod
    def from_descriptor(cls, text: str) -> "Ring":
        """Parse 'p' or 'p^e', e.g. '5' for GF(5) and '2^8' for Z/256."""
        parts = text.strip().split("^")
        if len(parts) > 2 or not all(part.isdigit() and part for part in parts):
            raise ValueError(f"malformed ring descriptor {text!r}, expected 'p' or 'p^e'")
        p = int(parts[0])
        e = int(parts[1]) if len(parts) == 2 else 1
        return cls(p, e)

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self) -> int:
        return hash((self.p, self.e))

    def __repr__(self) -> str:
        return f"GF({self.p})" if self.e == 1 else f"Z/{self.p}^{self.e}"


class RingElement:
    """A canonical residue paired with its ring; immutable value semantics."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: Ring, value: int):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "value", value % ring.modulus)

    def __setattr__(self, name, _value):
        raise AttributeError(f"RingElement is immutable, cannot set {name}")

    def _coerce(self, other) -> int:
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise ValueError(f"cannot mix elements of {self.ring} and {other.ring}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.value - v)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, v - self.value)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.value * v)

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, -self.value)

    def __pow__(self, exponent: int):
        return RingElement(self.ring, pow(self.value, exponent, self.ring.modulus))

    def is_unit(self) -> bool:
        return self.value % self.ring.p != 0

    def inv(self) -> "RingElement":
        if not self.is_unit():
            raise ValueError(f"{self.value} is not a unit in {self.ring}")
        return RingElement(self.ring, pow(self.value, -1, self.ring.modulus))

    def __eq__(self, other) -> bool:
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.ring.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.ring!r}({self.value})"


def det_values(rows: list, modulus: int) -> int:
    """Determinant of a square integer matrix, reduced modulo `modulus`.

    Division-free with respect to the ring: cofactor recursion for small
    matrices, fraction-free Bareiss elimination over the exact integers for
    larger ones. Gaussian elimination is avoided because a local ring need
    not contain unit pivots.
    """
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1 % modulus
    if n <= 6:
        return _det_cofactor(rows, modulus)
    return _det_bareiss(rows) % modulus


def _det_cofactor(rows, modulus: int) -> int:
    n = len(rows)
    if n == 1:
        return rows[0][0] % modulus
    if n == 2:
        return (rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]) % modulus
    total = 0
    for j, top in enumerate(rows[0]):
        if top % modulus == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = top * _det_cofactor(minor, modulus)
        total += -term if j & 1 else term
    return total % modulus


def _det_bareiss(rows) -> int:
    a = [list(row) for row in rows]
    n = len(a)
    sign = 1
    prev = 1
    for i in range(n - 1):
        if a[i][i] == 0:
            for r in range(i + 1, n):
                if a[r][i] != 0:
                    a[i], a[r] = a[r], a[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return sign * a[n - 1][n - 1]
