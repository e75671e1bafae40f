"""Exact arithmetic in Z_p (p prime) and in GF(17^2).

Elements are plain integer codes 0..order-1.  For GF(17^2) the element
a*z + b with a, b in Z_17 is coded as 17*a + b, and multiplication reduces
by the fixed irreducible polynomial z^2 + 3z + 1, i.e. z^2 = -3z - 1.

These are the two ring families in which base blocks are developed: the
affine maps x -> omega^e * x + d act on element codes, so the codes double
as design point names.
"""

from __future__ import annotations

from dataclasses import dataclass


class RingError(ValueError):
    pass


class InvalidElementError(RingError):
    """An integer code lies outside 0..order-1."""


class NotASubgroupError(RingError):
    """The signed powers of omega do not form a subgroup of the stated size."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Ring:
    """A prime field Z_p or the fixed quadratic extension GF(17^2)."""

    kind: str  # "prime" or "gf289"
    order: int

    @staticmethod
    def prime_field(p: int) -> "Ring":
        if not _is_prime(p):
            raise RingError(f"{p} is not prime")
        return Ring("prime", p)

    @staticmethod
    def gf289() -> "Ring":
        # z^2 + 3z + 1 must have no root in Z_17; exhaust all candidates.
        for r in range(17):
            if (r * r + 3 * r + 1) % 17 == 0:
                raise RingError("z^2 + 3z + 1 is reducible over Z_17")
        return Ring("gf289", 289)

    def _check(self, x: int) -> int:
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < self.order:
            raise InvalidElementError(f"{x!r} is not an element code of {self}")
        return x

    def elements(self) -> range:
        return range(self.order)

    def add(self, x: int, y: int) -> int:
        self._check(x), self._check(y)
        if self.kind == "prime":
            return (x + y) % self.order
        a1, b1 = divmod(x, 17)
        a2, b2 = divmod(y, 17)
        return 17 * ((a1 + a2) % 17) + (b1 + b2) % 17

    def neg(self, x: int) -> int:
        self._check(x)
        if self.kind == "prime":
            return -x % self.order
        a, b = divmod(x, 17)
        return 17 * (-a % 17) + (-b % 17)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        self._check(x), self._check(y)
        if self.kind == "prime":
            return (x * y) % self.order
        a1, b1 = divmod(x, 17)
        a2, b2 = divmod(y, 17)
        zz = a1 * a2  # coefficient of z^2; reduce by z^2 = -3z - 1
        a = (a1 * b2 + a2 * b1 - 3 * zz) % 17
        b = (b1 * b2 - zz) % 17
        return 17 * a + b

    def pow(self, x: int, e: int) -> int:
        """Repeated-squaring power; pow(x, 0) = 1 for every x."""
        self._check(x)
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        result = 1
        base = x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def __str__(self) -> str:
        return f"Z_{self.order}" if self.kind == "prime" else "GF(289)"


def signed_power_subgroup(ring: Ring, omega: int, exponents: int) -> frozenset[int]:
    """The set H = {omega^e, -omega^e : 0 <= e < exponents}, verified to be
    a multiplicatively closed set of exactly 2*exponents nonzero elements.

    A finite set closed under the group operation inside the unit group is
    a subgroup, so closure plus the size check certifies H <= units.
    Raises NotASubgroupError otherwise (an unusable omega).
    """
    if exponents < 1:
        raise ValueError("exponents must be at least 1")
    ring._check(omega)
    members: set[int] = set()
    for e in range(exponents):
        p = ring.pow(omega, e)
        members.add(p)
        members.add(ring.neg(p))
    if 0 in members or len(members) != 2 * exponents:
        raise NotASubgroupError(
            f"signed powers of {omega} give {len(members)} elements, want {2 * exponents}"
        )
    for x in members:
        for y in members:
            if ring.mul(x, y) not in members:
                raise NotASubgroupError(f"signed powers of {omega} are not closed")
    return frozenset(members)


def unit_group_coset_partition(
    ring: Ring, omega: int, exponents: int
) -> list[tuple[int, ...]]:
    """Partition the nonzero elements into cosets of H = {+-omega^e : e < exponents}.

    Cosets are returned sorted ascending internally and ordered by their
    smallest member, so the partition is deterministic.
    """
    h = signed_power_subgroup(ring, omega, exponents)
    seen: set[int] = set()
    cosets: list[tuple[int, ...]] = []
    for x in range(1, ring.order):
        if x in seen:
            continue
        coset = tuple(sorted(ring.mul(x, s) for s in h))
        seen.update(coset)
        cosets.append(coset)
    return cosets
