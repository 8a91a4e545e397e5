"""The finite quotients H(n,r,s) = <t, a | t^-1 a t = a^n, t^r = 1, a^s = 1>.

For ``(r, s)`` in Omega(n) the group is the split extension of ``Z_s = <a>`` by
``Z_r = <t>`` with ``t`` acting as multiplication by ``n``, so every element is
``t^i a^j`` with ``0 <= i < r``, ``0 <= j < s`` and the product is

    (i1, j1) (i2, j2) = (i1 + i2 mod r, j1 n^i2 + j2 mod s).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .bs1n import Bs1nElement, Bs1nGroup
from .errors import BoundExceeded, DomainError, PreconditionError
from .kernels import kernel
from .numtheory import PrimeSet, in_omega, iter_omega, next_p_number
from .words import GroupWord

__all__ = ["HGroup", "HElement", "natural_hom", "find_separating_quotient", "BRUTEFORCE_BOUND"]

BRUTEFORCE_BOUND = 10**6


@dataclass(frozen=True, order=True)
class HElement:
    """``t^i a^j`` in some H(n,r,s)."""

    i: int
    j: int

    def __str__(self) -> str:
        return str(GroupWord([("t", self.i), ("a", self.j)])) or "1"


@dataclass(frozen=True)
class HGroup:
    n: int
    r: int
    s: int

    def __post_init__(self) -> None:
        if self.n == 0:
            raise DomainError("n must be nonzero")
        if not in_omega(self.n, self.r, self.s):
            raise DomainError(f"({self.r}, {self.s}) is not in Omega({self.n}): need n^r = 1 mod s")

    @property
    def order(self) -> int:
        return self.r * self.s

    @property
    def identity(self) -> HElement:
        return HElement(0, 0)

    @property
    def _n(self) -> int:
        return self.n % self.s

    def element(self, i: int, j: int) -> HElement:
        return HElement(i % self.r, j % self.s)

    def elements(self) -> Iterator[HElement]:
        for i in range(self.r):
            for j in range(self.s):
                yield HElement(i, j)

    def _npow(self, e: int) -> int:
        # n^e mod s for any integer e; n^r = 1 makes exponents periodic mod r
        return pow(self.n, e % self.r, self.s)

    def multiply(self, x: HElement, y: HElement) -> HElement:
        return HElement((x.i + y.i) % self.r, (x.j * self._npow(y.i) + y.j) % self.s)

    def inverse(self, x: HElement) -> HElement:
        # (t^i a^j)^-1 = a^-j t^-i = t^-i a^(-j n^-i)
        return HElement(-x.i % self.r, -x.j * self._npow(-x.i) % self.s)

    def power(self, x: HElement, e: int) -> HElement:
        if e < 0:
            x, e = self.inverse(x), -e
        result, base = self.identity, x
        while e:
            if e & 1:
                result = self.multiply(result, base)
            base = self.multiply(base, base)
            e >>= 1
        return result

    def conjugate(self, x: HElement, c: HElement) -> HElement:
        return self.multiply(self.inverse(c), self.multiply(x, c))

    def natural_hom(self, x: Bs1nElement) -> HElement:
        """Image of ``t^u a^w t^-v`` under BS(1,n) -> H(n,r,s)."""
        t, a = self.element(1, 0), self.element(0, 1)
        out = self.multiply(self.power(t, x.u), self.power(a, x.w))
        return self.multiply(out, self.power(t, -x.v))

    def from_word(self, word: GroupWord | str) -> HElement:
        return self.natural_hom(Bs1nGroup(self.n).from_word(word))

    def are_conjugate_criterion(self, x: HElement, y: HElement) -> bool:
        """Decide conjugacy arithmetically.

        The ``t``-residues must agree since ``<a>`` is normal with cyclic
        quotient.  Then with ``d = gcd(n^i - 1, s)`` the elements are conjugate
        iff ``d | j1 n^x - j2 n^y`` for some ``x, y``; as ``n`` is a unit
        modulo ``d`` this is ``j1 == j2 n^k (mod d)`` for some ``0 <= k < r``.
        """
        if x.i != y.i:
            return False
        d = math.gcd((self._npow(x.i) - 1) % self.s, self.s)
        target, cur, step = x.j % d, y.j % d, self.n % d
        for _ in range(self.r):
            if cur == target:
                return True
            cur = cur * step % d
        return False

    def are_conjugate_bruteforce(self, x: HElement, y: HElement, bound: int = BRUTEFORCE_BOUND) -> bool:
        """Decide conjugacy by trying every one of the ``r*s`` conjugators."""
        if self.order > bound:
            raise BoundExceeded(f"|H| = {self.order} exceeds the brute-force bound {bound}")
        return bool(kernel.conjugate_bruteforce(self._n, self.r, self.s, x.i, x.j, y.i, y.j))

    def conjugacy_class_labels(self, bound: int = BRUTEFORCE_BOUND) -> list[int]:
        """Brute-force class label of every element, indexed by ``i*s + j``."""
        if self.order > bound:
            raise BoundExceeded(f"|H| = {self.order} exceeds the brute-force bound {bound}")
        return list(kernel.bruteforce_class_labels(self._n, self.r, self.s))

    def __str__(self) -> str:
        return f"H({self.n},{self.r},{self.s})"


def natural_hom(g: Bs1nGroup, G: HGroup, x: Bs1nElement) -> HElement:
    if g.n != G.n:
        raise PreconditionError(f"BS(1,{g.n}) does not map naturally onto {G}")
    return G.natural_hom(x)


def find_separating_quotient(
    g: Bs1nGroup, x: Bs1nElement, y: Bs1nElement, p_set: PrimeSet, s_max: int
) -> HGroup | None:
    """Smallest-``s`` quotient H(n,r,s) with ``(r, s)`` in Omega(n, P) where x, y stay non-conjugate.

    Different t-exponent sums are separated by the cyclic group H(n,r,1) with
    ``r`` the least P-number exceeding ``|k1| + |k2|``.  Otherwise moduli are
    tried in ascending order with ``r = ord_s(n)``; for equal t-exponents the
    verdict in H(n,r,s) does not depend on which admissible ``r`` is used.
    Returns None when nothing up to ``s_max`` works.
    """
    k1, k2 = g.t_exponent(x), g.t_exponent(y)
    if k1 != k2:
        return HGroup(g.n, next_p_number(abs(k1) + abs(k2), p_set), 1)
    for r, s in iter_omega(g.n, p_set, s_max):
        G = HGroup(g.n, r, s)
        if not G.are_conjugate_criterion(G.natural_hom(x), G.natural_hom(y)):
            return G
    return None
