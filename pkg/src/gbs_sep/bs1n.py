"""Word arithmetic, normal forms and conjugacy in BS(1,n) = <a, t | t^-1 a t = a^n>.

Every element has a unique canonical triple ``(u, w, v)`` denoting
``t^u a^w t^-v`` with ``u, v >= 0`` and ``u == 0 or v == 0 or n does not
divide w``.  Products are computed with the rewriting rules
``a^k t = t a^(n k)`` and ``t^-1 a^k = a^(n k) t^-1``.

Conjugacy is decided by reducing both elements to standard conjugates
``t^k a^m`` (conjugating by ``t^v``), comparing the t-exponent sums, and for
``u = k >= 0`` asking whether ``n^u - 1`` divides ``m1 n^x - m2 n^y`` for some
``x, y >= 0``.  When ``M = |n^u - 1| > 0`` the powers of ``n`` are periodic
modulo ``M`` with period ``ord_M(n)``, and since ``n`` is invertible modulo
``M`` it suffices to test ``m1 == m2 n^j (mod M)`` for ``0 <= j < ord_M(n)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ParseError
from .numtheory import multiplicative_order
from .words import GroupWord

__all__ = ["Bs1nGroup", "Bs1nElement", "StandardConjugate"]


@dataclass(frozen=True, order=True)
class Bs1nElement:
    """The element ``t^u a^w t^-v``; obtain canonical instances from :class:`Bs1nGroup`."""

    u: int
    w: int
    v: int

    def __post_init__(self) -> None:
        if self.u < 0 or self.v < 0:
            raise DomainError(f"t-exponents must be non-negative, got u={self.u}, v={self.v}")

    def __str__(self) -> str:
        return str(self.word()) or "1"

    def word(self) -> GroupWord:
        return GroupWord([("t", self.u), ("a", self.w), ("t", -self.v)])


@dataclass(frozen=True)
class StandardConjugate:
    """The conjugacy representative ``t^k a^m``."""

    k: int
    m: int


@dataclass(frozen=True)
class Bs1nGroup:
    n: int

    def __post_init__(self) -> None:
        if self.n == 0:
            raise DomainError("BS(1,n) needs n != 0")

    @property
    def identity(self) -> Bs1nElement:
        return Bs1nElement(0, 0, 0)

    def element(self, u: int, w: int, v: int) -> Bs1nElement:
        """Canonical form of ``t^u a^w t^-v`` (``u, v >= 0``)."""
        n = self.n
        c = min(u, v)
        if c > 0:
            if w == 0:
                u, v = u - c, v - c
            elif abs(n) == 1:
                # t a^w t^-1 = a^(w/n) and 1/n == n here
                u, v, w = u - c, v - c, w * n**c
            else:
                while c > 0 and w % n == 0:
                    w //= n
                    u, v, c = u - 1, v - 1, c - 1
        return Bs1nElement(u, w, v)

    def is_canonical(self, x: Bs1nElement) -> bool:
        return x.u == 0 or x.v == 0 or (abs(self.n) != 1 and x.w % self.n != 0)

    def t_power(self, e: int) -> Bs1nElement:
        return Bs1nElement(e, 0, 0) if e >= 0 else Bs1nElement(0, 0, -e)

    def a_power(self, e: int) -> Bs1nElement:
        return Bs1nElement(0, e, 0)

    def standard_element(self, k: int, m: int) -> Bs1nElement:
        """Canonical triple of ``t^k a^m`` for any integer ``k``."""
        if k >= 0:
            return Bs1nElement(k, m, 0)
        return self.element(0, m * self.n ** (-k), -k)

    def from_word(self, word: GroupWord | str) -> Bs1nElement:
        if isinstance(word, str):
            word = GroupWord.parse(word, ("t", "a"))
        x = self.identity
        for sym, exp in word:
            if sym == "t":
                x = self.multiply(x, self.t_power(exp))
            elif sym == "a":
                x = self.multiply(x, self.a_power(exp))
            else:
                raise ParseError(f"unknown generator {sym!r}; BS(1,n) words use t and a")
        return x

    def multiply(self, x: Bs1nElement, y: Bs1nElement) -> Bs1nElement:
        n = self.n
        d = y.u - x.v
        if d >= 0:
            # a^w1 t^d = t^d a^(w1 n^d)
            return self.element(x.u + d, x.w * n**d + y.w, y.v)
        # t^-e a^w2 = a^(w2 n^e) t^-e
        return self.element(x.u, x.w + y.w * n ** (-d), y.v - d)

    def inverse(self, x: Bs1nElement) -> Bs1nElement:
        return Bs1nElement(x.v, -x.w, x.u)

    def power(self, x: Bs1nElement, e: int) -> Bs1nElement:
        if e < 0:
            x, e = self.inverse(x), -e
        result, base = self.identity, x
        while e:
            if e & 1:
                result = self.multiply(result, base)
            base = self.multiply(base, base)
            e >>= 1
        return result

    def conjugate(self, x: Bs1nElement, c: Bs1nElement) -> Bs1nElement:
        """``c^-1 x c``."""
        return self.multiply(self.inverse(c), self.multiply(x, c))

    def t_exponent(self, x: Bs1nElement) -> int:
        return x.u - x.v

    def to_standard_conjugate(self, x: Bs1nElement) -> StandardConjugate:
        # t^-v (t^u a^w t^-v) t^v = t^(u-v) a^w
        return StandardConjugate(x.u - x.v, x.w)

    def _nonneg_standard(self, x: Bs1nElement) -> tuple[int, int]:
        k, m = x.u - x.v, x.w
        if k < 0:
            # (t^k a^m)^-1 = t^-k a^(-m n^-k)
            return -k, -m * self.n ** (-k)
        return k, m

    def _solve(self, u: int, m1: int, m2: int) -> tuple[int, int] | None:
        """Some ``(x, y)`` with ``n^u - 1 | m1 n^x - m2 n^y``, or None."""
        n = self.n
        modulus = abs(n**u - 1)
        if modulus == 0:
            if m1 == m2:
                return 0, 0
            if m1 == 0 or m2 == 0:
                return None
            if abs(n) == 1:
                return (1, 0) if n == -1 and m1 == -m2 else None
            if m1 % m2 == 0:
                j = _log_exact(n, m1 // m2)
                return None if j is None else (0, j)
            if m2 % m1 == 0:
                j = _log_exact(n, m2 // m1)
                return None if j is None else (j, 0)
            return None
        period = multiplicative_order(n, modulus)
        target = m1 % modulus
        cur = m2 % modulus
        step = n % modulus
        for j in range(period):
            if cur == target:
                return 0, j
            cur = cur * step % modulus
        return None

    def are_conjugate(self, x: Bs1nElement, y: Bs1nElement) -> bool:
        if self.t_exponent(x) != self.t_exponent(y):
            return False
        u, m1 = self._nonneg_standard(x)
        _, m2 = self._nonneg_standard(y)
        return self._solve(u, m1, m2) is not None

    def find_conjugator(self, x: Bs1nElement, y: Bs1nElement) -> Bs1nElement | None:
        """Some ``c`` with ``c^-1 x c == y``, or None when x and y are not conjugate."""
        if self.t_exponent(x) != self.t_exponent(y):
            return None
        u, m1 = self._nonneg_standard(x)
        _, m2 = self._nonneg_standard(y)
        sol = self._solve(u, m1, m2)
        if sol is None:
            return None
        ex, ey = sol
        big = self.n**u - 1
        z = 0 if big == 0 else (m1 * self.n**ex - m2 * self.n**ey) // big
        core = self.element(ex, z, ey)
        # conjugating by t^v standardizes; inversion (k < 0) keeps conjugators
        c = self.multiply(self.t_power(x.v), core)
        return self.multiply(c, self.t_power(-y.v))


def _log_exact(n: int, q: int) -> int | None:
    """``j >= 0`` with ``n**j == q``, for ``|n| >= 2``."""
    j, p = 0, 1
    while abs(p) < abs(q):
        p *= n
        j += 1
    return j if p == q else None
