"""Exact integer number theory: prime sets, factorization, multiplicative orders.

Everything here works on unbounded Python integers. The sets of admissible
quotient parameters are

* ``Omega(n)``      pairs ``(r, s)`` with ``r, s > 0`` and ``n**r == 1 (mod s)``;
* ``Omega(n, P)``   the pairs of ``Omega(n)`` where both ``r`` and ``s`` are P-numbers;
* ``Xi(n, P)``      the moduli ``s`` occurring in some pair of ``Omega(n, P)``.

``Xi`` membership is decided without searching for ``r``: every ``r`` with
``n**r == 1 (mod s)`` is a multiple of the multiplicative order of ``n``
modulo ``s``, so a P-number ``r`` exists exactly when that order is itself a
P-number (and ``s`` is a P-number coprime to ``n``).
"""

from __future__ import annotations

import math
import random
import re
from bisect import bisect_right
from dataclasses import dataclass
from functools import cache
from typing import Iterable, Iterator, NamedTuple

from .errors import DomainError, ParseError

__all__ = [
    "PrimeSet",
    "OmegaPair",
    "divides",
    "is_prime",
    "primes_up_to",
    "factorize",
    "divisors",
    "is_p_number",
    "multiplicative_order",
    "in_omega",
    "in_xi",
    "iter_omega",
    "enumerate_omega",
    "next_p_number",
]

TRIAL_DIVISION_LIMIT = 10**6

# deterministic Miller-Rabin witnesses for n < 3.3 * 10**24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981


def divides(d: int, x: int) -> bool:
    """``d | x`` in the sense ``x = d*z`` for some integer ``z``; so ``0 | x`` iff ``x == 0``."""
    if d == 0:
        return x == 0
    return x % d == 0


@cache
def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return tuple(i for i, f in enumerate(flags) if f)


def primes_up_to(limit: int) -> tuple[int, ...]:
    """All primes ``p <= limit``, ascending."""
    if limit < 2:
        return ()
    if limit <= TRIAL_DIVISION_LIMIT:
        table = _sieve(TRIAL_DIVISION_LIMIT)
        return table[: bisect_right(table, limit)]
    return _sieve(limit)


def _miller_rabin(n: int, bases: Iterable[int]) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        a %= n
        if a in (0, 1, n - 1):
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Primality test; exact below 3.3e24, Miller-Rabin with extra random bases above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < 43 * 43:
        return True
    if n < _MR_DETERMINISTIC_LIMIT:
        return _miller_rabin(n, _MR_BASES)
    rng = random.Random(n)
    extra = [rng.randrange(2, n - 1) for _ in range(16)]
    return _miller_rabin(n, _MR_BASES + tuple(extra))


def _pollard_brent(n: int, rng: random.Random) -> int:
    """Return a non-trivial factor of the odd composite ``n``."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split_large(n: int, out: dict[int, int], rng: random.Random) -> None:
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack += [root, root]
            continue
        f = _pollard_brent(m, rng)
        stack += [f, m // f]


@cache
def _factorize_cached(x: int) -> tuple[tuple[int, int], ...]:
    out: dict[int, int] = {}
    rem = x
    for p in _sieve(TRIAL_DIVISION_LIMIT):
        if p * p > rem:
            break
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            out[p] = e
    if rem > 1:
        if rem <= TRIAL_DIVISION_LIMIT**2 or is_prime(rem):
            out[rem] = out.get(rem, 0) + 1
        else:
            _split_large(rem, out, random.Random(0x5EED ^ rem))
    return tuple(sorted(out.items()))


def factorize(x: int) -> list[tuple[int, int]]:
    """Prime factorization of ``x >= 1`` as ascending ``(prime, exponent)`` pairs.

    Trial division by primes below 10**6, then Brent's variant of Pollard rho
    on whatever cofactor remains.

    >>> factorize(80)
    [(2, 4), (5, 1)]
    >>> factorize(1)
    []
    """
    if x < 1:
        raise DomainError(f"factorize needs a positive integer, got {x}")
    return list(_factorize_cached(x))


def divisors(x: int) -> list[int]:
    """All positive divisors of ``x != 0``, ascending."""
    if x == 0:
        raise DomainError("0 has infinitely many divisors")
    divs = [1]
    for p, e in factorize(abs(x)):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


_PRIME_SET_RE = re.compile(r"^(?:(all)|all-\{([0-9,]*)\}|\{([0-9,]*)\})$")


@dataclass(frozen=True)
class PrimeSet:
    """A finite, cofinite or full set of primes.

    ``kind`` is ``"all"``, ``"finite"`` or ``"all_except"``; ``primes`` holds the
    listed primes (the members for ``finite``, the exclusions for
    ``all_except``) sorted and without repeats.
    """

    kind: str
    primes: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in ("all", "finite", "all_except"):
            raise DomainError(f"unknown prime set kind {self.kind!r}")
        primes = tuple(sorted(set(self.primes)))
        for p in primes:
            if not is_prime(p):
                raise DomainError(f"{p} is not a prime")
        kind = self.kind
        if kind == "all":
            if primes:
                raise DomainError("the full prime set lists no primes")
        elif kind == "finite" and not primes:
            raise DomainError("a finite prime set must be non-empty")
        elif kind == "all_except" and not primes:
            kind = "all"
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "primes", primes)

    @classmethod
    def all(cls) -> PrimeSet:
        return cls("all")

    @classmethod
    def finite(cls, primes: Iterable[int]) -> PrimeSet:
        return cls("finite", tuple(primes))

    @classmethod
    def all_except(cls, primes: Iterable[int]) -> PrimeSet:
        return cls("all_except", tuple(primes))

    @classmethod
    def parse(cls, text: str) -> PrimeSet:
        """Parse ``all``, ``all-{p,q,...}`` or ``{p,q,...}``."""
        m = _PRIME_SET_RE.match(text)
        if m is None:
            raise ParseError(f"bad prime set {text!r}; expected all, all-{{p,...}} or {{p,...}}")
        if m.group(1):
            return cls.all()
        body = m.group(2) if m.group(2) is not None else m.group(3)
        items = body.split(",") if body else []
        if any(not item for item in items):
            raise ParseError(f"bad prime list in {text!r}")
        try:
            if m.group(2) is not None:
                return cls.all_except(int(item) for item in items)
            return cls.finite(int(item) for item in items)
        except DomainError as exc:
            raise ParseError(str(exc)) from exc

    def __str__(self) -> str:
        body = ",".join(map(str, self.primes))
        if self.kind == "all":
            return "all"
        if self.kind == "all_except":
            return f"all-{{{body}}}"
        return f"{{{body}}}"

    def __contains__(self, p: object) -> bool:
        if not isinstance(p, int) or not is_prime(p):
            return False
        if self.kind == "all":
            return True
        if self.kind == "finite":
            return p in self.primes
        return p not in self.primes

    @property
    def is_all(self) -> bool:
        return self.kind == "all"

    def smallest_missing(self) -> int | None:
        """The least prime outside the set, or None for the full set."""
        if self.kind == "all":
            return None
        if self.kind == "all_except":
            return self.primes[0]
        p = 2
        while p in self.primes:
            p += 1
            while not is_prime(p):
                p += 1
        return p

    def members_up_to(self, limit: int) -> Iterator[int]:
        """Primes of the set not exceeding ``limit``, ascending."""
        if self.kind == "finite":
            yield from (p for p in self.primes if p <= limit)
            return
        for p in primes_up_to(limit):
            if p in self:
                yield p


def is_p_number(x: int, p_set: PrimeSet) -> bool:
    """True iff every prime divisor of ``x`` lies in ``p_set``.

    No factorization is needed: for a finite set the listed primes are divided
    out, for a cofinite set it suffices that no excluded prime divides ``x``.
    """
    if x == 0:
        raise DomainError("0 is not a P-number for any prime set")
    x = abs(x)
    if p_set.kind == "all":
        return True
    if p_set.kind == "all_except":
        return all(x % p for p in p_set.primes)
    for p in p_set.primes:
        while x % p == 0:
            x //= p
    return x == 1


def _carmichael(s: int) -> int:
    lam = 1
    for p, e in factorize(s):
        if p == 2:
            part = 1 if e == 1 else 2 if e == 2 else 2 ** (e - 2)
        else:
            part = p ** (e - 1) * (p - 1)
        lam = lam * part // math.gcd(lam, part)
    return lam


def multiplicative_order(n: int, s: int) -> int:
    """Least ``r > 0`` with ``n**r == 1 (mod s)``; requires ``gcd(n, s) == 1``."""
    if s < 1:
        raise DomainError(f"modulus must be positive, got {s}")
    if math.gcd(n, s) != 1:
        raise DomainError(f"{n} is not invertible modulo {s}")
    if s == 1:
        return 1
    n %= s
    order = _carmichael(s)
    for q, _ in factorize(order):
        while order % q == 0 and pow(n, order // q, s) == 1:
            order //= q
    return order


class OmegaPair(NamedTuple):
    """A pair ``(r, s)`` of ``Omega(n)``; build checked pairs with :meth:`checked`."""

    r: int
    s: int

    @classmethod
    def checked(cls, n: int, r: int, s: int) -> OmegaPair:
        if not in_omega(n, r, s):
            raise DomainError(f"({r}, {s}) is not in Omega({n})")
        return cls(r, s)


def in_omega(n: int, r: int, s: int) -> bool:
    return r > 0 and s > 0 and pow(n, r, s) == 1 % s


def in_xi(n: int, s: int, p_set: PrimeSet) -> bool:
    """Membership of ``s`` in ``Xi(n, P)`` (see the module docstring for the reduction)."""
    if s < 1:
        raise DomainError(f"s must be positive, got {s}")
    if math.gcd(n, s) != 1 or not is_p_number(s, p_set):
        return False
    return is_p_number(multiplicative_order(n, s), p_set)


def iter_omega(n: int, p_set: PrimeSet, s_max: int) -> Iterator[OmegaPair]:
    """Lazy form of :func:`enumerate_omega`."""
    if n == 0:
        raise DomainError("n must be nonzero")
    if s_max < 1:
        raise DomainError(f"s_max must be at least 1, got {s_max}")
    for s in range(1, s_max + 1):
        if in_xi(n, s, p_set):
            yield OmegaPair(multiplicative_order(n, s), s)


def enumerate_omega(n: int, p_set: PrimeSet, s_max: int) -> list[OmegaPair]:
    """Pairs ``(ord_s(n), s)`` for every ``s <= s_max`` in ``Xi(n, P)``, by ascending ``s``."""
    return list(iter_omega(n, p_set, s_max))


def next_p_number(bound: int, p_set: PrimeSet) -> int:
    """Least positive P-number strictly greater than ``bound``."""
    m = max(bound, 0) + 1
    while not is_p_number(m, p_set):
        m += 1
    return m
