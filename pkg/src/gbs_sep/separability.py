"""Verdicts on residual and conjugacy separability of GBS groups relative to a prime set.

Everything here depends on the root class only through its prime set ``P``.
Searches that have no effective bound (cofinite ``P``) answer ``unknown``
together with the bound that was exhausted.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from typing import Any

from .bs1n import Bs1nGroup
from .errors import DomainError, InternalError, PreconditionError
from .graph import Kind, LabeledGraph, ModularClass, classify, modular_image, prepare
from .numtheory import (
    PrimeSet,
    divisors,
    factorize,
    in_xi,
    is_p_number,
    is_prime,
    multiplicative_order,
)

__all__ = [
    "Answer",
    "Verdict",
    "FusionWitness",
    "DEFAULT_BOUND",
    "default_bound",
    "meskin_residually_finite",
    "bs_m_minus_m_residual",
    "bs1n_residual",
    "residually_c_gbs",
    "conjugacy_separable_gbs",
    "condition1_check",
    "fusion_witness",
    "verify_fusion",
]

DEFAULT_BOUND = 10**4


def default_bound() -> int:
    """Search bound from ``GBS_SEP_BOUND`` if set, else ``DEFAULT_BOUND``."""
    raw = os.environ.get("GBS_SEP_BOUND")
    if not raw:
        return DEFAULT_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"GBS_SEP_BOUND must be an integer, got {raw!r}") from None
    if value < 1:
        raise DomainError(f"GBS_SEP_BOUND must be positive, got {value}")
    return value


class Answer(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    answer: Answer
    reason: str
    witness: dict[str, Any] | None = field(default=None, compare=False)
    bound: int | None = None

    def __post_init__(self) -> None:
        if self.answer is Answer.UNKNOWN and self.bound is None:
            raise InternalError("an unknown verdict must carry its search bound")

    @classmethod
    def yes(cls, reason: str, witness: dict[str, Any] | None = None) -> Verdict:
        return cls(Answer.YES, reason, witness)

    @classmethod
    def no(cls, reason: str, witness: dict[str, Any] | None = None) -> Verdict:
        return cls(Answer.NO, reason, witness)

    @classmethod
    def unknown(cls, reason: str, bound: int) -> Verdict:
        return cls(Answer.UNKNOWN, reason, None, bound)

    def to_json(self) -> dict[str, Any]:
        return {
            "answer": self.answer.value,
            "reason": self.reason,
            "witness": self.witness,
            "bound": self.bound,
        }


@dataclass(frozen=True)
class FusionWitness:
    """``t^u a^v`` and ``t^u a^w`` are not conjugate in BS(1,n) but fuse in every admissible quotient."""

    n: int
    u: int
    v: int
    w: int
    q: int

    def to_json(self) -> dict[str, int]:
        return {"n": self.n, "u": self.u, "v": self.v, "w": self.w, "q": self.q}


def meskin_residually_finite(m: int, n: int) -> bool:
    """Residual finiteness of BS(m, n)."""
    if m == 0 or n == 0:
        raise DomainError("BS(m, n) needs nonzero m and n")
    # BS(m,n) = BS(n,m) = BS(-m,-n); arrange 0 < m <= |n|
    if abs(m) > abs(n):
        m, n = n, m
    if m < 0:
        m, n = -m, -n
    return m == 1 or m == abs(n)


def bs_m_minus_m_residual(m: int, p_set: PrimeSet) -> bool:
    """Whether BS(m, -m) is residually a group of the class."""
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    return 2 in p_set and is_p_number(m, p_set)


def _good_prime(n: int, p: int, p_set: PrimeSet) -> bool:
    return n % p != 0 and is_p_number(multiplicative_order(n, p), p_set)


def bs1n_residual(n: int, p_set: PrimeSet, search_bound: int | None = None) -> Verdict:
    """Residual property of BS(1,n), ``|n| >= 2``: a prime ``p`` of the set with
    ``p`` not dividing ``n`` and ``ord_p(n)`` a P-number is needed."""
    if abs(n) < 2:
        raise DomainError(f"need |n| >= 2, got n = {n}")
    bound = default_bound() if search_bound is None else search_bound
    if p_set.kind == "finite":
        for p in p_set.primes:
            if _good_prime(n, p, p_set):
                return Verdict.yes("bs1n_prime", {"prime": p})
        return Verdict.no("bs1n_no_prime", {"primes": list(p_set.primes)})
    if p_set.is_all:
        p = 2
        while n % p == 0:
            p += 1
            while not is_prime(p):
                p += 1
        return Verdict.yes("bs1n_prime", {"prime": p})
    for p in p_set.members_up_to(bound):
        if _good_prime(n, p, p_set):
            return Verdict.yes("bs1n_prime", {"prime": p})
    return Verdict.unknown("bs1n_search_exhausted", bound)


def residually_c_gbs(G: LabeledGraph, p_set: PrimeSet, search_bound: int | None = None) -> Verdict:
    R, S = prepare(G)
    c = classify(R)
    if c.kind in (Kind.INFINITE_CYCLIC, Kind.BS_1_1):
        # free abelian of rank <= 2: reduce modulo a large enough P-number
        return Verdict.yes("free_abelian", {"classification": str(c)})
    if c.kind is Kind.BS_1_MINUS1:
        if 2 in p_set:
            return Verdict.yes("bs_m_minus_m", {"classification": str(c)})
        return Verdict.no("two_not_in_p", {"classification": str(c)})
    if c.kind is Kind.SOLVABLE_BS1N:
        return bs1n_residual(c.n, p_set, search_bound)
    image = modular_image(R, S).classification
    if image is ModularClass.OTHER:
        return Verdict.no("modular_image_other")
    for e, eps in R.ends():
        if not is_p_number(e.label(eps), p_set):
            return Verdict.no("label_not_p_number", {"edge": e.id, "label": e.label(eps)})
    if image is ModularClass.PLUS_MINUS_ONE and 2 not in p_set:
        return Verdict.no("two_not_in_p", {"modular_image": image.value})
    return Verdict.yes("labels_p_numbers", {"modular_image": image.value})


def conjugacy_separable_gbs(G: LabeledGraph, p_set: PrimeSet, search_bound: int | None = None) -> Verdict:
    c = classify(prepare(G)[0])
    if c.kind is Kind.SOLVABLE_BS1N:
        missing = p_set.smallest_missing()
        if missing is None:
            return Verdict.yes("bs1n_all_primes", {"n": c.n})
        return Verdict.no("bs1n_missing_prime", {"n": c.n, "missing_prime": missing})
    inner = residually_c_gbs(G, p_set, search_bound)
    return Verdict(inner.answer, f"residual/{inner.reason}", inner.witness, inner.bound)


def _fuses_mod(n: int, v: int, w: int, d: int) -> bool:
    """Whether ``d`` divides ``v n^x - w n^y`` for some ``x, y >= 0``; needs ``gcd(n, d) == 1``."""
    if d == 1:
        return True
    target, cur, step = v % d, w % d, n % d
    for _ in range(multiplicative_order(n, d)):
        if cur == target:
            return True
        cur = cur * step % d
    return False


def condition1_check(
    n: int, p_set: PrimeSet, u: int, v: int, w: int, s_max: int | None = None
) -> Verdict:
    """Is there ``s`` in Xi(n, P) with ``gcd(n^u - 1, s)`` dividing no ``v n^x - w n^y``?

    Only ``d = gcd(n^u - 1, s)`` matters, ``d`` lies in Xi again and separates
    as soon as ``s`` does, so for ``n^u != 1`` it is enough to scan the
    divisors of ``n^u - 1``; the answer is then exact and the witness is the
    smallest separating ``s``.  For ``n^u = 1`` the moduli themselves are
    searched up to ``s_max``.
    """
    if n == 0 or u < 0:
        raise DomainError("need n != 0 and u >= 0")
    bound = default_bound() if s_max is None else s_max
    g = Bs1nGroup(n)
    if g.are_conjugate(g.element(u, v, 0), g.element(u, w, 0)):
        raise PreconditionError(f"t^{u} a^{v} and t^{u} a^{w} are conjugate in BS(1,{n})")
    big = abs(n**u - 1)
    if big:
        for d in divisors(big):
            if in_xi(n, d, p_set) and not _fuses_mod(n, v, w, d):
                return Verdict.yes("separating_modulus", {"s": d})
        return Verdict.no("no_separating_divisor", {"modulus": big})
    for s in range(2, bound + 1):
        if in_xi(n, s, p_set) and not _fuses_mod(n, v, w, s):
            return Verdict.yes("separating_modulus", {"s": s})
    if p_set.kind == "finite" and not any(in_xi(n, p, p_set) for p in p_set.primes):
        return Verdict.no("xi_trivial", {"primes": list(p_set.primes)})
    return Verdict.unknown("search_exhausted", bound)


def fusion_witness(n: int, p_set: PrimeSet, missing_prime: int) -> FusionWitness:
    """Non-conjugate pair of BS(1,n) that no quotient with parameters in Omega(n, P) separates.

    With ``p`` outside ``P``: ``u = p^2``, ``v = n^u - 1`` and ``q`` the least
    prime divisor of ``v`` outside Xi(n, P); then ``w = v / q``.
    """
    if abs(n) < 2:
        raise DomainError(f"need |n| >= 2, got n = {n}")
    if not is_prime(missing_prime):
        raise DomainError(f"{missing_prime} is not prime")
    if missing_prime in p_set:
        raise PreconditionError(f"{missing_prime} belongs to the prime set {p_set}")
    u = missing_prime**2
    v = n**u - 1
    for q, _ in factorize(abs(v)):
        if not in_xi(n, q, p_set):
            return FusionWitness(n, u, v, v // q, q)
    raise InternalError(f"every prime divisor of {v} lies in Xi({n}, {p_set})")


def verify_fusion(fw: FusionWitness, p_set: PrimeSet, rs_max: int) -> tuple[bool, int]:
    """Check a fusion witness: non-conjugacy in BS(1,n) and conjugacy of images
    in every H(n,r,s) with ``(r, s)`` in Omega(n, P) and ``rs <= rs_max``.

    Returns ``(ok, number of quotients checked)``.
    """
    from .hquot import HGroup

    g = Bs1nGroup(fw.n)
    x, y = g.element(fw.u, fw.v, 0), g.element(fw.u, fw.w, 0)
    if g.are_conjugate(x, y):
        return False, 0
    checked = 0
    for s in range(1, rs_max + 1):
        if not in_xi(fw.n, s, p_set):
            continue
        base = multiplicative_order(fw.n, s)
        for r in range(base, rs_max // s + 1, base):
            if not is_p_number(r, p_set):
                continue
            H = HGroup(fw.n, r, s)
            if not H.are_conjugate_criterion(H.natural_hom(x), H.natural_hom(y)):
                return False, checked
            checked += 1
    return True, checked

