from fractions import Fraction
import math

from .errors import DomainError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def require_prime(p, minimum: int = 5) -> int:
    """Validate the polarization prime; returns it as an int."""
    if isinstance(p, Fraction):
        if p.denominator != 1:
            raise DomainError(f"p must be an integer, got {p}")
        p = int(p)
    if not isinstance(p, int) or isinstance(p, bool):
        raise DomainError(f"p must be an integer, got {p!r}")
    if p < minimum or not is_prime(p):
        raise DomainError(f"p must be a prime >= {minimum}, got {p}")
    return p


def parse_prime_range(text: str):
    """``"5..37"`` -> [5, 7, 11, ..., 37]; a single number is also accepted."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise DomainError(f"bad prime range {text!r}") from None
    primes = [n for n in range(max(lo, 5), hi + 1) if is_prime(n)]
    if not primes:
        raise DomainError(f"no primes >= 5 in range {text!r}")
    return primes
