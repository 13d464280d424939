"""
p-adic arithmetic at finite precision: the standard character on
rationals with p-power denominators, valuations and Hensel lifts of
square roots of -1.
"""
import math

from sympy import isprime

from ..logs import logger
from ..models.rational import PhaseFraction, as_rational
from ..models.scale import HenselRoot
from ..utils.exceptions import InvalidInput, UnsupportedPrime


def is_prime(p):
    """
    Deterministic for p < 2^64
    """
    return bool(isprime(p))


def _check_prime(p):
    if not is_prime(p):
        raise InvalidInput("%s is not prime" % p)


def _is_power_of(value, p):
    while value % p == 0:
        value //= p
    return value == 1


def chi_p(q, p):
    """
    The standard character at q, as a phase: for a denominator which is a
    power of p, chi_p(q) = e(q), i.e. q reduced modulo 1
    """
    _check_prime(p)
    q = as_rational(q)
    if not _is_power_of(q.denominator, p):
        raise InvalidInput(
            "The denominator of %s is not a power of %s" % (q, p)
        )
    return PhaseFraction(q)


def valuation(q, p):
    """
    v with q = p^v * (a p-adic unit); math.inf for q = 0
    """
    _check_prime(p)
    q = as_rational(q)
    if q == 0:
        return math.inf
    result = 0
    numerator, denominator = q.numerator, q.denominator
    while numerator % p == 0:
        numerator //= p
        result += 1
    while denominator % p == 0:
        denominator //= p
        result -= 1
    return result


def _base_root(p):
    """
    The smaller square root of -1 modulo p
    """
    for candidate in range(2, p - 1):
        if (candidate * candidate + 1) % p == 0:
            return candidate
    raise UnsupportedPrime(p, "no square root of -1 modulo %s" % p)


def hensel_sqrt_minus_one(p, K):  # pylint: disable=invalid-name
    """
    The lift xi of the smaller square root of -1 modulo p to a root
    modulo p^K, by Newton steps x <- x - (x^2 + 1) / (2x), each doubling
    the precision
    """
    _check_prime(p)
    if p % 4 != 1:
        raise UnsupportedPrime(p, "-1 is a square modulo p only when p = 1 mod 4")
    if K < 1:
        raise InvalidInput("K must be a positive integer, not %s" % K)
    xi = _base_root(p)
    precision = 1
    while precision < K:
        precision = min(2 * precision, K)
        modulus = p ** precision
        xi = (xi - (xi * xi + 1) * pow(2 * xi, -1, modulus)) % modulus
    root = HenselRoot(p, K, xi % p ** K)
    logger.debug("Lifted sqrt(-1) modulo %s^%s: %s" % (p, K, root.xi))
    return root
