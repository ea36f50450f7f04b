"""Finite field arithmetic for GF(2^m) and prime fields GF(p).

Field elements are plain Python ints: bit-vectors for GF(2^m) (bit i is the
coefficient of alpha^i) and residues for GF(p).  Discrete-log tables are built
eagerly at construction, which is cheap for the supported orders (<= 2^16).
Field objects are immutable after construction; all operations are pure.
"""

from __future__ import annotations

__all__ = ["Gf2mField", "GfpField", "FieldError", "smallest_primitive_polynomial"]


class FieldError(ValueError):
    """Raised for invalid field parameters or out-of-domain arguments."""


# Moduli fixed for reproducibility of element labels: x^3+x+1, x^4+x+1, x^5+x^2+1.
# These coincide with the lexicographically smallest primitive polynomials.
_DEFAULT_MODULI = {3: 0b1011, 4: 0b10011, 5: 0b100101}


def _try_build_tables(m: int, modulus: int):
    """Build (exp, log) tables for x modulo `modulus`, or report a repeat.

    Returns (exp, log) if x is primitive, else (None, k) where k is the first
    exponent whose power repeats an earlier one.
    """
    n = (1 << m) - 1
    exp = [0] * n
    log = [-1] * (1 << m)
    cur = 1
    for k in range(n):
        if log[cur] != -1:
            return None, k
        exp[k] = cur
        log[cur] = k
        cur <<= 1
        if cur >> m:
            cur ^= modulus
    if cur != 1:
        return None, n
    return (exp, log), None


def smallest_primitive_polynomial(m: int) -> int:
    """Lexicographically smallest primitive polynomial of degree m, as a bitmask."""
    if m in _DEFAULT_MODULI:
        return _DEFAULT_MODULI[m]
    for cand in range((1 << m) | 1, 1 << (m + 1), 2):
        tables, _ = _try_build_tables(m, cand)
        if tables is not None:
            return cand
    raise FieldError(f"no primitive polynomial of degree {m} found")


class Gf2mField:
    """GF(2^m) in polynomial basis over GF(2), with exp/log tables for alpha = x."""

    def __init__(self, m: int, modulus: int | None = None):
        if not 2 <= m <= 16:
            raise FieldError(f"extension degree m={m} out of supported range 2..16")
        if modulus is None:
            modulus = smallest_primitive_polynomial(m)
        elif modulus.bit_length() - 1 != m:
            raise FieldError(
                f"modulus {modulus:#b} has degree {modulus.bit_length() - 1}, expected {m}"
            )
        tables, bad_k = _try_build_tables(m, modulus)
        if tables is None:
            raise FieldError(
                f"modulus {modulus:#b} is not primitive: "
                f"alpha^{bad_k} repeats an earlier power of alpha"
            )
        self.m = m
        self.modulus = modulus
        self.order = 1 << m
        self.exp_table, self.log_table = tables

    def __repr__(self):
        return f"Gf2mField(m={self.m}, modulus={self.modulus:#b})"

    def _check(self, a: int):
        if not 0 <= a < self.order:
            raise FieldError(f"element {a} out of range for GF(2^{self.m})")

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if a == 0 or b == 0:
            return 0
        n = self.order - 1
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % n]

    def log(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise FieldError("discrete log of 0 is undefined")
        return self.log_table[a]

    def exp(self, k: int) -> int:
        return self.exp_table[k % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise FieldError("cannot invert 0")
            return 0
        return self.exp(self.log(a) * e)

    def inv(self, a: int) -> int:
        return self.pow(a, -1)

    def elements(self) -> range:
        return range(self.order)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _factorize(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class GfpField:
    """Prime field GF(p) with a fixed primitive root and quadratic-residue flags."""

    def __init__(self, p: int, generator: int | None = None):
        if p == 2 or not _is_prime(p) or p > 1 << 16:
            raise FieldError(f"p={p} must be an odd prime <= 2^16")
        self.p = p
        primes = _factorize(p - 1)
        if generator is None:
            generator = next(
                g for g in range(2, p)
                if all(pow(g, (p - 1) // q, p) != 1 for q in primes)
            )
        elif any(pow(generator, (p - 1) // q, p) == 1 for q in primes):
            raise FieldError(f"{generator} is not a primitive root modulo {p}")
        self.generator = generator
        self.square_flags = [False] * p
        for x in range(1, p):
            self.square_flags[x * x % p] = True

    def __repr__(self):
        return f"GfpField(p={self.p}, generator={self.generator})"

    def squares(self) -> set[int]:
        """The (p-1)/2 nonzero quadratic residues modulo p."""
        return {x for x in range(1, self.p) if self.square_flags[x]}
