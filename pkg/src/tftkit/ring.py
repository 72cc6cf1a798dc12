"""Prime-field arithmetic for NTT-friendly moduli.

A field handle bundles the modulus p with its two-adicity s = ord2(p - 1)
and a fixed generator of the 2^s-torsion subgroup.  Elements themselves are
plain canonical ints in [0, p); they carry no reference back to the field,
so a buffer of residues costs nothing beyond the ints it holds.

The transform kernels are generic over a small ring protocol rather than
this class specifically.  A ring handle must provide

    modulus                       attribute, the odd prime p
    add(x, y), sub(x, y)          counted together as additions
    neg(x)
    double(x)                     defined as add(x, x), counted as an addition
    mul(x, y)                     general product
    mul_root(x, y)                product tagged "by a root power"
    mul_pow2(x, y)                product tagged "by a power of 2 or 2^-1"
    pow(x, e), pow_root(x, e), pow_pow2(x, e)
    inverse(x)

On this plain handle the tagged variants are aliases of the untagged ones;
the instrumentation module ships a wrapper that gives each tag its own
counter.  Only the prime-field instantiation ships here, but nothing in the
kernels assumes more than the protocol above.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_MODULUS = 998244353  # 119 * 2^23 + 1

# Deterministic Miller-Rabin witness set; correct for all n < 3.3 * 10^24,
# far past any modulus a 2^s-point transform here would use.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test (exact below 3.3e24)."""
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n % w == 0:
            return n == w
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def pow_by_squaring(mul, x: int, e: int) -> int:
    """Right-to-left square and multiply using the supplied product.

    Performs at most 2*floor(log2(e)) + 1 calls to mul for e >= 1, and
    exactly d calls for e = 2^d.  e = 0 returns 1 with no calls.
    """
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    acc = None
    while e:
        if e & 1:
            acc = x if acc is None else mul(acc, x)
        e >>= 1
        if e:
            x = mul(x, x)
    return 1 if acc is None else acc


@dataclass(frozen=True, slots=True)
class PrimeField:
    """Arithmetic handle for Z/p with p an odd prime, p - 1 = odd * 2^s.

    Fields:
        modulus: the prime p.
        two_adicity: s = ord2(p - 1), the largest power-of-two transform
            size the field supports is 2^s.
        generator_root: an element of multiplicative order exactly 2^s.
    """

    modulus: int
    two_adicity: int
    generator_root: int

    def __post_init__(self) -> None:
        p = self.modulus
        s = self.two_adicity
        g = self.generator_root
        if p < 3 or p % 2 == 0 or not is_probable_prime(p):
            raise ValueError(f"modulus must be an odd prime, got {p}")
        if s < 1 or (p - 1) % (1 << s) != 0 or ((p - 1) >> s) % 2 == 0:
            raise ValueError(f"two_adicity {s} does not match ord2({p} - 1)")
        if not 0 < g < p or pow(g, 1 << (s - 1), p) != p - 1:
            raise ValueError("generator_root must have order exactly 2^two_adicity")

    @classmethod
    def from_modulus(cls, p: int) -> "PrimeField":
        """Derive two_adicity and a generator of the 2^s subgroup from p.

        The generator comes from the smallest quadratic non-residue c as
        c^((p-1)/2^s), so construction is deterministic.
        """
        if p < 3 or p % 2 == 0 or not is_probable_prime(p):
            raise ValueError(f"modulus must be an odd prime, got {p}")
        odd = p - 1
        s = 0
        while odd % 2 == 0:
            odd //= 2
            s += 1
        c = 2
        while pow(c, (p - 1) // 2, p) != p - 1:
            c += 1
        return cls(p, s, pow(c, odd, p))

    # --- element arithmetic (elements are canonical ints in [0, p)) ---

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.modulus

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.modulus

    def neg(self, x: int) -> int:
        return -x % self.modulus

    def double(self, x: int) -> int:
        return (x + x) % self.modulus

    def mul(self, x: int, y: int) -> int:
        return x * y % self.modulus

    # Tag aliases; the counting wrapper separates these.
    mul_root = mul
    mul_pow2 = mul

    def pow(self, x: int, e: int) -> int:
        return pow_by_squaring(self.mul, x, e)

    pow_root = pow
    pow_pow2 = pow

    def inverse(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(x, self.modulus - 2)

    def root_of_order(self, m: int) -> int:
        """Principal 2^m-th root of unity, generator_root^(2^(s-m)).

        Raises ValueError when m exceeds the field's two-adicity.
        """
        if not 0 <= m <= self.two_adicity:
            raise ValueError(
                f"no root of order 2^{m}: field supports at most 2^{self.two_adicity}"
            )
        return self.pow(self.generator_root, 1 << (self.two_adicity - m))
