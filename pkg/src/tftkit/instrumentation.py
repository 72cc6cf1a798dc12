"""Operation counting and buffer-access auditing.

The cost claims this package makes are stated per operation class:
additions/subtractions, multiplications by powers of the root, and
multiplications by powers of 2 or its inverse.  ``CountingField``
implements the ring protocol with one counter per class so a transform
run becomes a measurement; ``bound_check`` turns the measured counters
into a pass/fail verdict against the declared bounds.  ``AuditBuffer``
wraps the data array to prove the in-place claim: any index outside
[0, len) raises and is flagged.

The production kernels are generic over the ring, so none of this
costs anything when a plain PrimeField is passed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .itft import itft_in_place
from .ring import pow_by_squaring
from .tft import make_plan, tft_in_place

__all__ = [
    "OpCounters",
    "CountingField",
    "counted_ring",
    "AuditBuffer",
    "BoundReport",
    "bound_check",
    "measure_transform",
]


@dataclass(frozen=True, slots=True)
class OpCounters:
    """Snapshot of the four operation-class tallies."""

    mul_root: int = 0
    mul_pow2: int = 0
    add_sub: int = 0
    mul_other: int = 0

    @property
    def total(self) -> int:
        return self.mul_root + self.mul_pow2 + self.add_sub + self.mul_other


class CountingField:
    """Ring over Z/modulus that tallies every operation it performs.

    The tallies live in one shared list closed over by the arithmetic
    methods, which are bound as instance attributes in __init__.  A
    full bound sweep issues hundreds of millions of ring calls, and
    closure access to the tally is measurably cheaper than attribute
    bookkeeping on self.  Doublings count as additions, matching the
    cost model the bounds are stated in.
    """

    __slots__ = (
        "modulus",
        "_tally",
        "add",
        "sub",
        "neg",
        "double",
        "mul",
        "mul_root",
        "mul_pow2",
    )

    def __init__(self, modulus: int) -> None:
        self.modulus = modulus
        p = modulus
        tally = [0, 0, 0, 0]  # mul_root, mul_pow2, add_sub, mul_other
        self._tally = tally

        def add(x: int, y: int) -> int:
            tally[2] += 1
            return (x + y) % p

        def sub(x: int, y: int) -> int:
            tally[2] += 1
            return (x - y) % p

        def neg(x: int) -> int:
            tally[2] += 1
            return -x % p

        def double(x: int) -> int:
            tally[2] += 1
            return 2 * x % p

        def mul(x: int, y: int) -> int:
            tally[3] += 1
            return x * y % p

        def mul_root(x: int, y: int) -> int:
            tally[0] += 1
            return x * y % p

        def mul_pow2(x: int, y: int) -> int:
            tally[1] += 1
            return x * y % p

        self.add = add
        self.sub = sub
        self.neg = neg
        self.double = double
        self.mul = mul
        self.mul_root = mul_root
        self.mul_pow2 = mul_pow2

    def reset(self) -> None:
        self._tally[:] = (0, 0, 0, 0)

    @property
    def counters(self) -> OpCounters:
        t = self._tally
        return OpCounters(mul_root=t[0], mul_pow2=t[1], add_sub=t[2], mul_other=t[3])

    def pow(self, x: int, exponent: int) -> int:
        return pow_by_squaring(self.mul, x, exponent)

    def pow_root(self, x: int, exponent: int) -> int:
        return pow_by_squaring(self.mul_root, x, exponent)

    def pow_pow2(self, x: int, exponent: int) -> int:
        return pow_by_squaring(self.mul_pow2, x, exponent)

    def inverse(self, x: int) -> int:
        if x % self.modulus == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(x, self.modulus - 2)


def counted_ring(field) -> CountingField:
    """Fresh zeroed counting ring over the field's modulus."""
    return CountingField(field.modulus)


class AuditBuffer:
    """Array wrapper proving a kernel stayed inside its own slice.

    Records the lowest and highest index touched; any read or write
    outside [0, len), or with a non-integer index, sets ``oob`` and
    raises IndexError.
    """

    __slots__ = ("inner", "lo", "hi", "oob")

    def __init__(self, data) -> None:
        self.inner = list(data)
        self.lo = None
        self.hi = None
        self.oob = False

    def __len__(self) -> int:
        return len(self.inner)

    def _touch(self, index) -> None:
        if not isinstance(index, int) or not 0 <= index < len(self.inner):
            self.oob = True
            raise IndexError(
                f"audited access at {index!r} outside [0, {len(self.inner)})"
            )
        if self.lo is None or index < self.lo:
            self.lo = index
        if self.hi is None or index > self.hi:
            self.hi = index

    def __getitem__(self, index) -> int:
        self._touch(index)
        return self.inner[index]

    def __setitem__(self, index, value) -> None:
        self._touch(index)
        self.inner[index] = value


@dataclass(frozen=True, slots=True)
class BoundReport:
    """Measured counters for one transform next to the bounds they
    must satisfy."""

    ell: int
    kind: str
    counters: OpCounters
    add_bound: int
    root_bound: int
    pow2_bound: int

    @property
    def passed(self) -> bool:
        c = self.counters
        return (
            c.add_sub <= self.add_bound
            and c.mul_root <= self.root_bound
            and c.mul_pow2 <= self.pow2_bound
            and c.mul_other == 0
        )

    def csv_row(self) -> str:
        c = self.counters
        return (
            f"{self.ell},{self.kind},{c.mul_root},{c.mul_pow2},{c.add_sub},"
            f"{self.add_bound},{self.root_bound},{int(self.passed)}"
        )


def bound_check(ell: int, counters: OpCounters, kind: str) -> BoundReport:
    """Evaluate counters from one length-ell transform against the
    declared per-class bounds.

    forward:  add_sub <= ell*floor(lg ell) + 2*ell (no slack);
              mul_root <= sum over the power-of-two split ell = sum l_r
              of (l_r/2)*lg(l_r), plus 2*ell + 8*(m+1)^2 slack;
              mul_pow2 must be 0.
    inverse:  add_sub <= ell*floor(lg ell) + 3*ell (no slack);
              mul_root <= (ell/2)*floor(lg ell) + 2*ell + 8*(m+1)^2;
              mul_pow2 <= 2^m + 2*ceil(lg(m+2)) + 4.
    fft:      add_sub <= n*lg n; mul_root <= (n/2)*lg n + n + 16;
              mul_pow2 must be 0.

    mul_other must be 0 for every kind.  m = ceil(lg ell) throughout.
    """
    if ell < 1:
        raise ValueError("ell must be at least 1")
    floor_log = ell.bit_length() - 1
    m = (ell - 1).bit_length()
    slack = 8 * (m + 1) ** 2
    if kind == "forward":
        add_bound = ell * floor_log + 2 * ell
        root_bound = _split_mul_term(ell) + 2 * ell + slack
        pow2_bound = 0
    elif kind == "inverse":
        add_bound = ell * floor_log + 3 * ell
        root_bound = ell * floor_log // 2 + 2 * ell + slack
        pow2_bound = (1 << m) + 2 * _ceil_log2(m + 2) + 4
    elif kind == "fft":
        if ell & (ell - 1):
            raise ValueError("fft kind requires a power-of-two length")
        add_bound = ell * floor_log
        root_bound = (ell // 2) * floor_log + ell + 16
        pow2_bound = 0
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return BoundReport(ell, kind, counters, add_bound, root_bound, pow2_bound)


def measure_transform(field, ell: int, kind: str) -> OpCounters:
    """Counters for one forward or inverse transform of length ell.

    Counts do not depend on the buffer contents, so a zero buffer
    measures the true cost.
    """
    plan = make_plan(field, ell)
    ring = counted_ring(field)
    buffer = [0] * ell
    if kind == "forward":
        tft_in_place(plan, buffer, ring)
    elif kind == "inverse":
        itft_in_place(plan, buffer, ring)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return ring.counters


def _split_mul_term(ell: int) -> int:
    total = 0
    for e in range(ell.bit_length()):
        if ell >> e & 1:
            total += (1 << e) * e // 2
    return total


def _ceil_log2(x: int) -> int:
    return (x - 1).bit_length()
