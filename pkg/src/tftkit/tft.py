"""In-place forward truncated Fourier transform.

``tft_in_place`` overwrites a length-ell buffer (a_0, ..., a_{ell-1})
with the evaluations f(psi^bit_reverse(i, m)) for i < ell, where f is
the polynomial with the buffer as coefficients, m = ceil(log2 ell), and
psi has order 2^m.  No auxiliary array is allocated: every read and
write lands inside the buffer, and the scratch state is a handful of
scalars.

The kernel runs in four passes:

1. fold the tail half onto the head (the missing inputs beyond ell are
   zero, so the first butterfly level degenerates to sums/differences
   that fit in place);
2. descend the rightmost branch of the butterfly tree, producing the
   tail entries of each level; where a full butterfly would need a slot
   that does not exist, a division-free 2x2 step [[0,1],[1,-a]] stashes
   the surviving combination instead;
3. walk back up restoring the head entries the descent borrowed, via
   the inverse step [[2a,1],[1,0]] (the doubling is an addition, so the
   pass divides by nothing);
4. run plain butterfly levels over the completed prefix, with twiddles
   drained from the streaming pair generator.

Multiplication counts stay within (ell/2)log2(ell) + O(ell) ring
multiplications and ell*floor(log2 ell) + 2*ell additions; the exact
bounds are asserted in the test suite against instrumented rings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ring import PrimeField
from .twiddle import pair_stream, twiddle_forward

__all__ = ["TransformPlan", "make_plan", "tft_in_place"]


@dataclass(frozen=True, slots=True)
class TransformPlan:
    """Shared per-length state for the forward and inverse transforms.

    ell   -- transform length, 1 <= ell <= 2^field.two_adicity
    m     -- ceil(log2 ell); 0 when ell = 1
    v     -- largest v with 2^v dividing ell
    psi   -- element of order 2^m (the evaluation-point generator)
    half  -- inverse of 2, used only by the inverse transform
    """

    field: PrimeField
    ell: int
    m: int
    v: int
    psi: int
    half: int


def make_plan(field: PrimeField, ell: int) -> TransformPlan:
    if ell < 1:
        raise ValueError("transform length must be at least 1")
    m = (ell - 1).bit_length()
    if m > field.two_adicity:
        raise ValueError(
            f"length {ell} exceeds the 2^{field.two_adicity} transform "
            f"capacity of the field"
        )
    v = (ell & -ell).bit_length() - 1
    return TransformPlan(
        field=field,
        ell=ell,
        m=m,
        v=v,
        psi=field.root_of_order(m),
        half=field.inverse(2),
    )


def tft_in_place(plan: TransformPlan, buffer, ring=None) -> None:
    """Overwrite buffer with its truncated Fourier transform.

    ring defaults to plan.field; pass an instrumented ring with the
    same modulus to observe operation counts.
    """
    if ring is None:
        ring = plan.field
    ell = plan.ell
    if len(buffer) != ell:
        raise ValueError(f"buffer length {len(buffer)} != plan length {ell}")
    if ell == 1:
        return

    m = plan.m
    v = plan.v
    psi = plan.psi
    add = ring.add
    sub = ring.sub
    mul = ring.mul_root
    half_len = 1 << (m - 1)

    # pass 1: fold tail onto head
    for j in range(ell - half_len):
        jj = half_len + j
        u = buffer[j]
        w = buffer[jj]
        buffer[j] = add(u, w)
        buffer[jj] = sub(u, w)

    # pass 2: rightmost-branch descent (runs only when ell < 2^m)
    for k in range(m - 2, v - 1, -1):
        q = ell >> (k + 1)
        r = ell - (q << (k + 1))
        qp = q - (1 << (m - k - 2))
        size = 1 << k
        head = q << (k + 1)        # 2^k * 2q
        alias = (2 * qp + 1) << k  # 2^k * (2q'+1), the borrowed slots
        alpha = twiddle_forward(ring, m, psi, k, q)
        if r > size:
            tail = head + size     # 2^k * (2q+1)
            for j in range(r - size):
                u = buffer[head + j]
                w = buffer[tail + j]
                t = mul(alpha, w)
                buffer[head + j] = add(u, t)
                buffer[tail + j] = sub(u, t)
            for j in range(r - size, size):
                # [[0,1],[1,-alpha]]: keep only the surviving combination,
                # parking the partner where pass 3 can recover it
                u = buffer[head + j]
                w = buffer[alias + j]
                buffer[head + j] = w
                buffer[alias + j] = sub(u, mul(alpha, w))
        else:
            aliased_head = qp << (k + 1)  # 2^k * 2q'
            for j in range(r):
                buffer[head + j] = add(buffer[head + j], mul(alpha, buffer[alias + j]))
            for j in range(r, size):
                buffer[aliased_head + j] = add(
                    buffer[aliased_head + j], mul(alpha, buffer[alias + j])
                )

    # pass 3: restore the borrowed head entries, bottom level upward
    for k in range(v + 1, m - 1):
        q = ell >> (k + 1)
        r = ell - (q << (k + 1))
        qp = q - (1 << (m - k - 2))
        size = 1 << k
        head = q << (k + 1)
        alias = (2 * qp + 1) << k
        alpha = twiddle_forward(ring, m, psi, k, q)
        if r > size:
            for j in range(r - size, size):
                # [[2a,1],[1,0]] undoes the parking step; 2au = au + au
                u = buffer[head + j]
                w = buffer[alias + j]
                t = mul(alpha, u)
                buffer[head + j] = add(add(t, t), w)
                buffer[alias + j] = u
        else:
            aliased_head = qp << (k + 1)
            for j in range(r, size):
                buffer[aliased_head + j] = sub(
                    buffer[aliased_head + j], mul(alpha, buffer[alias + j])
                )

    # pass 4: butterfly levels over the completed prefix
    for k in range(m - 2, -1, -1):
        q = ell >> (k + 1)
        size = 1 << k
        for j in range(size):
            jj = size + j
            u = buffer[j]
            w = buffer[jj]
            buffer[j] = add(u, w)
            buffer[jj] = sub(u, w)
        if q < 2:
            continue
        for i, alpha in pair_stream(ring, m, psi, q):
            base = i << (k + 1)
            for j in range(base, base + size):
                jj = size + j
                u = buffer[j]
                w = buffer[jj]
                t = mul(alpha, w)
                buffer[j] = add(u, t)
                buffer[jj] = sub(u, t)
