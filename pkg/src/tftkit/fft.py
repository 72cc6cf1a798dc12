"""Classical in-place radix-2 FFT, the power-of-two baseline.

The buffer is processed level by level from the top pairing distance
2^(pp-1) down to distance 1, so the output lands in bit-reversed order and
no input permutation is needed.  Within a level the blocks are visited in
bit-reversed block order, which makes the twiddle factors successive powers
of omega^(2^k): one running product per block instead of one pow each.

The layout matches the truncated transform exactly; for a power-of-two
length the two produce identical buffers.
"""

from __future__ import annotations

from .bits import bit_reverse, bitrev_permute


def fft_in_place(pp: int, omega: int, buffer, ring) -> None:
    """Transform 2^pp residues in place; entry j ends up holding the
    evaluation at omega^bit_reverse(j, pp).

    omega must satisfy omega^(2^(pp-1)) = -1 for pp >= 1.  pp = 0 is the
    identity.  All counted arithmetic goes through the ring handle.
    """
    if pp < 0:
        raise ValueError(f"log-size must be nonnegative, got {pp}")
    n = 1 << pp
    if len(buffer) != n:
        raise ValueError(f"buffer length {len(buffer)} is not 2^{pp}")
    if pp == 0:
        return
    p = ring.modulus
    if pow(omega, 1 << (pp - 1), p) != p - 1:
        raise ValueError("omega does not have order 2^pp")

    add = ring.add
    sub = ring.sub
    mul = ring.mul_root
    for k in range(pp - 1, -1, -1):
        size = 1 << k
        blocks = 1 << (pp - k - 1)
        for j in range(size):
            jj = size + j
            u = buffer[j]
            w = buffer[jj]
            buffer[j] = add(u, w)
            buffer[jj] = sub(u, w)
        if blocks == 1:
            continue
        step = ring.pow_root(omega, size)  # omega^(2^k)
        alpha = step
        for t in range(1, blocks):
            if t > 1:
                alpha = mul(alpha, step)
            base = bit_reverse(t, pp - k - 1) << (k + 1)
            for j in range(base, base + size):
                jj = size + j
                u = buffer[j]
                w = buffer[jj]
                prod = mul(alpha, w)
                buffer[j] = add(u, prod)
                buffer[jj] = sub(u, prod)


def dft_natural_order(pp: int, omega: int, buffer, ring) -> None:
    """fft_in_place followed by the bit-reversal permutation, so entry i
    holds the evaluation at omega^i."""
    fft_in_place(pp, omega, buffer, ring)
    bitrev_permute(buffer, pp)
