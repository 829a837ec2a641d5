'''
Bit-exact codec for normalized d-local box representations.

Layout (big-endian inside every field):

    header   n (10 bits) | d (6 bits) | dims (16 bits)
    per vertex
        d_v                     ceil(log d) + 1 bits
        d_v times, in increasing dimension order
            dimension index     ceil(log dn) bits
            lo - 1, hi - 1      ceil(log 2n) bits each

The vertex records are what the counting bound n d (3 log n + 7 log d)
constrains; `encode` asserts it on every call.

(c) 2025
'''

import math

from localbox.boxes.boxrep import Interval, LocalBox, Representation, is_normalized
from localbox.config import load_config_file
from localbox.errors import AuditError, FormatError, PreconditionError

# -----------------------------FUNCTIONS----------------------------------


def _clog2(x: int) -> int:
    return (x - 1).bit_length() if x > 1 else 0


def _widths(n: int, d: int) -> tuple:
    return _clog2(d) + 1, _clog2(d * n), _clog2(2 * n)


def _header_widths() -> tuple:
    header = load_config_file()["codec"]["header"]
    return header["n_bits"], header["d_bits"], header["dims_bits"]


def _field(value: int, width: int) -> str:
    return format(value, "b").zfill(width) if width else ""


def encoded_length_bound(n: int, d: int) -> float:
    """n d (3 log n + 7 log d), binary logarithms."""
    if n == 0:
        return 0.0
    return n * d * (3 * math.log2(n) + 7 * math.log2(d))


def payload_length(n: int, d: int, localities) -> int:
    """Bit length of the vertex records of a representation with these localities."""
    count_bits, index_bits, end_bits = _widths(n, d)
    return sum(count_bits + k * (index_bits + 2 * end_bits) for k in localities)


def encode(R: Representation, d: int) -> str:
    """
    Encodes R as a string of '0'/'1' characters.

    Raises:
        PreconditionError: If d < 2, R is not normalized or not pruned, some box is
                           local in more than d dimensions, R has more than dn
                           dimensions, or a header field overflows.
        AuditError: If the vertex records exceed n d (3 log n + 7 log d) bits.
    """
    n_bits, d_bits, dims_bits = _header_widths()
    if d < 2:
        raise PreconditionError(f"codec needs d >= 2, got {d}")
    if not is_normalized(R):
        raise PreconditionError("representation is not normalized (endpoints must be integers in [1, 2n])")
    used = {dim for box in R.boxes for dim in box.dims()}
    if used != set(range(R.dims)):
        raise PreconditionError("representation is not pruned")
    if R.max_locality() > d:
        raise PreconditionError(f"some box is local in {R.max_locality()} > {d} dimensions")
    if R.dims > d * R.n:
        raise PreconditionError(f"{R.dims} dimensions exceed dn = {d * R.n}")
    if R.n >= 2 ** n_bits or d >= 2 ** d_bits or R.dims >= 2 ** dims_bits:
        raise PreconditionError("representation too large for the codec header")

    count_bits, index_bits, end_bits = _widths(R.n, d)
    out = [_field(R.n, n_bits), _field(d, d_bits), _field(R.dims, dims_bits)]
    for box in R.boxes:
        out.append(_field(box.locality, count_bits))
        for dim, iv in box.bounded:
            out.append(_field(dim, index_bits))
            out.append(_field(int(iv.lo) - 1, end_bits))
            out.append(_field(int(iv.hi) - 1, end_bits))
    bits = "".join(out)

    payload = len(bits) - (n_bits + d_bits + dims_bits)
    if payload > encoded_length_bound(R.n, d):
        raise AuditError(f"payload of {payload} bits exceeds the counting bound {encoded_length_bound(R.n, d):.1f}")
    return bits


def decode(bits: str, n: int | None = None, d: int | None = None) -> Representation:
    """
    Inverse of `encode`. Up to seven trailing zero bits (byte padding) are ignored.

    Raises:
        FormatError: If the bit string is truncated, has stray content, or
                     disagrees with the expected `n` or `d`.
    """
    if any(c not in "01" for c in bits):
        raise FormatError("bit string may only contain '0' and '1'")
    pos = 0

    def read(width: int) -> int:
        nonlocal pos
        if pos + width > len(bits):
            raise FormatError("bit string is truncated", offset=pos)
        value = int(bits[pos:pos + width], 2) if width else 0
        pos += width
        return value

    n_bits, d_bits, dims_bits = _header_widths()
    n_read, d_read, dims = read(n_bits), read(d_bits), read(dims_bits)
    if n is not None and n != n_read:
        raise FormatError(f"header says n = {n_read}, expected {n}", offset=0)
    if d is not None and d != d_read:
        raise FormatError(f"header says d = {d_read}, expected {d}", offset=n_bits)

    count_bits, index_bits, end_bits = _widths(n_read, d_read)
    boxes = []
    for v in range(n_read):
        start = pos
        k = read(count_bits)
        if k > d_read:
            raise FormatError(f"vertex {v} claims {k} > {d_read} bounded dimensions", offset=start)
        box = {}
        for _ in range(k):
            dim = read(index_bits)
            lo, hi = read(end_bits) + 1, read(end_bits) + 1
            if dim >= dims or lo > hi:
                raise FormatError(f"bad record for vertex {v}", offset=start)
            box[dim] = Interval(lo, hi)
        boxes.append(LocalBox(box))

    rest = bits[pos:]
    if len(rest) >= 8 or "1" in rest:
        raise FormatError("unexpected trailing bits", offset=pos)
    return Representation(n_read, dims, tuple(boxes))


def bits_to_bytes(bits: str) -> bytes:
    """Packs a bit string into bytes, padding the last byte with zeros."""
    padded = bits + "0" * (-len(bits) % 8)
    return bytes(int(padded[i:i + 8], 2) for i in range(0, len(padded), 8))


def bytes_to_bits(data: bytes) -> str:
    return "".join(format(byte, "08b") for byte in data)
