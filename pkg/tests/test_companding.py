import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lossywav import bitpack
from lossywav.companding import (
    MappingParams16,
    build_tables,
    compand_decode,
    compand_encode,
    map16,
    max_error,
    unmap16,
)
from lossywav.errors import BitsOutOfRange, PayloadTooShort

# max |expand[compress[s]] - s| per code width 1..8, from oracle_tables below
MAX_ERR = {1: 64, 2: 38, 3: 21, 4: 10, 5: 6, 6: 3, 7: 2, 8: 1}

mpmath.mp.dps = 50


def oracle_tables(bits):
    """Bucket-threshold construction in 50-digit arithmetic."""
    n = 2 ** (bits - 1)
    v = [mpmath.mpf(0)] + [128 * (mpmath.power(2, mpmath.mpf(c) / n) - 1) + mpmath.mpf("0.5") for c in range(1, n + 1)]
    t = [int(mpmath.floor(x)) for x in v]
    compress = []
    for s in range(256):
        m = s - 127 if s >= 128 else 128 - s
        (c,) = [c for c in range(1, n + 1) if t[c - 1] < m <= t[c]]
        compress.append(n + c - 1 if s >= 128 else n - c)
    expand = [0] * (2 * n)
    for c in range(1, n + 1):
        half = int(mpmath.floor((v[c] + v[c - 1]) / 2))
        expand[n + c - 1] = 128 + half
        expand[n - c] = 127 - half
    return compress, expand


@pytest.mark.parametrize("bits", range(1, 9))
def test_tables_match_oracle(bits):
    compress, expand = oracle_tables(bits)
    tables = build_tables(bits)
    assert tables.steps == 2 ** (bits - 1)
    assert tables.compress.tolist() == compress
    assert tables.expand.tolist() == expand


@pytest.mark.parametrize("bits", range(1, 9))
def test_max_error_golden(bits):
    compress, expand = oracle_tables(bits)
    oracle_err = max(abs(expand[compress[s]] - s) for s in range(256))
    assert oracle_err == MAX_ERR[bits]
    assert max_error(build_tables(bits)) == MAX_ERR[bits]


def test_max_error_monotone():
    errs = [MAX_ERR[b] for b in range(1, 9)]
    assert errs == sorted(errs, reverse=True)


def test_one_bit_tables():
    t = build_tables(1)
    assert t.compress.tolist() == [0] * 128 + [1] * 128
    assert t.expand.tolist() == [63, 192]


@pytest.mark.parametrize("bits", [0, 9, -1, 2.5, True])
def test_bits_out_of_range(bits):
    with pytest.raises(BitsOutOfRange):
        build_tables(bits)


@pytest.mark.parametrize("bits", range(1, 9))
def test_table_shape_properties(bits):
    t = build_tables(bits)
    n = t.steps
    assert np.all(np.diff(t.compress.astype(int)) >= 0)
    assert t.expand[n - 1] <= 127 < 128 <= t.expand[n]
    for k in range(n):
        assert int(t.expand[n + k]) + int(t.expand[n - 1 - k]) == 255
    for s in range(256):
        assert t.compress[255 - s] == 2 * n - 1 - t.compress[s]
    for c in range(2 * n):
        assert abs(int(t.compress[t.expand[c]]) - c) <= 1


@pytest.mark.parametrize("bits", range(1, 8))
def test_surjective_and_strictly_monotone_below_eight_bits(bits):
    t = build_tables(bits)
    assert set(t.compress.tolist()) == set(range(2 * t.steps))
    assert np.all(np.diff(t.expand.astype(int)) > 0)


def test_eight_bit_table_leaves_codes_unused():
    # the first buckets of the curve are narrower than one sample step
    t = build_tables(8)
    assert len(set(t.compress.tolist())) == 234


def test_tables_are_read_only():
    t = build_tables(3)
    with pytest.raises(ValueError):
        t.compress[0] = 1


def test_tables_equality():
    assert build_tables(4) == build_tables(4)
    assert build_tables(4) != build_tables(5)


def test_encode_one_bit_example():
    assert compand_encode(bytes([0x00, 0x80, 0xFF, 0x7F]), build_tables(1)) == b"\x60"


def test_decode_one_bit_example():
    assert compand_decode(b"\x60", build_tables(1), 4) == bytes([0x3F, 0xC0, 0xC0, 0x3F])


def test_decode_zero_samples():
    assert compand_decode(b"", build_tables(5), 0) == b""


def test_payload_too_short():
    with pytest.raises(PayloadTooShort):
        compand_decode(b"\x00", build_tables(4), 3)


def test_four_bit_size_for_j1():
    payload = compand_encode(bytes(34574), build_tables(4))
    assert len(payload) == 17287


@given(st.binary(max_size=500))
def test_eight_bit_size_unchanged(samples):
    assert len(compand_encode(samples, build_tables(8))) == len(samples)


@given(samples=st.binary(max_size=500), bits=st.integers(1, 8))
def test_roundtrip_error_bound(samples, bits):
    t = build_tables(bits)
    payload = compand_encode(samples, t)
    assert len(payload) == math.ceil(len(samples) * bits / 8)
    restored = compand_decode(payload, t, len(samples))
    assert len(restored) == len(samples)
    for a, b in zip(samples, restored):
        assert abs(a - b) <= MAX_ERR[bits]


def bitstring_pack(codes, bits):
    """Pack by building the literal bit string."""
    s = "".join(format(c, f"0{bits}b") for c in codes)
    s += "0" * (-len(s) % 8)
    return bytes(int(s[i : i + 8], 2) for i in range(0, len(s), 8))


@given(data=st.data(), bits=st.integers(1, 8))
def test_pack_matches_bitstring(data, bits):
    codes = data.draw(st.lists(st.integers(0, 2**bits - 1), max_size=200))
    packed = bitpack.pack(codes, bits)
    assert packed == bitstring_pack(codes, bits)
    assert bitpack.unpack(packed, bits, len(codes)).tolist() == codes


def test_pack_rejects_wide_code():
    with pytest.raises(ValueError):
        bitpack.pack([4], 2)


# 16-bit scalar mapping

def oracle_map(sample, m):
    return m * (mpmath.power(2, mpmath.mpf(abs(sample)) / 65536) - 1)


def oracle_unmap(mapped, m):
    return 65536 * mpmath.log(1 + mpmath.mpf(abs(mapped)) / m, 2)


M127 = MappingParams16(127)


def test_map16_worked_values():
    assert map16(60100, M127) == 113
    assert float(oracle_map(1000, 127)) == pytest.approx(1.35, abs=0.005)
    assert map16(1000, M127) == 1
    assert map16(0, M127) == 0
    assert map16(0, MappingParams16(32767)) == 0


def test_unmap16_worked_values():
    assert unmap16(1, M127) == 742
    exact = oracle_unmap(113, 127)
    assert unmap16(113, M127) == int(mpmath.nint(exact))
    assert abs(unmap16(113, M127) - 60172) <= 20
    assert unmap16(0, M127) == 0


@given(s=st.integers(-65535, 65535), m=st.sampled_from([1, 127, 255, 32767]))
def test_map16_matches_oracle(s, m):
    exact = oracle_map(s, m)
    got = map16(s, MappingParams16(m))
    assert abs(abs(got) - exact) <= mpmath.mpf("0.5") + mpmath.mpf("1e-9")
    assert map16(-s, MappingParams16(m)) == -got


def test_map16_monotone_and_odd():
    p = MappingParams16(32767)
    values = [map16(s, p) for s in range(-32767, 32768)]
    assert all(a <= b for a, b in zip(values, values[1:]))
    assert values[0] == -values[-1]


def test_unmap16_monotone_and_odd():
    p = MappingParams16(127)
    values = [unmap16(c, p) for c in range(-127, 128)]
    assert all(a <= b for a, b in zip(values, values[1:]))
    assert all(unmap16(-c, p) == -unmap16(c, p) for c in range(128))


def test_unmap16_range_check():
    with pytest.raises(ValueError):
        unmap16(128, M127)
    with pytest.raises(ValueError):
        map16(70000, M127)
    with pytest.raises(ValueError):
        MappingParams16(0)
