import random

import pytest
from hypothesis import given, settings, strategies as st

from cftft import transform
from cftft.errors import BadLength, InvalidParams
from cftft.ring import default_ring
from cftft.transform import (ButterflyStats, SplitPolicy, StridedView, TransformParams,
                             bit_reverse, cf_itft, cf_tft, dft_naive, full_count, itft_base2,
                             itft_bound, smoothness_ok, split, tft_base2, tft_bound)

BAL, RAD = SplitPolicy.BALANCED, SplitPolicy.RADIX2


def horner_dft(p, omega, M, L, s, a):
    """ahat_j = zeta^{j'} * a(omega_L^{j'}), evaluated by Horner's rule."""
    ell = L.bit_length() - 1
    wL = pow(omega, M // L, p)
    zeta = pow(omega, s, p)
    out = []
    for j in range(L):
        jr = int(format(j, f"0{ell}b")[::-1], 2)
        x = pow(wL, jr, p)
        acc = 0
        for c in reversed(a):
            acc = (acc * x + c) % p
        out.append(pow(zeta, jr, p) * acc % p)
    return out


def test_bit_reverse():
    assert bit_reverse(1, 3) == 4
    assert bit_reverse(6, 3) == 3
    for ell in range(6):
        assert bit_reverse(0, ell) == 0
    assert sorted(bit_reverse(j, 5) for j in range(32)) == list(range(32))


def test_dft_naive_small(ctx17):
    assert dft_naive(ctx17, 2, 0, [3, 5]) == [8, 15]
    assert dft_naive(ctx17, 4, 0, [1, 0, 0, 0]) == [1, 1, 1, 1]
    assert dft_naive(ctx17, 4, 0, [1]) == [1, 1, 1, 1]


def test_dft_naive_frozen(ctx17):
    # zeta = omega_16^3, z = 5; values from horner_dft
    assert dft_naive(ctx17, 8, 3, [2, 7, 1, 8, 2]) == [3, 11, 3, 8, 5, 0, 1, 2]


def test_dft_naive_matches_horner(ctx, rng):
    for L in (2, 8, 32):
        for _ in range(4):
            a = [rng.randrange(ctx.p) for _ in range(rng.randint(1, L))]
            s = rng.randrange(ctx.M)
            assert dft_naive(ctx, L, s, a) == horner_dft(ctx.p, ctx.omega, ctx.M, L, s, a)


def test_dft_naive_errors(ctx17):
    with pytest.raises(BadLength):
        dft_naive(ctx17, 32, 0, [1])
    with pytest.raises(BadLength):
        dft_naive(ctx17, 6, 0, [1])
    with pytest.raises(InvalidParams):
        dft_naive(ctx17, 4, 0, [1] * 5)


def test_tft_base2_branches(ctx17):
    st_ = ButterflyStats()
    x = [3, 5]
    tft_base2(ctx17, 0, 2, 2, x, stats=st_)
    assert x == [8, 15]
    x = [7, 99]
    tft_base2(ctx17, 0, 1, 2, x, stats=st_)
    assert x == [7, 7]
    x = [3, 5]
    tft_base2(ctx17, 0, 2, 1, x, stats=st_)
    assert x[0] == 8
    x = [3, 5]
    tft_base2(ctx17, 0, 1, 1, x, stats=st_)
    assert x == [3, 5]
    assert st_.base_case_count == 4


def test_itft_base2_branches(ctx17):
    st_ = ButterflyStats()
    x = [8, 15]
    itft_base2(ctx17, 0, 2, 2, 0, x, stats=st_)
    assert x == [6, 10]
    x = [11, 0]
    itft_base2(ctx17, 0, 1, 0, 1, x, stats=st_)
    assert x[0] == 14
    x = [8, 10]
    itft_base2(ctx17, 0, 2, 1, 1, x, stats=st_)
    assert x == [6, 15]
    assert st_.base_case_count == 3


def test_itft_base2_all_lines_against_oracle(ctx17):
    """Every admissible (z, n, f) at L = 2 against dft_naive with zeta = omega^5."""
    p, s = 17, 5
    for z in (1, 2):
        a = [4, 9][:z]
        ref = dft_naive(ctx17, 2, s, a)
        for n in range(0, z + 1):
            for f in (0, 1):
                if not 1 <= n + f <= 2:
                    continue
                x = ref[:n] + [2 * v % p for v in a[n:]] + [13] * (2 - z)
                itft_base2(ctx17, s, z, n, f, x)
                assert x[:n] == [2 * v % p for v in a[:n]]
                if f:
                    assert x[n] == ref[n]


def test_split():
    assert split(6, BAL) == (3, 3)
    assert split(5, BAL) == (2, 3)
    assert split(5, RAD) == (1, 4)
    for ell in range(2, 20):
        for pol in SplitPolicy:
            a, b = split(ell, pol)
            assert a + b == ell and a >= 1 and b >= 1
    with pytest.raises(ValueError):
        split(1)


def test_bounds():
    assert tft_bound(2, 1) == 1
    assert tft_bound(8, 8) == 12
    assert itft_bound(2, 0, 1) == 1
    assert full_count(8) == 12


def test_delta_input_p17(ctx17):
    x = [1] + [0] * 15
    cf_tft(ctx17, TransformParams(16, 0, 16, 16), x)
    assert x == [1] * 16


def _tft_case(ctx, rng, L, z, n, s, policy):
    a = [rng.randrange(ctx.p) for _ in range(z)]
    x = a + [rng.randrange(ctx.p) for _ in range(L - z)]
    st_ = ButterflyStats()
    cf_tft(ctx, TransformParams(L, s, z, n), x, policy, st_)
    return a, x, st_.base_case_count


@pytest.mark.parametrize("policy", list(SplitPolicy))
@pytest.mark.parametrize("L", [2, 4, 8, 16, 32])
def test_tft_oracle_exhaustive(ctx, rng, L, policy):
    for z in range(1, L + 1):
        for n in range(1, L + 1):
            s = rng.randrange(ctx.M)
            a, x, count = _tft_case(ctx, rng, L, z, n, s, policy)
            assert x[:n] == dft_naive(ctx, L, s, a)[:n], (L, z, n)
            assert count <= tft_bound(L, n)
            assert smoothness_ok(L, n, count)


@pytest.mark.parametrize("policy", list(SplitPolicy))
@pytest.mark.parametrize("L", [2, 4, 8, 16, 32])
def test_itft_inversion_exhaustive(ctx, rng, L, policy):
    p = ctx.p
    for z in range(1, L + 1):
        a = [rng.randrange(p) for _ in range(z)]
        s = rng.randrange(ctx.M)
        ref = dft_naive(ctx, L, s, a)
        for n in range(0, z + 1):
            for f in (0, 1):
                if not 1 <= n + f <= L:
                    continue
                x = ref[:n] + [L * v % p for v in a[n:]] + [rng.randrange(p) for _ in range(L - z)]
                st_ = ButterflyStats()
                cf_itft(ctx, TransformParams(L, s, z, n, f), x, policy, st_)
                assert x[:n] == [L * v % p for v in a[:n]], (L, z, n, f)
                if f:
                    assert x[n] == ref[n]
                assert st_.base_case_count <= itft_bound(L, n, f)


@pytest.mark.parametrize("policy", list(SplitPolicy))
def test_round_trip_full(ctx, rng, policy):
    for ell in range(1, 7):
        L = 1 << ell
        a = [rng.randrange(ctx.p) for _ in range(L)]
        x = list(a)
        st_ = ButterflyStats()
        cf_tft(ctx, TransformParams(L, 0, L, L), x, policy, st_)
        cf_itft(ctx, TransformParams(L, 0, L, L, 0), x, policy, st_)
        assert x == [L * v % ctx.p for v in a]
        assert st_.base_case_count == 2 * full_count(L)


def test_policies_agree(ctx, rng):
    for L in (16, 64, 128):
        for _ in range(10):
            z, n, s = rng.randint(1, L), rng.randint(1, L), rng.randrange(ctx.M)
            a = [rng.randrange(ctx.p) for _ in range(z)]
            xb = a + [0] * (L - z)
            xr = list(xb)
            cf_tft(ctx, TransformParams(L, s, z, n), xb, BAL)
            cf_tft(ctx, TransformParams(L, s, z, n), xr, RAD)
            assert xb[:n] == xr[:n]


def test_strided_view_transform(ctx, rng):
    L, stride, base = 16, 3, 2
    outer = [rng.randrange(ctx.p) for _ in range(base + stride * L + 5)]
    before = list(outer)
    view = StridedView(outer, base, stride, L)
    z, n, s = 11, 13, rng.randrange(ctx.M)
    a = view.tolist()[:z]
    cf_tft(ctx, TransformParams(L, s, z, n), view, BAL)
    assert view.tolist()[:n] == dft_naive(ctx, L, s, a)[:n]
    inside = {base + i * stride for i in range(L)}
    for i, (u, v) in enumerate(zip(before, outer)):
        if i not in inside:
            assert u == v


def test_strided_view_geometry():
    buf = list(range(64))
    v = StridedView(buf, 4, 2, 16)   # 4 x 4 matrix on buf[4::2]
    assert v.column(1, 4, 4).tolist() == [6, 14, 22, 30]
    assert v.row(2, 4).tolist() == [20, 22, 24, 26]
    v[3] = -1
    assert buf[10] == -1
    with pytest.raises(IndexError):
        StridedView(buf, 60, 2, 3)
    with pytest.raises(IndexError):
        v[16]


def test_invalid_params(ctx17):
    x = [0] * 8
    with pytest.raises(InvalidParams):
        cf_tft(ctx17, TransformParams(8, 0, 0, 4), x)
    with pytest.raises(InvalidParams):
        cf_tft(ctx17, TransformParams(8, 0, 4, 9), x)
    with pytest.raises(InvalidParams):
        cf_itft(ctx17, TransformParams(8, 0, 3, 4, 0), x)   # z < n
    with pytest.raises(InvalidParams):
        cf_itft(ctx17, TransformParams(8, 0, 8, 8, 1), x)   # n + f > L
    with pytest.raises(InvalidParams):
        cf_itft(ctx17, TransformParams(8, 0, 4, 0, 0), x)   # n + f = 0
    with pytest.raises(InvalidParams):
        cf_tft(ctx17, TransformParams(8, 0, 4, 4), [0] * 7)
    with pytest.raises(BadLength):
        cf_tft(ctx17, TransformParams(32, 0, 4, 4), [0] * 32)


def test_full_count_exact(ctx):
    for ell in range(1, 9):
        L = 1 << ell
        for policy in SplitPolicy:
            st_ = ButterflyStats()
            cf_tft(ctx, TransformParams(L, 0, L, L), [0] * L, policy, st_)
            assert st_.base_case_count == L * ell // 2


@settings(max_examples=60, deadline=None)
@given(ell=st.integers(1, 9), data=st.data())
def test_tft_matches_oracle_property(ell, data):
    ctx = default_ring()
    L = 1 << ell
    z = data.draw(st.integers(1, L))
    n = data.draw(st.integers(1, L))
    s = data.draw(st.integers(0, ctx.M - 1))
    policy = data.draw(st.sampled_from(list(SplitPolicy)))
    seed = data.draw(st.integers(0, 2**32))
    a, x, count = _tft_case(ctx, random.Random(seed), L, z, n, s, policy)
    assert x[:n] == dft_naive(ctx, L, s, a)[:n]
    assert 2 * count <= transform.tft_bound_x2(L, n)
