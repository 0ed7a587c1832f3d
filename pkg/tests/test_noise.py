import math

import numpy as np
import pytest

import sapdenoise as sd
from helpers import random_plane_array, splitmix64_ref
from sapdenoise.errors import DimensionMismatchError

# First counter-mode draws for seed 1, frozen so a constant change in the
# generator cannot slip through unnoticed.
_SEED1_DRAWS = (0x910A2DEC89025CC1, 0xBEEB8DA1658EEC67, 0xF893A2EEFB32555E)


def test_stream_matches_reference_scalars():
    got = sd.splitmix64_stream(seed=1, start=0, count=3)
    assert tuple(int(x) for x in got) == _SEED1_DRAWS
    for k in range(64):
        assert int(sd.splitmix64_stream(seed=12345, start=k, count=1)[0]) == splitmix64_ref(
            12345, k
        )


def test_stream_is_positional():
    whole = sd.splitmix64_stream(seed=9, start=0, count=100)
    tail = sd.splitmix64_stream(seed=9, start=60, count=40)
    assert np.array_equal(whole[60:], tail)


def test_spec_validation():
    with pytest.raises(ValueError):
        sd.NoiseSpec(density=1.5)
    with pytest.raises(ValueError):
        sd.NoiseSpec(density=0.5, salt_fraction=-0.1)
    with pytest.raises(ValueError):
        sd.NoiseSpec(density=0.5, seed=-1)


def test_density_zero_is_identity():
    img = sd.synthetic_gray(32, 32, seed=2)
    assert sd.inject(img, sd.NoiseSpec(density=0.0, seed=4)) == img


def test_density_one_saturates():
    img = sd.synthetic_gray(32, 32, seed=2)
    out = np.frombuffer(sd.inject(img, sd.NoiseSpec(density=1.0, seed=4)).data, np.uint8)
    assert set(np.unique(out)) <= {0, 255}


def test_injection_matches_scalar_reference():
    """The vectorized injector must agree with a per-sample pure-int replay."""
    img = sd.Image(width=5, height=4, channels=1, data=bytes([128] * 20))
    spec = sd.NoiseSpec(density=0.5, salt_fraction=0.25, seed=99)
    got = np.frombuffer(sd.inject(img, spec).data, np.uint8)
    t_corrupt = int(spec.density * (1 << 64))
    t_salt = int(spec.salt_fraction * (1 << 64))
    for i in range(20):
        if splitmix64_ref(99, 2 * i) < t_corrupt:
            expected = 255 if splitmix64_ref(99, 2 * i + 1) < t_salt else 0
        else:
            expected = 128
        assert got[i] == expected


def test_determinism_across_calls():
    img = sd.synthetic_gray(64, 64, seed=1)
    spec = sd.NoiseSpec(density=0.4, seed=77)
    assert sd.inject(img, spec) == sd.inject(img, spec)


def test_uncorrupted_positions_bit_identical():
    img = sd.synthetic_gray(64, 64, seed=1)
    noisy = sd.inject(img, sd.NoiseSpec(density=0.3, seed=5))
    a = np.frombuffer(img.data, np.uint8)
    b = np.frombuffer(noisy.data, np.uint8)
    changed = a != b
    assert np.all((b[changed] == 0) | (b[changed] == 255))


def test_corrupted_count_within_binomial_bound():
    # corpus intensities stay in [1, 254], so every corrupted sample differs
    img = sd.synthetic_gray(128, 128, seed=3)
    density = 0.3
    noisy = sd.inject(img, sd.NoiseSpec(density=density, seed=11))
    n = 128 * 128
    count = sd.corruption_rate(img, noisy) * n
    sigma = math.sqrt(n * density * (1 - density))
    assert abs(count - n * density) <= 4 * sigma


def test_salt_pepper_balance():
    img = sd.synthetic_gray(128, 128, seed=3)
    noisy = np.frombuffer(sd.inject(img, sd.NoiseSpec(density=0.5, seed=13)).data, np.uint8)
    salt = int(np.count_nonzero(noisy == 255))
    pepper = int(np.count_nonzero(noisy == 0))
    sigma = math.sqrt((salt + pepper) * 0.25)
    assert abs(salt - pepper) <= 2 * 4 * sigma  # salt - pepper = 2*salt - total


def test_color_channels_corrupted_independently():
    img = sd.synthetic_rgb(96, 96, seed=5)
    noisy = sd.inject(img, sd.NoiseSpec(density=0.3, seed=21))
    for orig_plane, noisy_plane in zip(sd.split_channels(img), sd.split_channels(noisy)):
        per_channel = sd.Image(96, 96, 1, orig_plane.data), sd.Image(96, 96, 1, noisy_plane.data)
        rate = sd.corruption_rate(*per_channel)
        n = 96 * 96
        sigma = math.sqrt(n * 0.3 * 0.7) / n
        assert abs(rate - 0.3) <= 4 * sigma


def test_corruption_rate_trivials():
    img = sd.Image(width=2, height=1, channels=1, data=bytes([128, 128]))
    assert sd.corruption_rate(img, img) == 0.0
    all_salt = sd.Image(width=2, height=1, channels=1, data=bytes([255, 255]))
    assert sd.corruption_rate(img, all_salt) == 1.0


def test_corruption_rate_tracks_density():
    rng = np.random.default_rng(8)
    img = sd.Image.from_array(random_plane_array(rng, 128, 128))
    arr = img.to_array()
    density = 0.4
    noisy = sd.inject(img, sd.NoiseSpec(density=density, seed=3))
    # a corrupted sample is invisible when it already matched the injected value
    p_match = 0.5 * np.mean(arr == 0) + 0.5 * np.mean(arr == 255)
    expected = density * (1 - p_match)
    n = arr.size
    sigma = math.sqrt(expected * (1 - expected) / n)
    assert abs(sd.corruption_rate(img, noisy) - expected) <= 5 * sigma


def test_corruption_rate_dimension_mismatch():
    a = sd.Image(width=1, height=1, channels=1, data=bytes([1]))
    b = sd.Image(width=2, height=1, channels=1, data=bytes([1, 2]))
    with pytest.raises(DimensionMismatchError):
        sd.corruption_rate(a, b)
