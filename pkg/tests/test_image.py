import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import sapdenoise as sd
from sapdenoise.errors import DimensionMismatchError, PnmParseError


def test_load_pgm_basic():
    img = sd.load_pnm(b"P5\n2 2\n255\n" + bytes([0, 255, 10, 200]))
    assert (img.width, img.height, img.channels) == (2, 2, 1)
    assert img.data == bytes([0, 255, 10, 200])


def test_load_ppm_basic():
    img = sd.load_pnm(b"P6\n1 1\n255\n" + bytes([1, 2, 3]))
    assert (img.width, img.height, img.channels) == (1, 1, 3)
    assert img.data == bytes([1, 2, 3])


def test_save_canonical_gray():
    img = sd.Image(width=1, height=1, channels=1, data=bytes([0]))
    assert sd.save_pnm(img) == b"P5\n1 1\n255\n\x00"


def test_save_canonical_rgb():
    img = sd.Image(width=1, height=1, channels=3, data=bytes([255, 0, 255]))
    assert sd.save_pnm(img) == b"P6\n1 1\n255\n\xff\x00\xff"


def test_roundtrip_512():
    img = sd.synthetic_gray(512, 512, seed=7)
    encoded = sd.save_pnm(img)
    assert sd.save_pnm(sd.load_pnm(encoded)) == encoded
    assert sd.load_pnm(encoded) == img


def test_header_comments_accepted_never_emitted():
    raw = b"P5\n# a comment\n2 1 # trailing\n255\n" + bytes([7, 8])
    img = sd.load_pnm(raw)
    assert (img.width, img.height) == (2, 1)
    assert b"#" not in sd.save_pnm(img)


def test_header_whitespace_variants():
    img = sd.load_pnm(b"P5 2\t2\r255\n" + bytes(4))
    assert (img.width, img.height) == (2, 2)


@pytest.mark.parametrize(
    "raw, offset_hint",
    [
        (b"P4\n1 1\n255\n\x00", 0),  # unsupported magic
        (b"P5\n1 1\n254\n\x00", 7),  # wrong maxval
        (b"P5\n1 1\n", 7),  # header cut short
        (b"P5\nx 1\n255\n\x00", 3),  # non-numeric width
        (b"P5\n4 4\n255\n" + bytes(7), 11 + 7),  # truncated pixels
    ],
)
def test_parse_errors_carry_offset(raw, offset_hint):
    with pytest.raises(PnmParseError) as exc:
        sd.load_pnm(raw)
    assert exc.value.offset == offset_hint
    assert f"byte {offset_hint}" in str(exc.value)


def test_zero_dimension_rejected():
    with pytest.raises(PnmParseError):
        sd.load_pnm(b"P5\n0 1\n255\n")


def test_image_invariants_enforced():
    with pytest.raises(ValueError):
        sd.Image(width=2, height=2, channels=1, data=bytes(3))
    with pytest.raises(ValueError):
        sd.Image(width=1, height=1, channels=2, data=bytes(2))
    with pytest.raises(ValueError):
        sd.Plane(width=0, height=1, data=b"")
    with pytest.raises(ValueError):
        sd.Image.from_array(np.array([[300]]))


def test_split_channels_gray_is_identity():
    img = sd.Image(width=2, height=1, channels=1, data=bytes([3, 4]))
    planes = sd.split_channels(img)
    assert len(planes) == 1
    assert planes[0].data == img.data


def test_split_channels_rgb():
    img = sd.Image(width=1, height=1, channels=3, data=bytes([9, 8, 7]))
    planes = sd.split_channels(img)
    assert [p.data for p in planes] == [bytes([9]), bytes([8]), bytes([7])]
    assert sd.merge_channels(planes) == img


def test_merge_channels_validates():
    a = sd.Plane(width=1, height=1, data=bytes([1]))
    b = sd.Plane(width=2, height=1, data=bytes([1, 2]))
    with pytest.raises(DimensionMismatchError):
        sd.merge_channels([a, a, b])
    with pytest.raises(ValueError):
        sd.merge_channels([a, a])


@st.composite
def images(draw):
    width = draw(st.integers(1, 12))
    height = draw(st.integers(1, 12))
    channels = draw(st.sampled_from([1, 3]))
    data = draw(
        st.binary(min_size=width * height * channels, max_size=width * height * channels)
    )
    return sd.Image(width=width, height=height, channels=channels, data=data)


@settings(max_examples=60, deadline=None)
@given(images())
def test_pnm_roundtrip_property(img):
    assert sd.load_pnm(sd.save_pnm(img)) == img


@settings(max_examples=60, deadline=None)
@given(images())
def test_split_merge_roundtrip_property(img):
    assert sd.merge_channels(sd.split_channels(img)) == img
