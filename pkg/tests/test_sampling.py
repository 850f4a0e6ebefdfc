"""Parameter samples: hashing, validation demands, deterministic streams."""

from fractions import Fraction as F

import pytest

from nektau.sampling import ParameterSample, sample_stream, sample_validate


def test_sample_is_frozen_and_hashable():
    s = ParameterSample(t=F(1, 3), dq=8, sigma=F(3, 8))
    assert hash(s) == hash(ParameterSample(t=F(1, 3), dq=8, sigma=F(3, 8)))
    with pytest.raises(Exception):
        s.t = F(1, 2)


def test_derived_exponents():
    s = ParameterSample(t=F(1, 3), dq=8, sigma=F(1, 4))
    assert s.q_exp == 8
    assert s.u_exp == 2 * 8 * F(1, 4)


def test_describe_is_json_ready():
    d = ParameterSample(t=F(1, 3), dq=8, sigma=F(3, 8)).describe()
    assert d["t"] == [1, 3]
    assert d["dq"] == 8


def test_validate_accepts_generic_sample():
    s = ParameterSample(t=F(1, 3), dq=8, sigma=F(3, 8))
    assert sample_validate(s, [("nonzero", F(1, 2))])


def test_validate_rejects_resonant_demand():
    s = ParameterSample(t=F(1, 3), dq=8, sigma=F(3, 8))
    rejected = sample_validate(s, [("nonzero", F(0))])
    assert not rejected


def test_sample_stream_deterministic():
    a = list(sample_stream(7, 5))
    b = list(sample_stream(7, 5))
    assert a == b
    c = list(sample_stream(8, 5))
    assert a != c


def test_sample_stream_validated():
    for s in sample_stream(0, 8):
        assert s.dq % 4 == 0
        assert 0 < s.t < 1
        assert s.sigma != 0
