"""Smoke tests for the edmatch python bindings."""

import numpy as np
import pytest

import edmatch


@pytest.fixture
def rng():
    return np.random.default_rng(7)


def random_map(rng, c=3, h=8, w=8):
    return rng.standard_normal((c, h, w)).astype(np.float32)


def test_ehs_is_exact_permutation(rng):
    content = random_map(rng)
    style = random_map(rng)
    out = edmatch.ehs(content, style, filters=5)
    assert out.shape == content.shape
    for c in range(3):
        assert np.array_equal(np.sort(out[c].ravel()), np.sort(style[c].ravel()))


def test_edm_matches_style_statistics(rng):
    content = random_map(rng, c=4, h=16, w=16)
    style = random_map(rng, c=4, h=16, w=16)
    out = edmatch.edm(content, style)
    assert np.allclose(out.mean(axis=(1, 2)), style.mean(axis=(1, 2)), atol=1e-4)
    assert np.allclose(out.std(axis=(1, 2)), style.std(axis=(1, 2)), atol=1e-4)


def test_adain(rng):
    content = random_map(rng)
    style = random_map(rng) * 2.0 + 1.0
    out = edmatch.adain(content, style)
    assert np.allclose(out.mean(axis=(1, 2)), style.mean(axis=(1, 2)), atol=1e-5)
    assert np.allclose(out.std(axis=(1, 2)), style.std(axis=(1, 2)), atol=1e-5)


def test_wct_matches_covariance(rng):
    content = random_map(rng, c=5, h=16, w=16)
    style = random_map(rng, c=5, h=16, w=16)
    out = edmatch.wct(content, style)
    cov_out = np.cov(out.reshape(5, -1), bias=True)
    cov_style = np.cov(style.reshape(5, -1), bias=True)
    assert np.linalg.norm(cov_out - cov_style) <= 1e-4 * np.linalg.norm(cov_style)


def test_strength_endpoints(rng):
    content = random_map(rng)
    stylized = random_map(rng)
    assert np.array_equal(edmatch.strength(content, stylized, 0.0), content)
    assert np.array_equal(edmatch.strength(content, stylized, 1.0), stylized)


def test_metric_report_zero_on_identity(rng):
    f = random_map(rng)
    report = edmatch.metric_report(f, f, seed=3)
    for name, value in report.items():
        assert value == 0.0, name


def test_swd_seeded_determinism(rng):
    a = random_map(rng)
    b = random_map(rng)
    assert edmatch.swd(a, b, seed=1) == edmatch.swd(a, b, seed=1)
    assert edmatch.swd(a, b, seed=1) != edmatch.swd(a, b, seed=2)


def test_collision_ratio_monotone(rng):
    f = np.floor(rng.uniform(0, 6, (2, 12, 12))).astype(np.float32)
    ratios = [np.mean(edmatch.collision_ratio(f, filters=k)) for k in range(1, 11)]
    assert all(b <= a + 1e-12 for a, b in zip(ratios, ratios[1:]))


def test_default_bank():
    bank = edmatch.default_bank(10)
    assert len(bank) == 10
    assert bank[0].shape == (1, 1) and bank[0][0, 0] == 1.0
    for kern in bank:
        assert abs(kern.sum() - 1.0) < 1e-9


def test_feature_file_roundtrip(tmp_path, rng):
    f = random_map(rng)
    path = str(tmp_path / "map.edmf")
    edmatch.write_feature_file(path, f)
    assert np.array_equal(edmatch.read_feature_file(path), f)


def test_lab_roundtrip(rng):
    rgb = rng.uniform(0, 255, (3, 6, 6)).astype(np.float32)
    back = edmatch.lab_to_rgb(edmatch.rgb_to_lab(rgb))
    assert np.allclose(back, rgb, atol=1e-2)


def test_interpolate_single_weight(rng):
    content = random_map(rng)
    s1, s2 = random_map(rng), random_map(rng)
    single = edmatch.edm(content, s1)
    assert np.array_equal(
        edmatch.interpolate(content, [s1, s2], [1.0, 0.0]), single
    )


def test_errors():
    a = np.zeros((2, 3, 3), dtype=np.float32)
    b = np.zeros((3, 3, 3), dtype=np.float32)
    with pytest.raises(Exception):
        edmatch.edm(a, b)
    with pytest.raises(Exception):
        edmatch.ehs(a, b)
