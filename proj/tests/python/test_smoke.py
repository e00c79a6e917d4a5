import random

import pytest

import mpcscipher as mc


def random_pixels(rng, w, h):
    return bytes(rng.randrange(256) for _ in range(w * h * 3))


def test_key_generation_deterministic():
    assert mc.generate_key(1) == mc.generate_key(1)
    assert mc.generate_key(1) != mc.generate_key(2)
    assert "theta" in mc.generate_key()


def test_round_trip():
    rng = random.Random(7)
    w, h = 16, 12
    pixels = random_pixels(rng, w, h)
    key = mc.generate_key(3)
    container = mc.encrypt(w, h, pixels, key)
    assert isinstance(container, bytes)
    assert container[:4] == b"MPCS"
    back_w, back_h, back = mc.decrypt(container, key)
    assert (back_w, back_h) == (w, h)
    assert back == pixels


def test_encrypt_is_deterministic():
    key = mc.generate_key(4)
    pixels = bytes(range(48)) * 2
    assert mc.encrypt(4, 8, pixels, key) == mc.encrypt(4, 8, pixels, key)


def test_input_validation():
    key = mc.generate_key(5)
    with pytest.raises(ValueError):
        mc.encrypt(4, 4, b"\x00" * 7, key)
    with pytest.raises(ValueError):
        mc.encrypt(4, 4, b"\x00" * 48, "not a key file")
    with pytest.raises(mc.FormatError):
        mc.decrypt(b"JUNKJUNKJUNKJUNKJUNKJUNK", key)


def test_ppm_round_trip():
    rng = random.Random(9)
    pixels = random_pixels(rng, 5, 3)
    data = mc.write_ppm(5, 3, pixels)
    assert data.startswith(b"P6\n5 3\n255\n")
    assert mc.read_ppm(data) == (5, 3, pixels)
    with pytest.raises(mc.FormatError):
        mc.read_ppm(b"P5 1 1 255 x")


def test_metrics():
    flat = bytes([70]) * (8 * 8 * 3)
    assert mc.entropy(8, 8, flat) == (0.0, 0.0, 0.0)
    assert mc.mean_gray(8, 8, flat) == (70.0, 70.0, 70.0)
    assert mc.npcr(8, 8, flat, flat) == (0.0, 0.0, 0.0)
    assert mc.uaci(8, 8, flat, flat) == (0.0, 0.0, 0.0)
    assert mc.chi_square(8, 8, flat)[0] > 0.0
    with pytest.raises(ValueError):
        mc.correlation(8, 8, flat, "sideways")


def test_cipher_statistics():
    rng = random.Random(11)
    w, h = 32, 32
    pixels = random_pixels(rng, w, h)
    key = mc.generate_key(6)
    container = mc.encrypt(w, h, pixels, key)
    mn = w * h
    payload = container[21:]
    cipher = bytes(
        payload[plane * mn + p] for p in range(mn) for plane in range(3)
    )
    n = mc.npcr(w, h, pixels, cipher)
    assert all(v > 95.0 for v in n)


def test_battery():
    verdicts = mc.battery(bytes([0, 1] * 64))
    assert [v["name"] for v in verdicts][:2] == ["frequency", "block-frequency"]
    assert len(verdicts) == 10
    freq = verdicts[0]
    assert freq["p_value"] == 1.0 and freq["passed"] and not freq["skipped"]
    rank = next(v for v in verdicts if v["name"] == "rank")
    assert rank["skipped"] and rank["note"]
    with pytest.raises(ValueError):
        mc.battery(b"\x02\x00")


def test_keystream_sequences():
    rng = random.Random(13)
    w, h = 8, 8
    pixels = random_pixels(rng, w, h)
    seqs = mc.keystream_sequences(w, h, pixels, mc.generate_key(8))
    assert sorted(seqs) == sorted(
        f"{c}{i}" for c in "XYZ" for i in range(1, 5)
    )
    for bits in seqs.values():
        assert len(bits) == w * h
        assert set(bits) <= {0, 1}
