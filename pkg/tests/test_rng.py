from pipekit.rng import Xoshiro256, splitmix64


def test_splitmix64_reference_outputs():
    st, out = 1234567, []
    for _ in range(5):
        st, x = splitmix64(st)
        out.append(x)
    assert out == [6457827717110365317, 3203168211198807973, 9817491932198370423,
                   4593380528125082431, 16408922859458223821]


def test_xoshiro_reference_outputs():
    r = Xoshiro256(0)
    r.s = [1, 2, 3, 4]
    assert [r.next_u64() for _ in range(4)] == [11520, 0, 1509978240, 1215971899390074240]


def test_seeding_and_uniform():
    a, b = Xoshiro256(5), Xoshiro256(5)
    assert [a.next_u64() for _ in range(3)] == [b.next_u64() for _ in range(3)]
    u = Xoshiro256(9).uniform(-1.0, 1.0, (50, 4))
    assert u.shape == (50, 4)
    assert u.min() >= -1.0 and u.max() < 1.0
    assert 0.0 <= Xoshiro256(1).random() < 1.0


def test_integers_in_range():
    r = Xoshiro256(11)
    vals = [r.integers(7) for _ in range(300)]
    assert set(vals) == set(range(7))
