import pytest

from exactchroma.bounds import bound_largepow_exponent, bound_main1, bound_main2, bound_tw


def test_main1_formulas():
    assert bound_main1(3, 5) == 18
    assert bound_main1(3, 4, 4) == 60
    assert bound_main1(2, 3) == 4
    assert bound_main1(2, 2, 6) == 18


def test_main1_odd_ignores_delta():
    assert bound_main1(4, 7) == bound_main1(4, 7, 1000)


def test_main2_formulas():
    assert bound_main2(3, 5, {3, 5}) == 54
    assert bound_main2(3, 5, {3, 5}, q=0) == 54
    # C(4,2)^2 * 5^1 * (6+1)
    assert bound_main2(4, 6, {3, 6}, delta=5) == 36 * 5 * 7
    # 1 in S: t * C(t,2)^(s-1) * delta^q * (p+1)
    assert bound_main2(3, 4, {1, 4}, delta=2) == 3 * 3 * 2 * 5
    assert bound_main2(5, 1, {1}) == 10


def test_main2_single_distance_matches_main1():
    for t in range(2, 6):
        for p in range(2, 9):
            assert bound_main2(t, p, {p}, delta=3) == bound_main1(t, p, 3)


def test_tw_formulas():
    # t C(p+t-1, t) + 1 with t=2, p=3: 2*C(4,2)+1
    assert bound_tw(2, 3) == 13
    # (t C(p+t, t) + 1) delta with t=2, p=2, delta=4: (2*6+1)*4
    assert bound_tw(2, 2, 4) == 52


def test_largepow_exponent():
    assert [bound_largepow_exponent(p) for p in range(1, 7)] == [0, 1, 1, 2, 2, 3]


@pytest.mark.parametrize(
    "call",
    [
        lambda: bound_main1(1, 3),
        lambda: bound_main1(3, 0),
        lambda: bound_main1(3, 2),
        lambda: bound_main2(3, 5, set()),
        lambda: bound_main2(3, 5, {6}),
        lambda: bound_main2(3, 5, {2}),
        lambda: bound_main2(3, 5, {3, 5}, q=1),
        lambda: bound_tw(1, 3),
        lambda: bound_largepow_exponent(0),
    ],
)
def test_bound_errors(call):
    with pytest.raises(ValueError):
        call()
