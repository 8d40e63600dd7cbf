import pytest

from sweepmap.scheduling import Schedule, inspector_check, schedule_all, schedule_latest

LENGTHS = (1, 3, 3, 1, 4, 2, 1)


def test_latest():
    s = schedule_latest(5, LENGTHS)
    assert s.starts == (1, 2, 2, 4, 5, 5, 5)
    assert s.load() == (3, 3, 3, 3, 3)
    assert str(s.partition()) == "1|33||1|421"


def test_all_earliest_first():
    got = [s.starts for s in schedule_all(5, LENGTHS)]
    assert len(got) == 5
    assert got[0] == (1, 1, 2, 2, 3, 4, 5)
    assert got[-1] == (1, 2, 2, 4, 5, 5, 5)


def test_inspector():
    assert inspector_check(Schedule(5, LENGTHS, (1, 2, 2, 4, 5, 5, 5))) == (True, (5, 4, 6, 2, 7, 1, 3))
    assert inspector_check(Schedule(5, LENGTHS, (1, 1, 2, 2, 3, 4, 5))) == (False, (7, 1, 3))


def test_inspector_needs_equitable():
    with pytest.raises(ValueError):
        inspector_check(Schedule(5, LENGTHS, (1,) * 7))


@pytest.mark.parametrize("starts", [(1, 2), (0,) * 7, (2, 1, 1, 1, 1, 1, 1)])
def test_bad_schedules(starts):
    with pytest.raises(ValueError):
        Schedule(5, LENGTHS, starts)


def test_bad_lengths():
    with pytest.raises(ValueError):
        schedule_latest(5, (5,))


def test_to_dict():
    d = schedule_latest(5, LENGTHS).to_dict(successful=True)
    assert d == {"hours": 5, "lengths": list(LENGTHS), "starts": [1, 2, 2, 4, 5, 5, 5], "successful": True}


def test_zero_workload():
    assert schedule_latest(3, (0, 0, 0)).starts == (3, 3, 3)
    # zero-hour tasks can start anywhere, so every ordered placement is equitable
    assert len(schedule_all(3, (0, 0, 0))) == 10
    assert inspector_check(Schedule(5, (), ())) == (True, ())
