import pytest

from freecumulants import oracle
from freecumulants.partitions import NcPartition, SetPartition, enumerate_nc, kreweras, parse_partition


@pytest.mark.parametrize("n, bell", [(1, 1), (3, 5), (5, 52), (8, 4140)])
def test_bell_numbers(n, bell):
    assert len(oracle.oracle_all_partitions(n)) == bell
    assert len(set(oracle.oracle_all_partitions(n))) == bell


@pytest.mark.parametrize("n", range(1, 10))
def test_filtered_count_matches_engine(n):
    assert set(oracle.oracle_nc(n)) == set(enumerate_nc(n))


def test_literal_crossing_search():
    assert not oracle.oracle_is_noncrossing(SetPartition(4, [[1, 3], [2, 4]]))
    assert oracle.oracle_is_noncrossing(parse_partition("{(1,4,5,7),(2,3),(6)}"))


def test_join_extremes():
    for p in enumerate_nc(5):
        assert oracle.oracle_join(p, NcPartition.zero(5)) == p
        assert oracle.oracle_join(p, NcPartition.one(5)) == NcPartition.one(5)


def test_kreweras_example_at_eight():
    p = parse_partition("{(1,2,7),(3),(4,6),(5),(8)}")
    assert oracle.oracle_kreweras(p) == parse_partition("{(1),(2,3,6),(4,5),(7,8)}")


@pytest.mark.parametrize("n", range(1, 7))
def test_kreweras_matches_engine(n):
    assert oracle.oracle_kreweras(NcPartition.zero(n)) == NcPartition.one(n)
    for p in enumerate_nc(n):
        assert oracle.oracle_kreweras(p) == kreweras(p)


def test_moebius_small():
    assert oracle.oracle_moebius(NcPartition.zero(3), NcPartition.one(3)) == 2
    with pytest.raises(ValueError):
        oracle.oracle_moebius(NcPartition.one(3), NcPartition.zero(3))


def test_caps():
    with pytest.raises(oracle.OracleCapError):
        oracle.oracle_all_partitions(10)
    with pytest.raises(oracle.OracleCapError):
        oracle.oracle_join(NcPartition.one(9), NcPartition.one(9))
    with pytest.raises(oracle.OracleCapError):
        oracle.oracle_kreweras(NcPartition.one(9))
