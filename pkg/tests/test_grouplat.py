import json

import pytest

from brauer_workbench.exactnum import factorize
from brauer_workbench.grouplat import (
    FIXTURE_NAMES,
    FiniteGroup,
    fixture_groups,
    is_cyclic,
    is_m_group,
    load_fixture,
    maximal_subgroups,
    named_group,
    subgroups,
)

KNOWN_COUNTS = {"C4": 3, "C6": 4, "S3": 6, "C2xC2": 5, "Q8": 6, "D4": 10, "A4": 10,
                "D6": 16, "C2xC4": 8, "C3xC3": 6, "C12": 6, "C32": 6}


def _brute_subgroups(G):
    n = G.order
    return sorted(m for m in range(1, 1 << n) if G.is_subgroup(m))


@pytest.mark.parametrize("name", ["C4", "C6", "S3", "C2xC2", "Q8", "D4", "C2xC4", "C3", "C8"])
def test_lattice_matches_subset_oracle(name):
    G = named_group(name)
    assert sorted(subgroups(G).subgroups) == _brute_subgroups(G)


@pytest.mark.parametrize("name,count", sorted(KNOWN_COUNTS.items()))
def test_known_subgroup_counts(name, count):
    assert len(subgroups(named_group(name)).subgroups) == count


def _is_prime_power(n):
    return n > 1 and len(factorize(n)) == 1


def test_m_group_dichotomy_over_fixtures():
    groups = fixture_groups()
    assert [g.name for g in groups] == FIXTURE_NAMES
    for G in groups:
        if G.order == 1:
            with pytest.raises(ValueError):
                is_m_group(G)
            continue
        cyc, _ = is_cyclic(G)
        assert is_m_group(G) == (cyc and _is_prime_power(G.order)), G.name


def test_specific_verdicts():
    assert is_m_group(named_group("C4"))
    assert not is_m_group(named_group("C6"))
    assert not is_m_group(named_group("S3"))
    assert is_cyclic(named_group("C2xC2")) == (False, None)
    assert is_cyclic(named_group("C2xC3"))[0]
    assert len(maximal_subgroups(named_group("Q8"))) == 3


def test_group_table_validation():
    with pytest.raises(ValueError):
        FiniteGroup([[0, 1], [0, 1]])
    with pytest.raises(ValueError):
        FiniteGroup([[0, 1, 2], [1, 2, 0], [2, 1, 0]])
    with pytest.raises(ValueError):
        FiniteGroup([])
    with pytest.raises(ValueError):
        named_group("Z5")


def test_fixture_loading(tmp_path):
    path = tmp_path / "s3.json"
    path.write_text(json.dumps({"name": "S3p", "generators": [[1, 2, 0], [1, 0, 2]]}))
    G = load_fixture(path)
    assert G.order == 6 and not is_m_group(G)
    path.write_text(json.dumps(named_group("C4").to_json()))
    assert is_m_group(load_fixture(path))
    path.write_text(json.dumps({"name": "bad"}))
    with pytest.raises(ValueError):
        load_fixture(path)
