import pytest

from conftest import star_profile, theta_profile
from gridmorse import (build_graph, census_from_tree, census_split,
                       comb_census, comb_strategy, comb_tree, path_strategy,
                       path_tree, run_strategy, star_strategy, star_tree,
                       theta_strategy, theta_tree)


def path_profile(n):
    k, r = divmod(n, 3)
    if r == 1:
        return {}
    if r == 0:
        return {k - 1: 1}
    return {k: 1}


@pytest.mark.parametrize("n", range(1, 13))
def test_path_census(n):
    assert census_from_tree(path_tree(n)).counts == path_profile(n)


def test_path_examples():
    assert census_from_tree(path_tree(4)).counts == {}
    assert census_from_tree(path_tree(3)).counts == {0: 1}
    assert census_from_tree(path_tree(5)).counts == {1: 1}


@pytest.mark.parametrize("m", range(1, 5))
@pytest.mark.parametrize("n", range(1, 10))
def test_star_census(m, n):
    assert census_from_tree(star_tree(m, n)).counts == star_profile(m, n)


def test_star_examples():
    assert census_from_tree(star_tree(3, 3)).counts == {}
    assert census_from_tree(star_tree(3, 4)).counts == {3: 1}
    assert census_from_tree(star_tree(2, 2)).counts == {1: 1}


@pytest.mark.parametrize("m", range(2, 5))
@pytest.mark.parametrize("n", range(1, 9))
def test_theta_census(m, n):
    assert census_from_tree(theta_tree(m, n)).counts == theta_profile(m, n)


def test_theta_examples():
    assert census_from_tree(theta_tree(2, 2)).counts == {1: 2}
    assert census_from_tree(theta_tree(2, 1)).counts == {0: 1}
    assert census_from_tree(theta_tree(3, 3)).counts == {3: 1}


def test_comb_seed_censuses():
    assert comb_census(2, 1).counts == {1: 2}
    assert comb_census(3, 3).counts == {2: 1, 3: 1}
    assert comb_census(2, 2).counts == {2: 1}
    assert comb_census(4, 1).counts == {1: 1, 3: 1}
    assert comb_census(5, 2).counts == {5: 1}


def test_comb_recursion_value():
    assert comb_census(2, 4).counts == {3: 5}


def test_comb_degenerate_sizes():
    assert comb_census(2, 0).counts == {0: 1}
    assert comb_census(2, -1).counts == {}


def test_census_metadata():
    census = comb_census(3, 2)
    assert (census.m, census.n) == (3, 2)
    assert census.reduced_zero
    assert census.total() == 1
    assert census.euler() == -1
    assert census.to_json() == {"m": 3, "n": 2, "census": {"3": 1}}


def test_census_split_dead_teeth():
    # teeth whose star factor has length 0 mod 3, and the last tooth,
    # contribute nothing
    for m, n in [(2, 4), (2, 5), (3, 4)]:
        split = census_split(comb_tree(m, n))
        for k in range(1, n + 1):
            if (k - 1) % 3 == 0 or k == n:
                assert k not in split, (m, n, k)
        total = {}
        for counts in split.values():
            for d, c in counts.items():
                total[d] = total.get(d, 0) + c
        assert total == comb_census(m, n).counts


def test_strategies_are_pure():
    g = build_graph("delta", m=2, n=3)
    strat = comb_strategy(2, 3)
    tree = comb_tree(2, 3)
    for node in tree.nodes:
        if node.step is not None and node.residual:
            assert strat(g, node) == node.step


def test_strategy_parameter_validation():
    with pytest.raises(ValueError):
        path_strategy(0)
    with pytest.raises(ValueError):
        star_strategy(0, 2)
    with pytest.raises(ValueError):
        theta_strategy(1, 2)
    with pytest.raises(ValueError):
        comb_strategy(2, -2)


def test_script_names():
    assert star_strategy(2, 3).name == "star(m=2,n=3)"
    assert comb_strategy(3, 1).name == "comb(m=3,n=1)"


def test_tree_reuse_across_runs_deterministic():
    one = comb_tree(3, 3).to_json()
    two = comb_tree(3, 3).to_json()
    assert one == two
