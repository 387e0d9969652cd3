import pytest

from stanleydepth.core import IdealError, parse_ideal
from stanleydepth.poset import build_poset, validate_partition
from stanleydepth.solver import (ci_bounds, depth_ci, exists_partition_at,
                                 irreducible_sdepth_formula, sdepth_exact)

from helpers import poset_family, random_ideal, solver_partitions
from oracle import naive_sdepth


def test_prime_pair_partition_at_one():
    poset = build_poset(parse_ideal("(x1,x2)"))
    part = exists_partition_at(poset, 1)
    report = validate_partition(poset, part)
    assert report.valid and report.min_rho >= 1


def test_prime_pair_no_partition_at_two():
    assert exists_partition_at(build_poset(parse_ideal("(x1,x2)")), 2) is None
    assert naive_sdepth([(1, 0), (0, 1)]) == 1


def test_level_zero_is_singletons():
    poset = build_poset(parse_ideal("(x1^2*x2,x3)"))
    part = exists_partition_at(poset, 0)
    assert all(iv.c == iv.d for iv in part.intervals)
    assert len(part.intervals) == len(poset)


def test_level_out_of_range():
    with pytest.raises(ValueError):
        exists_partition_at(build_poset(parse_ideal("(x1)")), 2)


def test_deterministic_certificate():
    poset = build_poset(parse_ideal("(x1,x2,x3,x4)"))
    assert exists_partition_at(poset, 2).intervals == exists_partition_at(poset, 2).intervals


@pytest.mark.parametrize("text, n, expected", [
    ("(x1,x2,x3)", 3, 2),              # ceil(3/2)
    ("(x1^2,x2^3)", 2, 1),             # exponents do not matter
    ("(x1*x2, x3*x4*x5)", 5, 4),       # both complete-intersection bounds equal 4
])
def test_sdepth_known_values(text, n, expected):
    result = sdepth_exact(parse_ideal(text, n))
    assert result.value == expected
    assert result.refutation_level == expected + 1
    report = validate_partition(result.certificate.poset, result.certificate)
    assert report.valid and report.min_rho == expected


def test_sdepth_two_disjoint_edges_matches_oracle():
    # frozen from the brute-force oracle: 3
    assert naive_sdepth([(1, 1, 0, 0), (0, 0, 1, 1)]) == 3
    assert sdepth_exact(parse_ideal("(x1*x2, x3*x4)")).value == 3


def test_refutation_really_fails():
    result = sdepth_exact(parse_ideal("(x1,x2,x3,x4)"))
    assert result.value == 2
    assert exists_partition_at(result.certificate.poset, 3) is None


def test_start_level_does_not_change_answer():
    ideal = parse_ideal("(x1*x2,x2*x3,x3*x4)")
    values = {sdepth_exact(ideal, start=k).value for k in range(1, 5)}
    assert len(values) == 1


def test_budget_gives_bracketing_unknown():
    ideal = parse_ideal("(x1,x2,x3,x4,x5,x6)")
    result = sdepth_exact(ideal, budget=2)
    assert not result.known and result.value is None
    assert result.lower <= 3 <= result.upper
    assert validate_partition(result.certificate.poset, result.certificate).min_rho >= result.lower


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("STANLEY_BUDGET", "1")
    assert not sdepth_exact(parse_ideal("(x1,x2,x3,x4,x5)")).known


@pytest.mark.parametrize("text, n, expected", [
    ("(x1*x2, x3*x4)", 4, (3, 3)),
    ("(x1,x2,x3)", 3, (1, 2)),
    ("(x1^2)", 1, (1, 1)),
])
def test_ci_bounds(text, n, expected):
    assert ci_bounds(parse_ideal(text, n)) == expected


@pytest.mark.parametrize("text, n, expected", [
    ("(x1,x2)", 2, 1),
    ("(x1*x2, x3*x4)", 4, 3),
    ("(x1^2*x3)", 5, 5),
])
def test_depth_ci(text, n, expected):
    assert depth_ci(parse_ideal(text, n)) == expected


def test_ci_only_functions_reject_other_ideals():
    ideal = parse_ideal("(x1*x2, x2*x3)")
    with pytest.raises(IdealError):
        ci_bounds(ideal)
    with pytest.raises(IdealError):
        depth_ci(ideal)


@pytest.mark.parametrize("m, n, expected", [(3, 3, 2), (2, 5, 4), (1, 1, 1), (1, 6, 6)])
def test_irreducible_formula(m, n, expected):
    assert irreducible_sdepth_formula(m, n) == expected


@pytest.mark.parametrize("m, n", [(0, 3), (4, 3)])
def test_irreducible_formula_range(m, n):
    with pytest.raises(ValueError):
        irreducible_sdepth_formula(m, n)


def test_monotone_and_sound(rng):
    for _ in range(40):
        ideal = random_ideal(rng, rng.randint(1, 4), max_exp=2)
        poset = build_poset(ideal)
        parts = solver_partitions(poset)
        # feasible levels form a prefix 0..s, each certificate is sound
        for k, part in enumerate(parts):
            report = validate_partition(poset, part)
            assert report.valid and report.min_rho >= k
        assert all(exists_partition_at(poset, k) is None for k in range(len(parts), poset.n + 1))
        assert sdepth_exact(ideal).value == len(parts) - 1


def test_agrees_with_oracle_up_to_31_points(rng):
    family = poset_family(rng, 60, max_points=31)
    assert max(len(build_poset(ideal)) for ideal in family) >= 28
    for ideal in family:
        assert sdepth_exact(ideal).value == naive_sdepth(ideal.generators), str(ideal)


def _best_level(poset):
    return max(k for k in range(poset.n + 1) if exists_partition_at(poset, k) is not None)


def test_larger_g_keeps_the_optimum(rng):
    # g is pinned to the lcm; enlarging it one coordinate at a time agrees on small cases
    for _ in range(25):
        ideal = random_ideal(rng, rng.randint(1, 3), max_exp=2)
        base = sdepth_exact(ideal).value
        g = list(build_poset(ideal).g)
        j = rng.randrange(len(g))
        g[j] += 1
        assert _best_level(build_poset(ideal, tuple(g))) == base, str(ideal)
