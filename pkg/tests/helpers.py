from stanleydepth.core import minimalize
from stanleydepth.poset import Interval, IntervalPartition, between, build_poset
from stanleydepth.solver import exists_partition_at, sdepth_exact


def random_ideal(rng, n, max_exp=2, max_gens=3):
    while True:
        gens = []
        for _ in range(rng.randint(1, max_gens)):
            v = tuple(rng.randint(0, max_exp) for _ in range(n))
            if any(v):
                gens.append(v)
        if gens:
            return minimalize(gens, n)


def random_partition(poset, rng):
    """A uniformly-ish random valid partition (greedy, singletons always fit)."""
    uncovered = set(poset.points)
    out = []
    while uncovered:
        c = min(uncovered)
        tops = [d for d in between(c, poset.g)
                if all(s in uncovered for s in between(c, d))]
        d = rng.choice(tops)
        out.append(Interval(c, d))
        uncovered.difference_update(between(c, d))
    return IntervalPartition(poset, out)


def solver_partitions(poset, upto=None):
    """The solver's certificate at every feasible level 0..upto."""
    upto = poset.n if upto is None else upto
    out = []
    for k in range(upto + 1):
        part = exists_partition_at(poset, k)
        if part is None:
            break
        out.append(part)
    return out


def liftable_ideal(rng, n, max_exp=3):
    """x_j^a * v together with generators avoiding x_j; returns (ideal, j, a)."""
    while True:
        j = rng.randint(1, n)
        a = rng.randint(1, max_exp)
        first = [rng.randint(0, max_exp) for _ in range(n)]
        first[j - 1] = a
        gens = [tuple(first)]
        for _ in range(rng.randint(0, 2)):
            v = [rng.randint(0, max_exp) for _ in range(n)]
            v[j - 1] = 0
            if any(v):
                gens.append(tuple(v))
        ideal = minimalize(gens, n)
        owners = [v for v in ideal.generators if v[j - 1] > 0]
        if len(owners) == 1 and owners[0][j - 1] == a:
            return ideal, j, a


def exact(ideal):
    result = sdepth_exact(ideal)
    assert result.known
    return result.value



def poset_family(rng, count, min_points=2, max_points=31, max_n=5):
    """``count`` distinct ideals whose posets have sizes spread over [min_points, max_points]."""
    out, seen = [], set()
    targets = [min_points + (max_points - min_points) * i // max(count - 1, 1) for i in range(count)]
    for target in targets:
        for _ in range(20000):
            n = rng.randint(2, max_n)
            ideal = random_ideal(rng, n, max_exp=rng.choice([1, 1, 2]), max_gens=rng.randint(2, 5))
            size = len(build_poset(ideal))
            if ideal not in seen and abs(size - target) <= 2 and min_points <= size <= max_points:
                seen.add(ideal)
                out.append(ideal)
                break
    return out
