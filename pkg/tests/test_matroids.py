from functools import reduce

import pytest

from models import vertex_set as vs
from models.matroid import Matroid, PartitionSpec
from models.simplicial_complex import SimplicialComplex
from services.matroid_service import MatroidParseError, MatroidService


def S(*members):
    return vs.from_indices(members)


# =========================
# 公理と構成
# =========================
def test_uniform_bases():
    assert MatroidService.uniform(3, 1).bases == (S(0), S(1), S(2))
    assert MatroidService.uniform(4, 4).bases == (vs.full(4),)
    with pytest.raises(ValueError):
        MatroidService.uniform(2, 3)


@pytest.mark.parametrize("complex_,expected", [
    (SimplicialComplex.from_antichain(4, list(vs.subsets_of_size(vs.full(4), 2))), True),
    (SimplicialComplex.from_edges(3, [(0, 1), (1, 2)]), True),
    (SimplicialComplex.from_edges(4, [(0, 1), (1, 2), (2, 3)]), False),
    (SimplicialComplex.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]), True),
    (SimplicialComplex.from_facets(3, [[0, 1], [2]]), False),
])
def test_is_matroid(complex_, expected):
    assert MatroidService.is_matroid(complex_) is expected


def test_is_matroid_rejects_void():
    with pytest.raises(ValueError):
        MatroidService.is_matroid(SimplicialComplex.void(2))


def test_from_bases_validates_exchange():
    with pytest.raises(ValueError):
        Matroid.from_bases(4, [S(0, 1), S(1, 2), S(2, 3)])
    with pytest.raises(ValueError):
        Matroid.from_bases(3, [S(0, 1), S(2)])


def test_dual_of_uniform():
    assert MatroidService.dual(MatroidService.uniform(4, 1)) == MatroidService.uniform(4, 3)


def test_duality_laws(matroid_service):
    for m in matroid_service.enumerate_all(4):
        dual = MatroidService.dual(m)
        assert MatroidService.dual(dual) == m
        assert m.rank + MatroidService.corank(m) == m.n
        assert dual.rank == m.corank
        assert MatroidService.rank_of(m, vs.full(m.n)) == m.rank
        assert MatroidService.loops(dual) == MatroidService.coloops(m)


def test_circuits_of_uniform():
    assert set(MatroidService.circuits(MatroidService.uniform(4, 2))) == set(vs.subsets_of_size(vs.full(4), 3))


def test_corank_loops_and_coloops():
    m = MatroidService.direct_sum(MatroidService.uniform(2, 1), MatroidService.uniform(1, 1))
    assert m.corank == 1
    assert MatroidService.coloops(m) == S(2)
    with_loop = Matroid.from_bases(3, [S(0), S(1)])
    assert MatroidService.loops(with_loop) == S(2)
    assert MatroidService.corank(MatroidService.uniform(5, 2)) == 3


def test_rank2_from_partition():
    m = MatroidService.rank2_from_partition(PartitionSpec.of(3, [[0, 1], [2]]))
    assert m.bases == (S(0, 2), S(1, 2))
    assert MatroidService.rank2_from_partition(PartitionSpec.of(3, [[0], [1], [2]])) == MatroidService.uniform(3, 2)


def test_rank2_needs_two_classes():
    with pytest.raises(ValueError):
        MatroidService.rank2_from_partition(PartitionSpec.of(2, [[0, 1]]))


def test_partition_spec_must_cover_ground_set():
    with pytest.raises(ValueError):
        PartitionSpec.of(3, [[0], [1]])
    with pytest.raises(ValueError):
        PartitionSpec.of(3, [[0, 1], [1, 2]])


def test_parallel_classes_round_trip():
    spec = PartitionSpec.of(5, [[0, 3], [1], [2, 4]])
    m = MatroidService.rank2_from_partition(spec)
    assert MatroidService.parallel_classes(m) == spec


def test_hyperplane_complements_are_cocircuits(matroid_service):
    for m in matroid_service.enumerate_all(4):
        if m.rank == 0:
            continue
        ground = vs.full(m.n)
        cocircuits = set(MatroidService.circuits(MatroidService.dual(m)))
        assert {ground & ~h for h in MatroidService.hyperplanes(m)} == cocircuits


# =========================
# 連結性
# =========================
@pytest.mark.parametrize("n", range(2, 6))
def test_uniform_is_connected(matroid_service, n):
    for r in range(1, n):
        assert matroid_service.is_connected(MatroidService.uniform(n, r))
    assert len(matroid_service.connected_components(MatroidService.uniform(n, n))) == n


def test_components_of_a_direct_sum(matroid_service):
    m = MatroidService.direct_sum(MatroidService.uniform(3, 2), MatroidService.uniform(2, 1))
    assert matroid_service.component_sets(m) == [S(0, 1, 2), S(3, 4)]
    assert matroid_service.connected_components(m) == [MatroidService.uniform(3, 2), MatroidService.uniform(2, 1)]


def test_component_sets_with_interleaved_elements_and_loops(matroid_service):
    two_classes = MatroidService.rank2_from_partition(PartitionSpec.of(5, [[0, 2], [1, 3, 4]]))
    assert matroid_service.component_sets(two_classes) == [S(0, 2), S(1, 3, 4)]
    with_loop = MatroidService.rank2_from_partition(PartitionSpec.of(5, [[0, 2], [3, 4]], loops=[1]))
    assert matroid_service.component_sets(with_loop) == [S(0, 2), S(1), S(3, 4)]


def has_separator(matroid):
    """r(S) + r(E∖S) = r(E) となる空でも全体でもない S があるか"""
    ground = vs.full(matroid.n)
    return any(MatroidService.rank_of(matroid, s) + MatroidService.rank_of(matroid, ground & ~s) == matroid.rank
               for s in vs.subsets(ground) if s and s != ground)


def _check_components(matroid_service, complex_service, matroids):
    for m in matroids:
        assert matroid_service.is_connected(m) is not has_separator(m), m.describe()
        components = matroid_service.connected_components(m)
        assert all(matroid_service.is_connected(c) for c in components)
        joined = reduce(MatroidService.direct_sum, components)
        assert complex_service.are_isomorphic(joined.complex, m.complex), m.describe()


def test_components_on_small_matroids(matroid_service, complex_service):
    _check_components(matroid_service, complex_service, matroid_service.enumerate_all(4))


@pytest.mark.slow
def test_components_on_five_and_six_elements(matroid_service, complex_service):
    matroids = matroid_service.enumerate_all(5) + matroid_service.corank_at_most_two(6)
    _check_components(matroid_service, complex_service, matroids)


def test_cycle_atomic(matroid_service):
    u42 = MatroidService.uniform(4, 2)
    assert matroid_service.is_cycle_atomic(u42, S(1))
    assert not matroid_service.is_cycle_atomic(u42, S(0, 1, 2))
    parallel = MatroidService.rank2_from_partition(PartitionSpec.of(3, [[0, 1], [2]]))
    assert matroid_service.is_cycle_atomic(parallel, S(0, 1))


# =========================
# 余階数2以下
# =========================
def test_corank2_enumeration_is_coloop_free(matroid_service):
    for n in range(2, 7):
        for m in matroid_service.corank2_enumerate(n):
            assert m.corank == 2
            assert MatroidService.coloops(m) == vs.EMPTY


def test_corank_at_most_two_on_three_elements(matroid_service, complex_service):
    matroids = matroid_service.corank_at_most_two(3)
    assert len(matroids) == 7
    assert all(m.n == 3 and m.corank <= 2 for m in matroids)
    assert len({complex_service.canonical_form(m.complex) for m in matroids}) == 7


def test_corank2_bounds(matroid_service):
    with pytest.raises(ValueError):
        matroid_service.corank2_enumerate(1)
    with pytest.raises(ValueError):
        matroid_service.corank2_enumerate(10)


# =========================
# revlex 表記
# =========================
def test_revlex_order():
    order = MatroidService.revlex_subsets(4, 2)
    assert [vs.members(s) for s in order] == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]


def test_parse_revlex(matroid_service):
    assert matroid_service.parse_revlex("******", 4, 2) == MatroidService.uniform(4, 2)
    assert matroid_service.parse_revlex("***", 3, 1) == MatroidService.uniform(3, 1)
    m = matroid_service.parse_revlex("*****0", 4, 2)
    assert MatroidService.parallel_classes(m).parallel_classes == (S(0), S(1), S(2, 3))
    assert matroid_service.to_revlex(m) == "*****0"


@pytest.mark.parametrize("text,position", [
    ("*****", 5),
    ("**x***", 2),
    ("*0*00*", 0),
    ("000000", 0),
])
def test_parse_revlex_errors(matroid_service, text, position):
    with pytest.raises(MatroidParseError) as info:
        matroid_service.parse_revlex(text, 4, 2)
    assert info.value.position == position


# =========================
# T² の消滅
# =========================
def test_uniform_formula_values():
    assert MatroidService.uniform_t2_formula(6, 3, 2) == 6
    assert MatroidService.uniform_t2_formula(5, 2, 2) == 3
    assert MatroidService.uniform_t2_formula(6, 3, 3) == 0
    assert MatroidService.uniform_t2_formula(6, 5, 2) == 0
    assert MatroidService.uniform_t2_formula(4, 0, 2) == 0
    assert MatroidService.uniform_t2_formula(2, 0, 2) == 0


def _check_uniform_table(matroid_service, max_n):
    cotangent = matroid_service.cotangent_service
    for n in range(1, max_n + 1):
        for r in range(n + 1):
            complex_ = MatroidService.uniform(n, r).complex
            for k in range(1, n + 1):
                assert (cotangent.t_dims_negative(complex_, vs.full(k)).t2
                        == MatroidService.uniform_t2_formula(n, r, k)), (n, r, k)


def test_uniform_table(matroid_service):
    _check_uniform_table(matroid_service, 6)


@pytest.mark.slow
def test_uniform_table_up_to_eight(matroid_service):
    _check_uniform_table(matroid_service, 8)


@pytest.mark.parametrize("n", range(1, 7))
def test_uniform_vanishing(matroid_service, n):
    for r in range(0, n + 1):
        result = matroid_service.cotangent_service.t2_vanishes(MatroidService.uniform(n, r).complex)
        assert result.vanishes is (r == 0 or r >= n - 2), (n, r)


def _check_corank_two(matroid_service, max_n):
    for n in range(1, max_n + 1):
        matroids = matroid_service.corank_at_most_two(n)
        assert all(res.vanishes for res in matroid_service.vanishing_sweep(matroids))


def test_corank_two_matroids_are_unobstructed(matroid_service):
    _check_corank_two(matroid_service, 5)


@pytest.mark.slow
def test_corank_two_matroids_are_unobstructed_up_to_seven(matroid_service):
    _check_corank_two(matroid_service, 7)


# =========================
# 全列挙と予想
# =========================
def test_enumerate_all_counts(matroid_service):
    assert len(matroid_service.enumerate_all(4)) == 2 + 4 + 8 + 17


@pytest.mark.slow
def test_enumerate_all_five(matroid_service):
    assert len(matroid_service.enumerate_all(5)) == 2 + 4 + 8 + 17 + 38


def test_enumerate_all_bounds(matroid_service):
    with pytest.raises(ValueError):
        matroid_service.enumerate_all(6)


def test_conjecture_verdicts(matroid_service):
    u63 = matroid_service.conjecture_check(MatroidService.uniform(6, 3))
    assert (u63.lhs, u63.rhs, u63.kind) == (False, False, "agree")
    assert u63.witness is not None and u63.witness.dims.t2 > 0
    u42 = matroid_service.conjecture_check(MatroidService.uniform(4, 2))
    assert (u42.lhs, u42.rhs, u42.kind) == (True, True, "agree")


def test_conjecture_holds_on_small_matroids(matroid_service):
    verdicts = matroid_service.conjecture_sweep(matroid_service.enumerate_all(4))
    assert all(v.agree for v in verdicts)
