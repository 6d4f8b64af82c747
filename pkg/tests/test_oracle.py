import pytest
from hypothesis import given, settings

from critind import (
    Graph,
    OracleBoundError,
    critical_family,
    difference,
    gnp,
    independence_profile,
    is_independent,
    label_set,
    max_difference_exhaustive,
    max_independent_difference,
    mu_exact,
)
from strategies import graphs


def edgeless(n):
    return Graph([f"v{i}" for i in range(n)], [])


class TestIndependenceProfile:
    def test_gf_core(self, gf):
        prof = independence_profile(gf)
        assert label_set(gf, prof.core) == ["a", "b", "c", "h"]

    def test_gf_alpha_and_corona(self, gf):
        prof = independence_profile(gf)
        assert prof.alpha == 5
        # Both maximum independent sets are {a,b,c,h} plus one of f, j.
        assert label_set(gf, prof.corona) == ["a", "b", "c", "f", "h", "j"]

    def test_g2_corona(self, g2):
        prof = independence_profile(g2)
        assert label_set(g2, prof.corona) == ["a", "b", "c", "d", "f", "g", "h", "i", "j"]

    def test_k3(self, k3):
        prof = independence_profile(k3)
        assert prof.alpha == 1
        assert prof.core == frozenset()
        assert prof.corona == frozenset(range(3))
        assert len(prof.omega_family) == 3

    def test_g1_family(self, g1):
        prof = independence_profile(g1)
        assert prof.alpha == 4
        fam = {frozenset(label_set(g1, s)) for s in prof.omega_family}
        assert fam == {frozenset("abcd"), frozenset("abdf")}

    def test_k0(self, k0):
        prof = independence_profile(k0)
        assert prof.alpha == 0
        assert prof.omega_family == (frozenset(),)

    def test_bound_refusal(self):
        with pytest.raises(OracleBoundError):
            independence_profile(edgeless(21))


class TestCriticalFamily:
    def test_g1(self, g1):
        fam = critical_family(g1)
        assert fam.d == 1
        assert label_set(g1, fam.ker) == ["a", "b"]
        assert label_set(g1, fam.nucleus) == ["a", "b", "d"]
        assert label_set(g1, fam.diadem) == ["a", "b", "c", "d", "f"]

    def test_g2_maximum_members(self, g2):
        fam = critical_family(g2)
        maxima = {frozenset(label_set(g2, s)) for s in fam.maximum_critical_independent}
        assert maxima == {frozenset("abcd"), frozenset("abdf")}
        assert label_set(g2, fam.nucleus) == ["a", "b", "d"]
        assert label_set(g2, fam.diadem) == ["a", "b", "c", "d", "f"]
        assert label_set(g2, fam.ker) == ["a", "b"]

    def test_edgeless(self):
        g = edgeless(3)
        fam = critical_family(g)
        assert fam.d == 3
        assert fam.all_critical_independent == (frozenset(range(3)),)
        assert fam.ker == fam.nucleus == fam.diadem == frozenset(range(3))

    def test_k3_empty_only(self, k3):
        fam = critical_family(k3)
        assert fam.d == 0
        assert fam.all_critical_independent == (frozenset(),)
        assert fam.ker == fam.nucleus == fam.diadem == frozenset()

    def test_k0(self, k0):
        fam = critical_family(k0)
        assert fam.d == 0
        assert fam.ker == fam.nucleus == fam.diadem == frozenset()

    def test_bound_refusal(self):
        with pytest.raises(OracleBoundError):
            critical_family(edgeless(25))


class TestMuExact:
    def test_fixtures(self, g1, gf, k3):
        assert mu_exact(g1) == 3
        assert mu_exact(k3) == 1
        assert mu_exact(gf) == 4

    def test_k0(self, k0):
        assert mu_exact(k0) == 0

    def test_bound_refusal(self):
        with pytest.raises(OracleBoundError):
            mu_exact(edgeless(23))


class TestSubsetScans:
    def test_matches_branch_and_bound(self):
        for seed in range(20):
            g = gnp(9, 0.35, seed)
            assert max_difference_exhaustive(g, independent_only=True) == max_independent_difference(g)

    def test_max_over_all_subsets_equals_independent_only(self):
        for seed in range(20):
            g = gnp(10, 0.3, seed)
            assert max_difference_exhaustive(g, False) == max_difference_exhaustive(g, True)

    def test_bound_refusal(self):
        with pytest.raises(OracleBoundError):
            max_difference_exhaustive(edgeless(17))


@settings(max_examples=60)
@given(graphs(max_n=10))
def test_family_members_are_critical_independent(g):
    fam = critical_family(g)
    for s in fam.all_critical_independent:
        assert is_independent(g, s)
        assert difference(g, s) == fam.d
    sizes = {len(s) for s in fam.maximum_critical_independent}
    assert len(sizes) <= 1
    if fam.all_critical_independent:
        assert max(len(s) for s in fam.all_critical_independent) == max(sizes, default=0)


@settings(max_examples=60)
@given(graphs(max_n=10))
def test_family_summaries(g):
    fam = critical_family(g)
    assert fam.ker <= fam.nucleus
    if fam.d == 0:
        assert frozenset() in fam.all_critical_independent
        assert fam.ker == frozenset()
    # Each critical independent set sits inside some maximum one.
    for s in fam.all_critical_independent:
        assert any(s <= t for t in fam.maximum_critical_independent)


@settings(max_examples=60)
@given(graphs(max_n=10))
def test_critical_sets_inside_maximum_independent_sets(g):
    prof = independence_profile(g)
    fam = critical_family(g)
    for s in fam.all_critical_independent:
        assert any(s <= t for t in prof.omega_family)
    assert fam.diadem <= prof.corona


@settings(max_examples=40)
@given(graphs(max_n=9))
def test_omega_members_all_maximum(g):
    prof = independence_profile(g)
    for s in prof.omega_family:
        assert len(s) == prof.alpha
        assert is_independent(g, s)
    if prof.omega_family:
        assert prof.core == frozenset.intersection(*prof.omega_family)
        assert prof.corona == frozenset.union(*prof.omega_family)


def test_core_nucleus_containment_goes_both_ways(g2, gf):
    """No containment theorem between nucleus and core: witnesses both ways."""
    fam2, prof2 = critical_family(g2), independence_profile(g2)
    famf, proff = critical_family(gf), independence_profile(gf)
    assert prof2.core < fam2.nucleus          # core strictly inside nucleus
    assert famf.nucleus < proff.core          # nucleus strictly inside core
    assert not fam2.nucleus <= prof2.core
    assert not proff.core <= famf.nucleus
