"""Split generation, identity checkers, and the bundled verification run."""

from fractions import Fraction

import pytest

from minkval.geometry import LinearMap, standard_simplex, zero_vec
from minkval.harness import (
    bundle_ok,
    bundle_to_json,
    check_equivariance,
    check_valuation_identity,
    DomainViolationError,
    generate_simplex_splits,
    generate_union_chain,
    GenerationFailedError,
    integer_unimodular_maps,
    NotSpecialLinearError,
    run_suite,
    sublinearity_counterexample,
    SuiteConfig,
    Verdict,
)
from minkval.operators import moment_body, projection_body
from minkval.supports import from_polytope, probe_directions, SupportEval

F = Fraction

SMALL = SuiteConfig(dims=(3,), lambdas=(F(1, 3), F(1, 2)), scales=(1,),
                    probes=40, depth=2)


class TestSplitGeneration:
    def test_grid_shape(self):
        insts = generate_simplex_splits(3, 2, (F(1, 4), F(1, 2)), (1, 2))
        assert len(insts) == 4
        lams = {inst.lam for inst in insts}
        assert lams == {F(1, 4), F(1, 2)}

    def test_pieces_partition_parent(self):
        for inst in generate_simplex_splits(4, 3, (F(1, 3),), (1,)):
            sc = inst.case
            assert not sc.degenerate
            assert sc.lower.volume + sc.upper.volume == sc.parent.volume
            assert sc.lower == inst.predicted["lower"]
            assert sc.upper == inst.predicted["upper"]
            assert sc.section == inst.predicted["section"]

    def test_full_dim_case(self):
        for inst in generate_simplex_splits(3, 3, (F(2, 3),), (F(1, 2),)):
            sc = inst.case
            assert sc.parent.dim == 3
            assert sc.section.dim == 2


class TestUnionChain:
    def test_deterministic(self):
        a = generate_union_chain(3, depth=2, seed=5, count=4)
        b = generate_union_chain(3, depth=2, seed=5, count=4)
        assert [q.union.vertices for q in a] == [q.union.vertices for q in b]

    def test_quads_are_valid(self):
        for q in generate_union_chain(3, depth=2, seed=7, count=4):
            assert q.union.volume == q.K.volume + q.L.volume - q.inter.volume
            assert q.inter.dim <= q.union.dim

    def test_depth_limit(self):
        with pytest.raises(GenerationFailedError):
            generate_union_chain(3, depth=4, seed=1)


class TestUnimodularMaps:
    def test_exactly_special_linear(self):
        maps = integer_unimodular_maps(4, count=10, seed=3)
        assert len(maps) == 10
        for A in maps:
            assert A.det == 1
            assert all(c.denominator == 1 for row in A.rows for c in row)

    def test_seeded(self):
        a = integer_unimodular_maps(3, count=5, seed=11)
        b = integer_unimodular_maps(3, count=5, seed=11)
        assert [A.rows for A in a] == [B.rows for B in b]


class TestValuationChecker:
    def quad(self):
        inst = generate_simplex_splits(3, 3, (F(1, 2),), (1,))[0]
        sc = inst.case
        return (sc.lower, sc.upper, sc.parent, sc.section)

    def test_true_operator_passes(self):
        v = check_valuation_identity(projection_body, 1, self.quad(),
                                     probe_directions(3, 30))
        assert v.passed and v.cases == 30

    def test_broken_operator_caught(self):
        def warped(P):
            h = moment_body(P, 1, 1)
            return SupportEval(n=3, p=1, fn=lambda x: h.value(x) ** 2 + h.value(x),
                               kind="affine-combination", exact=True)
        v = check_valuation_identity(warped, 1, self.quad(),
                                     probe_directions(3, 30))
        assert not v.passed
        assert v.failures

    def test_p_mismatch_rejected(self):
        quad = self.quad()
        op = lambda P: moment_body(P, 2, 1)
        with pytest.raises(DomainViolationError):
            check_valuation_identity(op, 1, quad, probe_directions(3, 5))


class TestEquivarianceChecker:
    def test_non_sl_rejected(self):
        A = LinearMap.scaling(3, 2)
        with pytest.raises(NotSpecialLinearError):
            check_equivariance(projection_body, "contravariant", [A],
                               [standard_simplex(3, 3)], probe_directions(3, 5))

    def test_wrong_kind_caught(self):
        maps = integer_unimodular_maps(3, count=2, seed=2)
        v = check_equivariance(projection_body, "covariant", maps,
                               [standard_simplex(3, 3)], probe_directions(3, 20))
        assert not v.passed


class TestCounterexample:
    def test_values_and_margin(self):
        v = sublinearity_counterexample()
        assert v.passed
        assert v.details["values"] == ["4", "4", "9"]
        assert v.details["margin"] == "1"


class TestRunSuite:
    def test_small_bundle_green(self):
        bundle = run_suite(SMALL)
        assert bundle_ok(bundle)
        assert "valuation_identity" in bundle
        assert all(isinstance(v, Verdict) for v in bundle.values())

    def test_empty_families(self):
        cfg = SuiteConfig(families=(), dims=(3,))
        assert run_suite(cfg) == {}

    def test_bundle_json(self):
        bundle = run_suite(SuiteConfig(families=("projection",), dims=(3,),
                                       lambdas=(F(1, 2),), scales=(1,),
                                       probes=10, depth=1))
        out = bundle_to_json(bundle, SMALL)
        assert out["ok"] in (True, False)
        assert "config" in out and "suites" in out

    def test_config_round_trip(self):
        cfg = SuiteConfig(dims=(3, 4), probes=77, lambdas=(F(1, 4),))
        again = SuiteConfig.from_json(cfg.to_json())
        assert again == cfg
