"""Cohomology models and the type-existence decision procedures."""

from __future__ import annotations

import json

import pytest

from msf7.topology import (
    ADMITS,
    NO,
    UNKNOWN,
    HypothesisError,
    ModelError,
    bundled_model,
    bundled_model_names,
    check_type,
    cup_eval,
    load_model,
    make_model,
    verify_witness,
)


def model_dict(**overrides):
    base = {"name": "test", "r2": 1, "r4": 1, "cup": [[[1]]], "p1": [0],
            "w2": [0], "orientable": True, "spin": True, "W3_zero": True,
            "simply_connected": True}
    base.update(overrides)
    return base


class TestModelLoading:
    def test_bundled_models_present(self):
        assert set(bundled_model_names()) >= {"s7", "cp3xs1", "s5xs2"}

    def test_s7_shape(self):
        m = bundled_model("s7")
        assert (m.r2, m.r4, m.spin, m.simply_connected) == (0, 0, True, True)

    def test_load_model_from_file(self, tmp_path):
        p = tmp_path / "m.json"
        p.write_text(json.dumps(model_dict()))
        assert load_model(p).name == "test"

    def test_missing_file(self):
        with pytest.raises(ModelError, match="cannot read"):
            load_model("/nonexistent/model.json")

    def test_invalid_json(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text("{not json")
        with pytest.raises(ModelError, match="not valid JSON"):
            load_model(p)

    def test_asymmetric_cup_rejected(self):
        data = model_dict(r2=2, cup=[[[0], [1]], [[2], [0]]], w2=[0, 0])
        with pytest.raises(ModelError, match="not symmetric"):
            make_model(data)

    def test_spin_w2_consistency(self):
        with pytest.raises(ModelError, match="w2 = 0"):
            make_model(model_dict(w2=[1]))

    def test_spin_forces_w3_zero(self):
        with pytest.raises(ModelError, match="W3_zero"):
            make_model(model_dict(W3_zero=False))

    def test_simply_connected_forces_orientable(self):
        with pytest.raises(ModelError, match="orientable"):
            make_model(model_dict(orientable=False))

    def test_missing_keys(self):
        with pytest.raises(ModelError, match="malformed"):
            make_model({"r2": 1})

    def test_bad_lengths(self):
        with pytest.raises(ModelError, match="length"):
            make_model(model_dict(p1=[1, 2]))

    def test_unknown_bundle(self):
        with pytest.raises(ModelError, match="no bundled model"):
            bundled_model("t7")


class TestCupEval:
    def test_zero_inputs(self):
        m = bundled_model("cp3xs1")
        assert cup_eval(m, [0], [0]) == (0,)

    def test_bilinearity_on_projective_model(self):
        m = bundled_model("cp3xs1")
        assert cup_eval(m, [2], [2]) == (4,)

    def test_symmetry(self):
        m = make_model(model_dict(r2=2, cup=[[[1], [2]], [[2], [-3]]], w2=[0, 0]))
        for e, f in (([1, 2], [3, -1]), ([0, 5], [2, 2])):
            assert cup_eval(m, e, f) == cup_eval(m, f, e)

    def test_length_mismatch(self):
        m = bundled_model("cp3xs1")
        with pytest.raises(ValueError, match="length"):
            cup_eval(m, [1, 2], [0])


class TestBundledVerdicts:
    def test_seven_sphere_admits_everything(self):
        m = bundled_model("s7")
        for t in range(1, 9):
            v = check_type(m, t)
            assert v.status == ADMITS
            assert verify_witness(m, t, v.witness)

    def test_projective_times_circle(self):
        m = bundled_model("cp3xs1")
        assert check_type(m, 4).status == NO
        for t in (3, 5, 6, 7, 8):
            assert check_type(m, t).status == ADMITS
        for t in (1, 2):
            with pytest.raises(HypothesisError, match="simply connected"):
                check_type(m, t)

    def test_sphere_product(self):
        m = bundled_model("s5xs2")
        for t in (1, 2, 4):
            v = check_type(m, t)
            assert v.status == ADMITS
            assert verify_witness(m, t, v.witness)

    def test_generic_types_agree_everywhere(self):
        for name in bundled_model_names():
            m = bundled_model(name)
            verdicts = {check_type(m, t).status for t in (5, 6, 7, 8)}
            assert len(verdicts) == 1


class TestCriteria:
    def test_orientability_hypothesis(self):
        m = make_model(model_dict(orientable=False, spin=False, w2=[1],
                                  W3_zero=False, simply_connected=False))
        for t in range(3, 9):
            with pytest.raises(HypothesisError, match="orientable"):
                check_type(m, t)

    def test_non_spin_generic_types_say_no(self):
        m = make_model(model_dict(spin=False, w2=[1], simply_connected=False))
        for t in (5, 6, 7, 8):
            assert check_type(m, t).status == NO

    def test_type3_tracks_integral_class(self):
        ok = make_model(model_dict(spin=False, w2=[1], W3_zero=True,
                                   simply_connected=False))
        bad = make_model(model_dict(spin=False, w2=[1], W3_zero=False,
                                    simply_connected=False))
        assert check_type(ok, 3).status == ADMITS
        assert check_type(bad, 3).status == NO

    def test_type4_divisibility_obstruction(self):
        m = make_model(model_dict(p1=[3]))
        v = check_type(m, 4)
        assert v.status == NO and "divisible" in v.reason

    def test_type4_non_spin_is_no_not_error(self):
        m = make_model(model_dict(spin=False, w2=[1], simply_connected=False))
        assert check_type(m, 4).status == NO

    def test_type4_square_obstruction(self):
        # needs a^2 = 2: impossible over the integers, proved by definiteness
        v = check_type(bundled_model("cp3xs1"), 4)
        assert v.status == NO and "exhaustive" in v.reason

    def test_type4_finds_witness(self):
        m = make_model(model_dict(p1=[8]))
        v = check_type(m, 4)
        assert v.status == ADMITS and v.witness == ((-2,),)
        assert verify_witness(m, 4, v.witness)

    def test_type2_quadratic(self):
        # e^2 + f^2 + ef with cup(h,h)=1: target 3 has witness (1,1)
        m = make_model(model_dict(p1=[6], simply_connected=True))
        v = check_type(m, 2)
        assert v.status == ADMITS
        assert verify_witness(m, 2, v.witness)

    def test_type1_congruence(self):
        # p1 = 2 with w2 = 0 forces e, f odd sums: e=1, f=1 works
        m = make_model(model_dict(p1=[2]))
        v = check_type(m, 1)
        assert v.status == ADMITS
        assert verify_witness(m, 1, v.witness)

    def test_type1_negative_target_definite_no(self):
        m = make_model(model_dict(p1=[-2]))
        v = check_type(m, 1)
        assert v.status == NO

    def test_unknown_on_indefinite_form(self):
        m = make_model(model_dict(r2=2, cup=[[[0], [1]], [[1], [0]]],
                                  p1=[2], w2=[0, 0]))
        assert check_type(m, 4, bound=4).status == UNKNOWN

    def test_zero_form_nonzero_target(self):
        m = make_model(model_dict(cup=[[[0]]], p1=[2]))
        v = check_type(m, 4)
        assert v.status == NO and "identically zero" in v.reason

    def test_monotone_bound(self):
        # witness first appears at norm 3
        m = make_model(model_dict(p1=[18]))
        low = check_type(m, 4, bound=2)
        high = check_type(m, 4, bound=5)
        assert low.status == UNKNOWN
        assert high.status == ADMITS and high.witness == ((-3,),)
        higher = check_type(m, 4, bound=16)
        assert higher.status == ADMITS and higher.witness == high.witness

    def test_spin_implies_type3_admits(self):
        for name in bundled_model_names():
            m = bundled_model(name)
            if m.spin:
                assert check_type(m, 3).status == ADMITS

    def test_argument_validation(self):
        m = bundled_model("s7")
        with pytest.raises(ValueError, match="type"):
            check_type(m, 9)
        with pytest.raises(ValueError, match="bound"):
            check_type(m, 4, bound=0)

    def test_witness_determinism_shell_order(self):
        m = bundled_model("s5xs2")
        v = check_type(m, 1)
        assert v.witness == ((0,), (0,))
