"""Class sums, membership criteria, Kaplansky integrality, and the Drinfeld
map, anchored on group algebras where everything is classical."""

import pytest

from hopfcomm.classdata import (
    ClassData,
    classdata_from_dict,
    classdata_to_dict,
    conjugacy_class_coideal,
    drinfeld_map,
    factorizable_suite,
    fusion_coefficients,
    kaplansky_report,
    membership_test,
    r_matrix_data,
    rh_idempotents,
    theorem_eta_suite,
    theorem_suite_sec4,
)
from hopfcomm.commutator import Subspace, z_n
from hopfcomm.counting import f_rob
from hopfcomm.errors import (
    LemmaViolation,
    NotAlmostCocommutative,
    NotFactorizable,
    NotQuasitriangular,
    VerificationFailed,
)
from hopfcomm.exactnum import CycNum
from hopfcomm.hopf import HElem, HFunc, integrals, tensor_of

ONE = CycNum.rational(1)


def rat(x):
    return CycNum.rational(x)


def class_index_of(G, cd, rep_label):
    """Index j with eta_j supported on the class of the given element."""
    g = G.labels.index(rep_label)
    cls = G.conjugacy_data()
    members = set(cls.elements[cls.class_of[g]])
    for j, eta in enumerate(cd.eta):
        if set(eta.vec) == members:
            return j
    raise AssertionError(f"no eta matches class of {rep_label}")


# ---------------------------------------------------------------------------
# class data on group algebras


def test_group_algebra_class_data_is_classical(s3, ks3):
    H, _ = ks3
    cd = rh_idempotents(H)
    cls = s3.conjugacy_data()
    assert len(cd) == cls.n_classes
    assert sorted(cd.class_dims) == sorted(cls.sizes)
    for j in range(len(cd)):
        support = set(cd.F[j].vec)
        (ci,) = {cls.class_of[g] for g in support}
        assert support == set(cls.elements[ci])
        # F_j is the indicator function of its class
        assert all(c == ONE for c in cd.F[j].vec.values())
        # C_j is the class sum, eta_j the class average
        assert cd.C[j] == HElem(H, {g: ONE for g in support})
        assert cd.class_dims[j] == cls.sizes[ci]
        size = rat(1) * rat(cls.sizes[ci]).inverse()
        assert cd.eta[j] == HElem(H, {g: size for g in support})


def test_f0_is_normalized_dual_integral(kq8):
    H, _ = kq8
    cd = rh_idempotents(H)
    _, lam = integrals(H)
    assert cd.F[0] == lam * rat(8).inverse()
    assert cd.class_dims[0] == 1
    assert cd.eta[0] == H.one()


def test_dual_group_algebra_refused(dual_s3):
    H, _ = dual_s3
    with pytest.raises(NotAlmostCocommutative):
        rh_idempotents(H)


def test_class_data_deterministic(ks3):
    H, _ = ks3
    a = rh_idempotents(H, seed=0)
    b = rh_idempotents(H, seed=0)
    assert a.F == b.F and a.C == b.C and a.class_dims == b.class_dims


def test_classdata_json_round_trip(ks3):
    H, _ = ks3
    cd = rh_idempotents(H)
    back = classdata_from_dict(H, classdata_to_dict(cd))
    assert back.F == cd.F and back.eta == cd.eta
    broken = classdata_to_dict(cd)
    broken["class_dims"][1] += 1
    with pytest.raises(VerificationFailed):
        classdata_from_dict(H, broken)


# ---------------------------------------------------------------------------
# conjugacy-class coideals


def test_group_coideals_are_class_spans(s3, ks3):
    H, _ = ks3
    cd = rh_idempotents(H)
    cls = s3.conjugacy_data()
    for j in range(len(cd)):
        sub = conjugacy_class_coideal(H, cd, j)
        members = sorted(cd.C[j].vec)
        (ci,) = {cls.class_of[g] for g in members}
        want = Subspace(H, [{g: ONE} for g in cls.elements[ci]])
        assert sub == want


def test_coideal_zero_is_span_of_unit(ds3):
    # F_0 H* = span{lambda/d}, and Lambda <- lambda = 1, so c_0 = k*1
    H, _ = ds3
    cd = rh_idempotents(H)
    sub = conjugacy_class_coideal(H, cd, 0)
    assert sub.dim == 1
    assert sub.contains(H.one().vec)


def test_double_coideals_decompose(ds3):
    H, _ = ds3
    cd = rh_idempotents(H)
    subs = [conjugacy_class_coideal(H, cd, i) for i in range(len(cd))]
    assert sum(s.dim for s in subs) == 36
    total = Subspace(H)
    for s in subs:
        for v in s.basis_vecs():
            total.add(v)
    assert total.dim == 36


# ---------------------------------------------------------------------------
# membership criterion


def test_membership_verdicts_on_s3(s3, ks3):
    H, _ = ks3
    cd = rh_idempotents(H)
    fr = f_rob(H)
    j_id = class_index_of(s3, cd, "()")
    j_rot = class_index_of(s3, cd, "(1 2 3)")
    j_flip = class_index_of(s3, cd, "(1 2)")
    assert membership_test(H, cd, fr, j_id) == (True, True)
    assert membership_test(H, cd, fr, j_rot) == (True, True)
    assert membership_test(H, cd, fr, j_flip) == (False, False)
    assert fr(cd.eta[j_rot]) == rat(9)
    assert fr(cd.eta[j_flip]) == rat(0)


def test_membership_of_trivial_class(ks3):
    H, _ = ks3
    cd = rh_idempotents(H)
    _, lam = integrals(H)
    assert membership_test(H, cd, lam * rat(6).inverse(), 0) == (True, True)


def test_membership_verdicts_on_q8(q8, kq8):
    H, _ = kq8
    cd = rh_idempotents(H)
    fr = f_rob(H)
    verdicts = {}
    for j in range(len(cd)):
        label = H.labels[min(cd.eta[j].vec)]
        verdicts[label] = membership_test(H, cd, fr, j)[0]
    assert verdicts == {"1": True, "-1": True, "i": False, "j": False, "k": False}


def test_membership_requires_character_span(ks3):
    H, _ = ks3
    cd = rh_idempotents(H)
    with pytest.raises(ValueError):
        membership_test(H, cd, HFunc(H, {1: ONE}), 0)


# ---------------------------------------------------------------------------
# suites


@pytest.mark.parametrize("fix", ["ks3", "kq8", "dc2", "ds3"])
def test_eta_suite_passes(request, fix):
    H, _ = request.getfixturevalue(fix)
    report = theorem_eta_suite(H)
    assert [e for e in report if e["status"] == "fail"] == []
    (probe,) = [e for e in report if e["check"] == "question_fn_pairing_vs_hprime"]
    assert probe["status"] == "evidence"


def test_cas5_identity_direct(kq8):
    H, _ = kq8
    cd = rh_idempotents(H)
    acc = HElem(H, {})
    for i in range(len(cd)):
        s_eta = HElem(H, H.antipode_raw(cd.eta[i].vec))
        acc = acc + (cd.eta[i] * s_eta) * rat(cd.class_dims[i])
    assert acc * rat(8).inverse() == z_n(H, 2)


def test_fusion_coefficients_on_s3(ks3):
    H, irr = ks3
    # chi_2 is the 2-dimensional character; chi_2 s(chi_2) = chi_0 + chi_1 + chi_2
    (i2,) = [i for i, d in enumerate(irr.degrees) if d == 2]
    assert fusion_coefficients(H, i2) == [1, 1, 1]
    assert fusion_coefficients(H, 0) == [1, 0, 0]


def test_kaplansky_on_double(ds3):
    H, _ = ds3
    report = kaplansky_report(H)
    by_name = {e["check"]: e for e in report}
    assert by_name["degrees_divide_dimension"]["status"] == "pass"
    for name in ("frob", "f2", "iterated"):
        assert by_name[f"integral_coefficients[{name}]"]["status"] == "pass"
    assert by_name["iterated_summands_integral"]["status"] == "pass"
    assert by_name["second_indicator_vector"]["status"] == "evidence"


def test_kaplansky_on_group_algebras(ks3, kq8):
    for H, _ in (ks3, kq8):
        report = kaplansky_report(H)
        assert [e for e in report if e["status"] == "fail"] == []


# ---------------------------------------------------------------------------
# Drinfeld map


def test_double_r_matrix_is_quasitriangular_and_factorizable(dc2, ds3):
    for H, _ in (dc2, ds3):
        rdata = r_matrix_data(H)
        assert rdata.factorizable


def test_factorizable_suite_on_doubles(dc2, ds3):
    for H, _ in (dc2, ds3):
        report = factorizable_suite(H, r_matrix_data(H))
        assert [e for e in report if e["status"] == "fail"] == []
        (ev,) = [e for e in report if e["check"] == "drinfeld_map_on_trivial_character"]
        assert ev["witness"]["equals_eta_index"] == 0


def test_drinfeld_map_values_on_double(ds3):
    H, irr = ds3
    rdata = r_matrix_data(H)
    cd = rh_idempotents(H)
    for i in range(1, len(irr)):
        v = drinfeld_map(H, rdata, irr.characters[i])
        matches = [j for j in range(len(cd))
                   if cd.eta[j] * rat(irr.degrees[i]) == v]
        assert len(matches) == 1


def test_trivial_r_matrix_not_factorizable(ks3):
    H, _ = ks3
    rdata = r_matrix_data(H, tensor_of(H.one(), H.one()))
    assert not rdata.factorizable
    with pytest.raises(NotFactorizable):
        factorizable_suite(H, rdata)


def test_broken_r_matrix_rejected(dc2):
    H, _ = dc2
    bad = dict(H.r_matrix)
    key = next(iter(bad))
    bad[key] = bad[key] * rat(2)
    with pytest.raises(NotQuasitriangular):
        r_matrix_data(H, bad)


def test_missing_r_matrix_rejected(ks3):
    H, _ = ks3
    with pytest.raises(ValueError):
        r_matrix_data(H)


# ---------------------------------------------------------------------------
# section wrapper


def test_sec4_wrapper_full_pass_on_double(ds3):
    H, _ = ds3
    report = theorem_suite_sec4(H)
    assert [e for e in report if e["status"] == "fail"] == []
    names = {e["check"] for e in report}
    assert "drinfeld_map_sends_chi_to_eta" in names
    assert "eta_in_z2^1_coideal_iff_f1_pairing" in names


def test_sec4_wrapper_skips_without_r_matrix(ks3):
    H, _ = ks3
    report = theorem_suite_sec4(H)
    assert [e for e in report if e["status"] == "fail"] == []
    (skip,) = [e for e in report if e["check"] == "factorizable_applicable"]
    assert skip["status"] == "evidence"


def test_sec4_wrapper_skips_non_almost_cocommutative(dual_s3):
    H, _ = dual_s3
    report = theorem_suite_sec4(H)
    assert [e["check"] for e in report] == ["classdata_applicable"]
    assert report[0]["status"] == "evidence"
