import pytest

import arbor


def test_closure_full():
    c = arbor.closure(2, "0->2,1->3")
    assert c["full"]
    assert c["passes"] == 2
    assert c["size"] == 10


def test_closed_sets():
    assert arbor.is_closed(2, "0->2")
    assert not arbor.is_closed(2, "0->2,1->3")


def test_idempotent_witness():
    loc = arbor.localize(2, "0->2", composition=True)
    assert loc["hom_sizes"][1][1] == 2
    assert loc["max_hom_size"] == 2
    assert "digraph" in arbor.localize_dot(2, "0->2")


def test_oracles_agree():
    for kind in ("reps", "representable"):
        assert arbor.oracle(3, "0->2,2->4", kind=kind)["agrees"]
    assert arbor.count_representations(2, 2, 2) == 499


def test_loose_report_round_trip():
    report = arbor.loose_report(3, "0->2,1->3")
    assert report["loose_cells"] == 6
    assert not report["vanishing"]
    assert arbor.validate_report(report) == report
    report["vanishing"] = True
    with pytest.raises(arbor.DomainError):
        arbor.validate_report(report)


def test_flag_text():
    report = arbor.loose_report(1, flags="0,1 full\n0,2 proper\n1,2 empty\n")
    assert report["empty_cells"] == ["1->2"]
    with pytest.raises(ValueError):
        arbor.loose_report(1)


def test_front():
    assert arbor.census("root;0;1")["bounded"] == 3
    assert arbor.census("root;0;0", resolution=256)["bounded"] == 4
    assert arbor.front_svg("root;0;1").startswith("<svg")
    assert arbor.bump_chi(0.0) == pytest.approx(0.08)
    with pytest.raises(arbor.CapacityError):
        arbor.census("root;0;1", resolution=10000)
    with pytest.raises(arbor.DomainError):
        arbor.front_svg("root;0;0", punctures="0->1")


def test_errors():
    with pytest.raises(arbor.DomainError):
        arbor.closure(2, "1->1")
    with pytest.raises(arbor.CapacityError):
        arbor.oracle(3, "", dmax=3)


def test_selftest_subset():
    results = arbor.selftest(max_n=2, only=[1, 4])
    assert [r["id"] for r in results] == [1, 4]
    assert all(r["passed"] for r in results)
