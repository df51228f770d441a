import pytest

from src.algebra.action import Composition
from src.algebra.families import FamilyId
from src.algebra.probes import (
    dickson_image_report,
    parabolic_family_report,
    s_family_overlap_probe,
    verify_family,
)


def test_s_family_overlap_q2(F2):
    report = s_family_overlap_probe(F2)
    assert report["ok"]
    assert [(o["degree"], o["kprime"]) for o in report["overlaps"]] == [(6, 0), (8, 2)]
    assert report["conjecture_consistent"]


def test_s_family_products_q3(F3):
    report = s_family_overlap_probe(F3)
    assert report["ok"]
    assert len(report["products"]) == 4 * 3


def test_dickson_images_m2(F2):
    assert dickson_image_report(F2, 2)["all_images"]


def test_dickson_images_m3(F2):
    rows = {r["d"]: r for r in dickson_image_report(F2, 3)["rows"]}
    for d in (6, 14):
        assert rows[d]["image_rank"] == rows[d]["invariant_dim"]
    assert all(r["image_rank"] <= r["invariant_dim"] for r in rows.values())


def test_parabolic_worked_example(F3):
    report = parabolic_family_report(F3, Composition.parse("2,1,3"))
    assert report["ok"]
    assert len(report["members"]) == 1 + 3 * 4 + 3 * 4 + 2


def test_parabolic_basis_check_q2(F2):
    report = parabolic_family_report(F2, Composition.parse("1,1"), basis_check=True)
    assert report["ok"]
    assert report["basis_ok"]
    assert sorted(r["degree"] for r in report["members"]) == [0, 1, 2, 2, 3, 3, 4, 4, 5, 6]


@pytest.mark.parametrize(
    "fid",
    [
        FamilyId("ykprime", m=3, k=1),
        FamilyId("dickson", n=2, k=0),
        FamilyId("q2top", m=3),
        FamilyId("zn", n=2),
        FamilyId("spower", a=1, b=1),
    ],
)
def test_verify_family_q2(F2, fid):
    assert verify_family(F2, fid)["ok"]


def test_verify_family_ynk_q3(F3):
    report = verify_family(F3, FamilyId("ynk", n=2, k=1))
    assert report["ok"]
    assert set(report["checks"]) == {"invariant", "degree_ok", "closed_form", "recurrence"}
