import json
import math

import pytest

PHI = (1 + math.sqrt(5)) / 2


def pentagon():
    r = 0.5 / math.sin(math.pi / 5)
    pts = []
    for v in range(5):
        t = -math.pi / 2 - math.pi / 5 + 2 * math.pi * v / 5
        pts.append([r * math.cos(t), r * math.sin(t)])
    return pts


def test_symmetric_scan_A2(eqcc, validate):
    r = eqcc("symmetric-scan", "--A", 2, "--branch", "A")
    assert r.code == 0
    recs = validate(r.json(), "root_records")
    assert [x["sign_type"] for x in recs] == ["A2", "A4"]
    m = recs[0]["masses"]
    assert abs(m[3] - 0.34199) < 1e-4
    assert abs(m[2] - 2.32) < 2e-2
    assert all(abs(x - 1) < 1e-9 for x in recs[1]["masses"])


def test_symmetric_scan_counts(eqcc, validate):
    b = validate(eqcc("symmetric-scan", "--A", 3, "--branch", "B").json(), "root_records")
    assert [x["sign_type"] for x in b] == ["B2"]
    a = validate(eqcc("symmetric-scan", "--A", 4, "--branch", "A").json(), "root_records")
    assert len(a) == 4
    assert sum(x["sign_type"] == "A4" for x in a) == 3


def test_symmetric_scan_csv_and_svg(eqcc, tmp_path):
    r = eqcc("symmetric-scan", "--A", 2, "--format", "csv")
    assert r.code == 0
    lines = r.out.strip().splitlines()
    assert len(lines) == 3
    svg = tmp_path / "family.svg"
    assert eqcc("symmetric-scan", "--A", 2, "--svg", svg).code == 0
    text = svg.read_text()
    assert text.lstrip().startswith("<svg") or "<svg" in text
    assert "<path" in text


def test_certify_exit_codes(eqcc, validate):
    r = eqcc("certify", "--mode", "unique", "--window", "A2", "--A", "2,3")
    assert r.code == 0
    c = validate(r.json(), "certificate")
    assert c["status"] == "certified"

    r = eqcc("certify", "--mode", "unique", "--window", "B2", "--A", "2,6")
    assert r.code == 0

    r = eqcc("certify", "--mode", "nocommon", "--window", "A4", "--A", "2,3")
    assert r.code == 0
    assert validate(r.json(), "certificate")["kind"] == "no-common-zero"


def test_certify_undecided_near_bifurcation(eqcc, validate):
    r = eqcc("certify", "--mode", "nocommon", "--window", "A4", "--A", "3,3.3",
             "--max-boxes", 20000)
    assert r.code == 2
    c = validate(r.json(), "certificate")
    und = [l for l in c["leaves"] if l["verdict"] == "undecided"]
    assert und
    # undecided boxes cluster around the pentagon and the critical exponent
    assert any(l["A"][0] <= 3.1204 <= l["A"][1] for l in und)
    assert all(l["y4"][0] <= 1.5388417685876268 + 0.2 and l["y4"][1] >= 1.5388417685876268 - 0.2
               for l in und)


def test_certify_precondition(eqcc, validate):
    r = eqcc("certify", "--mode", "unique", "--window", "0.2,0.3", "--branch", "A", "--A", "2,3")
    assert r.code == 1
    assert validate(r.json(), "certificate")["status"] == "precondition-failed"


def test_region_map(eqcc, validate, tmp_path):
    cells = validate(eqcc("region-map", "--at", "108,108").json(), "region_cells")
    plus = [c for c in cells if c["closure"] == "plus"]
    assert plus[0]["region"] == "I"
    star = validate(eqcc("region-map", "--at", "36,36").json(), "region_cells")
    assert "II" in {c["region"] for c in star}
    flat = validate(eqcc("region-map", "--at", "180,180").json(), "region_cells")
    assert {c["region"] for c in flat} == {"unrealizable"}

    out = tmp_path / "grid.csv"
    svg = tmp_path / "grid.svg"
    r = eqcc("region-map", "--grid", 36, "--out", out, "--svg", svg)
    assert r.code == 0
    rows = out.read_text().strip().splitlines()
    assert rows[0] == "theta12,theta23,closure,region,interior"
    assert len(rows) == 1 + 2 * 36 * 36
    regions = {row.split(",")[3] for row in rows[1:]}
    assert {"I", "II", "unrealizable"} <= regions
    assert "<path" in svg.read_text()


def test_tropical_verify(eqcc, validate):
    r = eqcc("tropical-verify", "--A", 3, "--A", "5/2", "--random", 10)
    assert r.code == 0
    reports = validate(r.json(), "tropical_report")
    assert len(reports) == 2
    for rep in reports:
        assert rep["pass"]
        assert len(rep["rays"]) == 9
        assert len(rep["cones"]) == 22


def test_tropical_ray_rejected(eqcc, validate):
    r = eqcc("tropical-verify", "--A", 3, "--ray", "1,0,0,0,0,0")
    assert r.code == 4
    rep = validate(r.json(), "tropical_report")[0]
    m = validate(rep["membership"], "membership")
    assert not m["member"]
    assert m["witness"]["initial_form"]


def test_tropical_bad_exponent(eqcc, validate):
    r = eqcc("tropical-verify", "--A", "3/2")
    assert r.code == 1
    validate(r.error(), "error")


def test_evaluate_pentagon(eqcc, validate, tmp_path):
    cfg = tmp_path / "pent.json"
    cfg.write_text(json.dumps({"points": pentagon(), "A": 3}))
    out = validate(eqcc("evaluate", cfg).json(), "evaluate")
    assert out["laura_andoyer"]["max_abs"] < 1e-12
    assert out["albouy_chenciner_f"]["max_abs"] < 1e-12
    assert out["albouy_chenciner_g"]["max_abs"] < 1e-12
    assert out["la2"]["feasible"]
    assert out["region"]["region"] == "I"
    assert max(abs(v) for v in out["cayley_menger"].values()) < 1e-10


def test_evaluate_distances_from_stdin(eqcc, validate):
    doc = {"distances": [1, PHI, PHI, PHI, PHI, PHI]}
    validate(doc, "configuration")
    out = validate(eqcc("evaluate", "-", stdin=json.dumps(doc)).json(), "evaluate")
    assert out["from_distances"]
    assert out["distances"]["equilateral"]


def test_evaluate_perturbed(eqcc, validate):
    pts = pentagon()
    pts[2][0] += 0.05
    out = validate(eqcc("evaluate", "-", stdin=json.dumps({"points": pts})).json(), "evaluate")
    assert out["laura_andoyer"]["max_abs"] > 1e-4
    assert not out["distances"]["equilateral"]


@pytest.mark.parametrize("doc,kind", [
    ({"points": [[0, 0], [0, 0], [1, 0], [1, 1], [0, 1]]}, "collision"),
    ({"points": [[0, 0]]}, "invalid-argument"),
    ({"distances": [1, 9, 1, 1, 1, 1]}, "out-of-domain"),
])
def test_evaluate_errors(eqcc, validate, doc, kind):
    r = eqcc("evaluate", "-", stdin=json.dumps(doc))
    assert r.code == 1
    assert validate(r.error(), "error")["error"] == kind


def test_evaluate_malformed_json(eqcc, validate):
    r = eqcc("evaluate", "-", stdin="{not json")
    assert r.code == 1
    validate(r.error(), "error")


def test_bifurcation(eqcc, validate):
    r = eqcc("bifurcation", "--range", "3,3.3", "--step", 0.01)
    assert r.code == 0
    b = validate(r.json(), "bifurcation")
    assert abs(sum(b["A_c"]) / 2 - 3.12036856) < 1e-3
    assert eqcc("bifurcation", "--range", "2,3", "--step", 0.05).code == 3


def test_exclude(eqcc, validate):
    r = eqcc("exclude", "--A", 3, "--branch", "both")
    assert r.code == 0
    checks = validate(r.json(), "exclusions")
    assert {c["sign_type"] for c in checks} == {"A1", "A3", "A5", "B1", "B3", "B4", "B5"}
    assert all(c["holds"] for c in checks)


def test_out_file(eqcc, tmp_path):
    out = tmp_path / "roots.json"
    assert eqcc("symmetric-scan", "--A", 2, "--out", out).code == 0
    assert len(json.loads(out.read_text())) == 2


def test_usage_errors(eqcc):
    assert eqcc("symmetric-scan").code != 0
    assert eqcc("symmetric-scan", "--A", 1).code == 1
    assert eqcc("certify", "--window", "Z9").code == 1
