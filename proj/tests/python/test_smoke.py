import pytest

import artin

KITE = "generators: a b c d\na b 3\nb c 3\nc d 3\nd a 3\nb d 3\n"
A3 = "generators: a b c\na b 3\nb c 3\n"


def test_analyze_a3():
    r = artin.analyze(A3)
    assert r["spherical"]
    assert r["coxeter_order"] == "24"
    assert [f["tag"] for f in r["families"]] == ["A_3"]
    assert r["center"]["rank"] == 1


def test_kite_certifies_under_assumption():
    trace = artin.certify(KITE, assume_kpi1=True)
    assert trace["rule"] == "FreeOfInfinityBase"
    assert artin.replay(trace)
    assert artin.certify(KITE)["refusal"] == "NoKpi1"


def test_tampered_trace_fails_replay():
    trace = artin.certify(KITE, assume_kpi1=True)
    for p in trace["premises"]:
        if p["check"] == "maximal_spherical":
            p["args"]["T"] = ["a", "b"]
    assert not artin.replay(trace)


def test_free_group_chain():
    trace = artin.certify("generators: v w\nv w inf\n")
    assert trace["children"][1]["children"][0]["rule"] == "FreeGroupBase"


def test_surface_and_oracle():
    assert artin.surface_suite(KITE)["passed"]
    assert artin.coxeter_order(A3) == {"diagram": artin.analyze(A3)["diagram"],
                                       "cap": 20000, "order": 24}
    tri = "generators: a b c\na b 3\nb c 3\na c 3\n"
    assert artin.coxeter_order(tri, cap=100)["exceeded_cap"] == 100


def test_errors():
    with pytest.raises(artin.DiagramError):
        artin.analyze("generators:\n")
    with pytest.raises(artin.NotSmallType):
        artin.surface_suite("generators: a b\na b 4\n")
