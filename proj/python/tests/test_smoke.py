import pytest

zlab = pytest.importorskip("zlab")


def test_corpus_is_bundled():
    names = zlab.corpus_names()
    assert "f6_6a2.curve" in names
    assert len(names) >= 14


def test_classify_f6():
    r = zlab.classify("f6_6a2")
    assert r["status"] == "pass"
    assert r["configuration"] == "6A2"
    assert r["torus"]["verdict"] == "non-torus"
    assert r["alexander"]["delta"] == "1"


def test_direct_helpers():
    cusp_sextic = "(x^2 + 2*y^2 - 1)^3 + (x^3 + y^3 - 3*x*y + 1/2)^2"
    assert zlab.configuration("y^2 - x^3 + x^6 + y^6") == "A2"
    assert zlab.torus_verdict(cusp_sextic) == "torus"
    assert zlab.alexander_delta(cusp_sextic) == "(t^2-t+1)^1"
    assert zlab.normalize("(x + y)^2 - 2*x*y") == "x^2 + y^2"


def test_torus_partner_against_f6():
    text = "name = partner\nfield = 0\npoly = (x^2 + 2*y^2 - 1)^3 + (x^3 + y^3 - 3*x*y + 1/2)^2\n"
    assert zlab.classify(text)["configuration"] == "6A2"
    r = zlab.pair(text, "f6_6a2")
    assert r["pair"] is True
    assert r["verdict"].startswith("Zariski-pair candidate")


def test_family_and_semi_torus():
    r = zlab.family_6a2([-1, 1, -1, -1, 1, "-1/3", 0, -1])
    assert r["status"] == "pass"
    assert r["rank"] == 10
    s = zlab.semi_torus_verify("nt_2a5_2a2")
    assert s["semi_torus"]["outer"] == "A5"
    assert s["pencil"]["case"] == "b"


def test_reports_are_deterministic():
    assert zlab.classify("a14_a2_a1", seed=7) == zlab.classify("a14_a2_a1", seed=7)


def test_errors_raise():
    with pytest.raises(zlab.ZlabError):
        zlab.configuration("x^2 +")
    with pytest.raises(ValueError):
        zlab.family_6a2("1,2,3")
