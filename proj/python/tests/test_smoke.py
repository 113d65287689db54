import pytest

import bpe


def test_theta3_breaks_at_level_one():
    r = bpe.decide(bpe.Graph.fixture("THETA3"), "ab:2", trace=True)
    assert r["verdict"] == "breaking"
    assert r["witness"]["path"] == "a"
    assert r["witness"]["value"] == "u->v[a:1]"
    assert r["witness"]["level"] == 1
    assert r["trace"].endswith("VERDICT breaking witness=a level=1\n")


def test_cycles_hold():
    for name in ["C2", "C3", "DECC4", "DIGON"]:
        assert bpe.decide(bpe.Graph.fixture(name), "ab:3")["verdict"] == "holds"


def test_trivial_variety_breaks_on_digon():
    assert bpe.decide(bpe.Graph.fixture("C2"), "trivial")["verdict"] == "breaking"


def test_free_variety_is_rejected_by_decide():
    with pytest.raises(ValueError):
        bpe.decide(bpe.Graph.fixture("THETA3"), "ab")


def test_graph_json_round_trip():
    doc = {"vertices": ["x", "y"], "edges": [{"id": "p", "src": "x", "dst": "y"}, {"id": "q", "src": "y", "dst": "y"}]}
    g = bpe.Graph.from_json(doc)
    assert g.to_json() == doc
    assert g.vertex_count == 2 and g.edges == ["p", "q"]


def test_builtin_certificates_verify():
    for name in ["THETA3", "DIGONS2"]:
        cert = bpe.builtin_certificate(name)
        r = bpe.check_certificate(cert)
        assert r["verdict"] == "Verified"
        assert r["final_upper_p"] == {"vertices": ["u"], "edges": []}


def test_tampered_certificate_is_rejected():
    cert = bpe.builtin_certificate("THETA3")
    cert["root"]["factorizations"][0].pop()
    assert bpe.check_certificate(cert)["verdict"] in ("Malformed", "NotProven")


def test_minors():
    theta = bpe.Graph.fixture("THETA3")
    assert bpe.minor_contains(theta, theta) is not None
    assert bpe.minor_contains(bpe.Graph.fixture("C4"), theta) is None
    assert bpe.structure_class(bpe.Graph.fixture("DIGONS2")) == "ContainsForbidden(DIGONS2)"
    assert bpe.structure_class(bpe.Graph.fixture("DECC5")) == "CycleWithDecorations(5)"
    assert set(bpe.minor_catalog()) == {"THETA3", "DIGONS2"}


def test_small_survey():
    r = bpe.survey(3, 4, ["ab:2", "trivial"])
    assert r["disagreements"] == 0
    assert sorted(r["minimal_breaking"]["ab:2"]) == sorted(
        [bpe.Graph.fixture("THETA3").canonical_code(), bpe.Graph.fixture("DIGONS2").canonical_code()]
    )


def test_value_and_content():
    g = bpe.Graph.fixture("THETA3")
    assert bpe.value_of_path(g, "ab", "u", "a b'") == "u->u[a:1,b:-1]"
    assert bpe.content(g, "ab:2", "u", "a")["p0"] == "{u,v;a}"


def test_dot_highlight():
    dot = bpe.Graph.fixture("C3").to_dot("0;")
    assert '"0" [color=red' in dot
