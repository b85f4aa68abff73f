import pytest

import tqbc


@pytest.fixture
def wxyz():
    return tqbc.Frame.parse_named("w,x,y,z")


def test_team_queue_and_stq(wxyz):
    left = tqbc.parse_tpo("z | w | x y", wxyz)
    right = tqbc.parse_tpo("x z | y | w", wxyz)
    assert tqbc.format_tpo(tqbc.combine(left, right, "tq:12,2,1"), wxyz) == "x z | y | w"
    out = tqbc.combine(left, right)
    assert tqbc.format_tpo(out, wxyz) == "x z | w y"
    assert tqbc.recover_schedule(left, right, out) == "12,12"
    assert tqbc.check_property("spu+", left, right, out, wxyz) is None


def test_variants(wxyz):
    chain = tqbc.parse_tpo("w | x | y | z", wxyz)
    merged = tqbc.parse_tpo("w | x y | z", wxyz)
    assert tqbc.is_s_variant(chain, merged, wxyz.parse_set("y z"))
    assert not tqbc.is_s_variant(chain, merged, wxyz.parse_set("x y"))


def test_enumeration_counts():
    assert [len(tqbc.enumerate_tpos(n)) for n in range(1, 5)] == [1, 3, 13, 75]


def test_contractions():
    f = tqbc.Frame.parse_named("x,y,z,w")
    state = tqbc.parse_tpo("x | y | z | w", f)
    a = f.parse_set("x w")
    assert tqbc.format_tpo(tqbc.contract(state, a, op="lex"), f) == "x y | z w"
    assert tqbc.format_tpo(tqbc.contract(state, a, revision="lex"), f) == "x y | z | w"
    assert tqbc.format_tpo(tqbc.revise(state, a.complement(), "lex"), f) == "y | z | x | w"


def test_postulate_counterexample_dict():
    v = tqbc.Vocabulary.parse("p,q")
    f = tqbc.Frame.propositional(v)
    witness = tqbc.parse_tpo("11 | 10 01 | 00", f)
    cx = tqbc.check_postulate("ehi", witness, v, revision="lex", contraction="via-combi")
    assert cx is not None
    assert list(cx) == ["postulate", "atoms", "state", "sentences", "worlds", "narrative"]
    assert cx["postulate"] == "EHI"
    assert tqbc.check_postulate("agm-r1", witness, v) is None


def test_models_and_theory():
    v = tqbc.Vocabulary.parse("p,q")
    m = v.models("p & q")
    assert len(m) == 1
    assert v.models(v.theory(m)) == m


def test_verify_report():
    report = tqbc.verify("prop10")
    assert report["pass"] is True
    assert report["instances"] == 1125
    assert "prop4" in tqbc.theorems()


def test_errors_map_to_exceptions(wxyz):
    with pytest.raises(tqbc.FormatError):
        tqbc.parse_tpo("x | y", wxyz)
    with pytest.raises(tqbc.InconsistentInputError):
        tqbc.revise(tqbc.Tpo.flat(4), tqbc.WorldSet(4, 0))
    with pytest.raises(tqbc.Error):
        tqbc.verify("prop3", 9)
    with pytest.raises(ValueError):
        tqbc.combine(tqbc.Tpo.flat(2), tqbc.Tpo.flat(2), "bogus")
