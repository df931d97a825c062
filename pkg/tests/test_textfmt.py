import random
from fractions import Fraction

import pytest

from behaviorctl.behavior import Behavior, equals, minimize
from behaviorctl.oracle import random_behavior
from behaviorctl.polymat import XI as x
from behaviorctl.polymat import Poly, PolyMat
from behaviorctl.synthesis import local_canonical
from behaviorctl.textfmt import (
    ModelFile,
    ParseError,
    load_model,
    parse_model,
    serialize,
    tokenize,
)

from conftest import controller1_expected, desired1, desired2, plant1, plant2


def test_model_file_parses(model_path):
    m = load_model(model_path)
    assert set(m.behaviors) == {"P1", "P2", "K1", "K2"}
    assert m.behaviors["P1"] == plant1() and m.behaviors["K2"] == desired2()
    net = m.network("mass_spring")
    assert net.edges[0].s_dim == 2 and net.plant(2) == plant2() and net.desired(1) == desired1()


def test_model_round_trip(model_path):
    m = load_model(model_path)
    again = parse_model(serialize(m))
    for name, B in m.behaviors.items():
        assert equals(B, again.behaviors[name])
    assert again.networks == m.networks


def test_full_behavior_from_empty_rows():
    m = parse_model("behavior F { vars: w:1; rows: ; }")
    assert m.behaviors["F"].R.shape == (0, 1)


def test_first_plant_row():
    m = parse_model("behavior B { vars: a:6; rows: [xi^2+2, -1, 0, -1, 0, -1]; }")
    assert m.behaviors["B"].R == plant1().R.select_rows([0])


def test_serialize_idempotent(model_path):
    once = serialize(load_model(model_path))
    assert serialize(parse_model(once)) == once


def test_controller_serializes_minimized(P1, K1):
    text = serialize(local_canonical(P1, K1), name="C1can", canonical=True)
    B = parse_model(text).behaviors["C1can"]
    assert B.R.rows == 3 and equals(B, controller1_expected())


def test_rational_coefficients():
    B = parse_model("behavior B { vars: a:2; rows: [1/2xi - 3, 4*xi^3]; }").behaviors["B"]
    assert B.R == PolyMat([[Poly([-3, "1/2"]), 4 * x**3]])
    text = serialize(B)
    assert "1/2xi-3" in text and "4xi^3" in text and "/1" not in text


def test_comments_and_whitespace():
    text = "# header\nbehavior B {  # trailing\n vars: a:1;\n rows: [ xi ];\n}\n"
    assert parse_model(text).behaviors["B"].R == PolyMat([[x]])


@pytest.mark.parametrize("text, line, col, needle", [
    ("behavior B { vars: a:1; rows: [y]; }", 1, 32, "only 'xi'"),
    ("behavior B { vars: a:1; rows: [xi^-1]; }", 1, 35, "negative"),
    ("behavior B { vars: a:2;\n rows: [xi]; }", 2, 8, "entries"),
    ("behavior B { vars: a:1; rows: [xi xi]; }", 1, 35, "multivariate"),
    ("network N { subsystems: (1, P, K); edges: ; }", 1, 29, "undefined"),
    ("behavior B { vars: a:1; rows: [1]; }\nbehavior B { vars: a:1; rows: ; }", 2, 10, "twice"),
    ("behavior B { vars: a:1; rows: [1/0]; }", 1, 34, "zero denominator"),
    ("behavior B { vars: a:1, a:2; rows: ; }", 1, 25, "repeated"),
    ("behavior B { vars: a:1; rows: [1] }", 1, 35, "expected ';'"),
    ("behavior B { vars: a:1; rows: [$]; }", 1, 32, "unexpected character"),
])
def test_parse_errors_have_positions(text, line, col, needle):
    with pytest.raises(ParseError) as exc:
        parse_model(text)
    assert (exc.value.line, exc.value.col) == (line, col)
    assert needle in str(exc.value)


def test_network_consistency_checked_at_parse_time():
    text = """
    behavior P1 { vars: w1:1, s12:1, c1:1; rows: [xi, 1, -1]; }
    behavior P2 { vars: w2:1, s12:2, c2:1; rows: [xi, 1, 0, -1]; }
    behavior K1 { vars: w1:1; rows: [xi]; }
    behavior K2 { vars: w2:1; rows: [xi]; }
    network N { subsystems: (1, P1, K1), (2, P2, K2); edges: (1, 2, s=1, k=0); }
    """
    with pytest.raises(ParseError) as exc:
        parse_model(text)
    assert "inconsistent" in str(exc.value)


def test_tokens_point_inside_source():
    toks = tokenize("behavior  B\n  {")
    assert [(t.text, t.line, t.col) for t in toks[:3]] == [("behavior", 1, 1), ("B", 1, 11), ("{", 2, 3)]


def _random_model(seed: int) -> ModelFile:
    rng = random.Random(seed)
    m = ModelFile()
    for k in range(rng.randint(1, 3)):
        groups = [(f"g{j}", rng.randint(0, 2)) for j in range(rng.randint(1, 3))]
        B = random_behavior(groups, 3, max_deg=3, coeff_bound=9, rng=rng)
        # non-integer coefficients too
        B = Behavior(B.sig, B.R.scale(Fraction(rng.randint(-5, 5) or 1, rng.randint(1, 7))))
        m.behaviors[f"B{k}"] = B
    return m


@pytest.mark.parametrize("seed", range(20))
def test_random_round_trip(seed):
    m = _random_model(seed)
    back = parse_model(serialize(m))
    for name, B in m.behaviors.items():
        assert back.behaviors[name].sig == B.sig
        assert equals(back.behaviors[name], B)
    canon = parse_model(serialize(m, canonical=True))
    for name, B in m.behaviors.items():
        assert equals(canon.behaviors[name], minimize(B))
