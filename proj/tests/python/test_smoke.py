import json

import pytest

import donkeykit

DISCOURSE = "[[a man] [witp]] . [[he] [whistles]]"


def farm(beats):
    pair = [["u1", "u2"]]
    return {
        "universe": ["u1", "u2"],
        "pred": {"farmer": ["u1"], "donkey": ["u2"]},
        "rel": {"own": pair, "beat": pair if beats else []},
    }


def test_normalize_type():
    assert donkeykit.normalize_type("(e * e) |x 1") == "e |x e |x 1"
    assert donkeykit.normalize_type("1 |x e |> 1") == "e |> 1"


def test_typecheck():
    assert donkeykit.typecheck("(gIn_0_0 whistle he)") == ["e |> 1"]
    assert donkeykit.typecheck("(whistle he)") == []
    assert donkeykit.typecheck("(witp (a man))", static=True) == ["1"]


def test_errors():
    with pytest.raises(donkeykit.ParseError):
        donkeykit.typecheck("((")
    with pytest.raises(donkeykit.UnknownLexeme):
        donkeykit.typecheck("(gIn_0_0 sing he)")
    assert issubclass(donkeykit.ParseError, donkeykit.Error)


def test_derive_bound_reading():
    ds = donkeykit.derive(DISCOURSE, "e |x 1")
    assert len(ds) == 1
    assert ds[0]["term"].startswith("(z_0_0 (gOut_1_0 seq)")
    assert ds[0]["reading"]["z"] == 1
    assert donkeykit.derive(DISCOURSE, "1") == []


def test_evaluate():
    assert donkeykit.evaluate("(every x y)", "1", farm(True))["truth"] is True
    assert donkeykit.evaluate("(every x y)", "1", farm(False))["truth"] is False
    r = donkeykit.evaluate("(gIn_0_0 whistle he)", "e |> 1",
                           {"universe": ["a", "b"], "pred": {"whistle": ["b"]}})
    assert r["table"] == [{"args": ["a"], "truth": False}, {"args": ["b"], "truth": True}]


def test_check():
    assert "donkey-universal" in donkeykit.spec_ids()
    r = donkeykit.check("a-man-whistles-bound", 3)
    assert r["checked"] == 584
    assert r["mismatch_count"] == 0
    a = donkeykit.check("donkey-universal", 3, random=200, seed=7)
    assert a == donkeykit.check("donkey-universal", 3, random=200, seed=7)
    assert a["mismatch_count"] == 0


def test_run_cli():
    code, out, err = donkeykit.run_cli(["typecheck", "(gIn_0_0 whistle he)", "--json"])
    assert code == 0
    assert json.loads(out) == ["e |> 1"]
    assert donkeykit.run_cli(["derive", DISCOURSE, "--budget", "5"])[0] == 3
