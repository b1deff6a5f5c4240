"""Smoke test for the wdp_delta_py extension module."""

import json

import wdp_delta_py as wd

ids = wd.surfaces()
assert len(ids) == 18 and ids[0] == "dp5-1", ids

s = wd.Surface("dp6-5")
assert s.degree == "6/1"
assert s.pair("E", "F2") == "1/1" and s.pair("E", "F1") == "0/1"
p, n = s.decompose("E", "3")
assert n == [("F1", "1/1"), ("F2", "2/1"), ("F3", "3/2")], n

ray = json.loads(s.walk("F2"))
assert ray["tau"] == "4/1"
assert [c["lo"] for c in ray["chambers"]] == ["0/1", "1/1"]

assert wd.Surface("dp5-7").s_invariant("E1") == "13/15"
assert wd.Surface("dp6-3").global_delta() == "9/14"
report = json.loads(wd.Surface("dp8-sigma0").report())
assert report["global_delta"] == "1/1"

ok, diffs = wd.Surface("dp7-1").verify()
assert ok and not diffs
ok, diffs = wd.Surface("dp5-5").verify()
assert not ok and len(diffs) == 2

for bad in (lambda: wd.Surface("dp4-1"), lambda: s.decompose("F1", "9"), lambda: s.pair("E", "nope")):
    try:
        bad()
    except (KeyError, RuntimeError, ValueError):
        pass
    else:
        raise AssertionError("expected an error")

print(f"ok: {len(ids)} surfaces, {s!r} P(3) = {p}")
