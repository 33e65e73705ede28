import json

import pytest

import dimdist.harness as harness
from dimdist.cli import main
from dimdist.graph import build_graph, complete, complete_multipartite, disjoint_union, join, wheel
from dimdist.graph6 import decode, encode
from dimdist.harness import Check, IncompatibleCorpus, compute, parse_check, verify


def test_compute_records():
    rec = compute(wheel(5))
    assert (rec["dim"], rec["D"]) == (2, 3)
    two_k3 = disjoint_union(complete(3), complete(3))
    rec = compute(two_k3)
    assert rec["D"] == 4 and "D-n2-item6" in rec["families"] and rec["dim"] is None
    rec = compute(complete(1))
    assert (rec["dim"], rec["D"]) == (1, 1)
    json.dumps(compute(complete_multipartite([1, 2, 2])))


def test_parse_check():
    assert parse_check("prop-lemn2") == ("prop-lemn2", (1, 2, 3))
    assert parse_check("prop-lemn2:2") == ("prop-lemn2", (2,))
    assert parse_check("prop-lemn2(1,3)") == ("prop-lemn2", (1, 3))
    with pytest.raises(ValueError):
        parse_check("thm-nope")
    with pytest.raises(ValueError):
        parse_check("prop-lemn2:0")


def test_incompatible_requests(tmp_path):
    with pytest.raises(IncompatibleCorpus):
        verify("prop-w", corpus=str(tmp_path / "x.g6"))
    with pytest.raises(IncompatibleCorpus):
        verify("prop-main", max_n=8)


def test_serial_and_parallel_reports_agree():
    a = verify("thm-D-n2", 6, jobs=1).to_dict()
    b = verify("thm-D-n2", 6, jobs=3).to_dict()
    for r in (a, b):
        r.pop("elapsed_ms")
        r["config"].pop("jobs")
    assert a == b
    assert [v["graph6"] for v in a["violations"]] == ["DBW", "DK{"]


def test_violations_round_trip():
    rep = verify("thm-D-n2", 5)
    for v in rep.violations:
        rec = compute(decode(v["graph6"]))
        assert f"D={rec['D']}" in v["detail"] and f"n={rec['n']}" in v["detail"]
        assert not [f for f in rec["families"] if f.startswith("D-n2")]


def test_domain_filtering_counts():
    rep = verify("thm-D-n2", 5)
    assert rep.examined == 11 + 34 and rep.corpus["domain"] == "n >= 4"
    j, h = verify("jannesari", 5), verify("hernando", 5)
    assert j.examined + h.examined == 1 + 1 + 2 + 6 + 21 - 5  # minus the complete graphs


def test_timeout_becomes_inconclusive(monkeypatch):
    import time

    def slow(g):
        if g.n == 4:
            time.sleep(0.5)
        return None

    monkeypatch.setitem(harness.CHECKS, "prop-main", Check("prop-main", "connected", 7, slow))
    rep = verify("prop-main", 4, timeout_ms=50)
    assert len(rep.inconclusive) == 6 and not rep.violations and not rep.ok
    assert rep.examined == 1 + 1 + 2 + 6


def test_graph6_corpus_file(tmp_path):
    p = tmp_path / "c.g6"
    p.write_text("DBW\nDK{\nC~\n")
    rep = verify("thm-D-n2", 5, corpus=str(p))
    assert rep.examined == 3 and len(rep.violations) == 2


def test_cli_exit_codes(capsys, tmp_path):
    assert main(["verify", "--check", "prop-w", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert set(out) == {"check", "corpus", "examined", "violations", "inconclusive", "elapsed_ms", "config"}
    assert out["examined"] == 10
    assert main(["verify", "--check", "thm-D-n2", "--max-n", "5"]) == 1
    assert main(["compute", "--graph6", "x"]) == 2
    assert main(["family", "--spec", "wheel:5", "--g6"]) == 0
    assert decode(capsys.readouterr().out.split()[-1]) == wheel(5)
    out_file = tmp_path / "t.g6"
    assert main(["enumerate", "--n", "6", "--class", "trees", "--out", str(out_file)]) == 0
    assert len(out_file.read_text().split()) == 6
    assert main(["compute", "--graph6", encode(build_graph(3, [(0, 1)])), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["dim"] is None
