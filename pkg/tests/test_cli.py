import json
import subprocess
import sys

from lrwkit.cli import run
from lrwkit.edgelist import parse_edgelist


def write(path, text):
    path.write_text(text)
    return str(path)


def out_of(capsys, argv):
    code = run(argv)
    return code, capsys.readouterr().out


def test_verify_p4(tmp_path, capsys):
    p4 = write(tmp_path / "p4.el", "n 4\n0 1\n1 2\n2 3\n")
    code, out = out_of(capsys, ["verify", p4, "--order", "0,1,2,3"])
    rep = json.loads(out)
    assert code == 0 and rep["ok"] and rep["roundtrip_ok"] and rep["width"] == 1


def test_lrw_k1_prints_zero(tmp_path, capsys):
    k1 = write(tmp_path / "k1.el", "n 1\n")
    code, out = out_of(capsys, ["lrw", k1])
    assert code == 0 and out.splitlines()[0] == "0"


def test_encode_decode_files_byte_identical(tmp_path, capsys):
    expr = tmp_path / "a.nlc"
    assert run(["gen", "random-nlc", "30", "3", "--seed", "4", "-o", str(expr)]) == 0
    el = tmp_path / "g.el"
    assert run(["nlc", "eval", str(expr), "-o", str(el)]) == 0
    enc = tmp_path / "enc.json"
    assert run(["encode", str(el), "-o", str(enc)]) == 0
    back = tmp_path / "back.el"
    assert run(["decode", str(enc), "-o", str(back)]) == 0
    assert back.read_bytes() == el.read_bytes()


def test_outputs_deterministic(tmp_path, capsys):
    el = tmp_path / "g.el"
    run(["gen", "lozin", "3", "5", "--tilde", "-o", str(el)])
    for cmd in (["partition", str(el)], ["width", str(el)], ["inspect", str(el)],
                ["nlc", "from-order", str(el)], ["encode", str(el)]):
        _, first = out_of(capsys, cmd)
        _, second = out_of(capsys, cmd)
        assert first == second and first


def test_width_label(tmp_path, capsys):
    el = write(tmp_path / "c5.el", "0 1\n1 2\n2 3\n3 4\n4 0\n")
    _, out = out_of(capsys, ["width", el])
    assert "upper bound" in json.loads(out)["label"]
    _, out = out_of(capsys, ["width", el, "--order", "0,1,2,3,4"])
    doc = json.loads(out)
    assert doc["width"] == 2 and "upper bound" not in doc["label"]


def test_generators(tmp_path, capsys):
    _, out = out_of(capsys, ["gen", "halfgraph", "2"])
    assert parse_edgelist(out.splitlines()).edges() == [(0, 2), (0, 3), (1, 3)]
    k2 = write(tmp_path / "k2.el", "0 1\n")
    _, out = out_of(capsys, ["gen", "lexpow", k2, "2"])
    assert parse_edgelist(out.splitlines()).num_edges == 6


def test_detect_halfgraph(tmp_path, capsys):
    h = tmp_path / "h.el"
    run(["gen", "halfgraph", "3", "-o", str(h)])
    code, out = out_of(capsys, ["detect", "halfgraph", "--order", "3", str(h)])
    assert code == 0 and json.loads(out)["found"]
    k33 = write(tmp_path / "k33.el", "".join(f"{a} {b}\n" for a in range(3) for b in range(3, 6)))
    _, out = out_of(capsys, ["detect", "halfgraph", "--order", "2", k33])
    assert not json.loads(out)["found"]


def test_nlc_factorize(tmp_path, capsys):
    expr = tmp_path / "a.nlc"
    run(["gen", "random-nlc", "50", "2", "--seed", "1", "-o", str(expr)])
    code, out = out_of(capsys, ["nlc", "factorize", str(expr)])
    doc = json.loads(out)
    assert code == 0 and doc["depth"] <= doc["depth_bound"] == 12


def test_exit_codes(tmp_path, capsys):
    p4 = write(tmp_path / "p4.el", "0 1\n1 2\n2 3\n")
    assert run(["width", p4, "--order", "0,1"]) == 2
    assert run(["width", p4, "--order", "a,b"]) == 2
    assert run(["nosuch"]) == 2
    assert run(["width", str(tmp_path / "missing.el")]) == 2
    assert run(["decode", write(tmp_path / "bad.json", "{}")]) == 2
    assert run(["nlc", "eval", write(tmp_path / "bad.nlc", "0 5 e={} r=[0]\n")]) == 2
    big = write(tmp_path / "big.el", "n 30\n0 1\n")
    assert run(["lrw", big]) == 3
    assert run(["detect", "halfgraph", "--order", "4", p4]) == 3
    capsys.readouterr()


def test_verify_reports_failure(tmp_path, capsys, monkeypatch):
    import lrwkit.cli as cli
    p4 = write(tmp_path / "p4.el", "0 1\n1 2\n2 3\n")
    monkeypatch.setattr(cli, "check_invariants", lambda act: ["forced"])
    code, out = out_of(capsys, ["verify", p4])
    assert code == 1 and json.loads(out)["ok"] is False


def test_module_entry_point(tmp_path):
    k1 = write(tmp_path / "k1.el", "n 1\n")
    res = subprocess.run([sys.executable, "-m", "lrwkit", "lrw", k1], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("0\n")
