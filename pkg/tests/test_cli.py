import json


from hooklab.cli import run
from hooklab.weights import WeightTable


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_hookexp_text(capsys):
    code, out, _ = call(capsys, "hookexp", "--type", "PA", "--f", "exp(x)", "--n", "8")
    assert code == 0
    assert out == "[1, 1/4, 1/9, 1/16, 1/25, 1/36, 1/49, 1/64]"


def test_singular_exit_code(capsys):
    code, _, err = call(capsys, "hookexp", "--type", "CBT", "--f", "(1+x)/(1+x^4)", "--n", "4")
    assert code == 3
    assert "no solution for n=4" in err
    assert "[1, 0, 0]" in err


def test_guess(capsys):
    code, out, _ = call(capsys, "guess", "--values", "2,3/4,2/5,1/4,6/35,1/8,2/21,3/40,2/33")
    assert code == 0 and out == "6/(n*(n+2))"
    code, _, _ = call(capsys, "guess", "--values", "1,5,2,7,1,8,2,8")
    assert code == 4


def test_parse_error_exit_code(capsys):
    code, _, err = call(capsys, "hookexp", "--type", "PA", "--f", "exp(x", "--n", "3")
    assert code == 2 and "position 5" in err
    code, _, _ = call(capsys, "hookexp", "--type", "XX", "--f", "x", "--n", "3")
    assert code == 2


def test_json_round_trip(capsys):
    code, text, _ = call(capsys, "hookexp", "--type", "PA", "--param", "z",
                         "--f", "product(1/(1-x^k)^z, k=1..7)", "--n", "7")
    code, raw, _ = call(capsys, "hookexp", "--type", "PA", "--param", "z",
                        "--f", "product(1/(1-x^k)^z, k=1..7)", "--n", "7", "--json")
    table = WeightTable.from_json(json.loads(raw), ["z"])
    assert str(table) == text


def test_hookgen_list_and_expression(capsys):
    _, a, _ = call(capsys, "hookgen", "--type", "BT", "--rho-list", "2,3/4,2/5,1/4", "--n", "4")
    _, b, _ = call(capsys, "hookgen", "--type", "BT", "--rho-expr", "6/(n*(n+2))", "--n", "4")
    assert a == b == "1 + 2*x + 3*x^2 + 4*x^3 + 5*x^4"


def test_default_order_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("HOOKLAB_DEFAULT_N", "3")
    _, out, _ = call(capsys, "hookexp", "--type", "FT", "--f", "exp(x)")
    assert out == "[1, 1/4, 1/9]"


def test_etamake(capsys):
    code, out, err = call(capsys, "etamake", "--f",
                          "product((1-x^(4*k))*(1-x^k)^2/(1-x^(2*k))^3, k=1..infinity)", "--n", "20")
    assert code == 0 and out == "eta(4tau)*eta(tau)^2/eta(2tau)^3" and not err


def test_verify_single_and_missing(capsys):
    code, out, _ = call(capsys, "verify", "--id", "bt-exp", "--n", "10")
    assert code == 0 and out.startswith("PASS")
    code, _, _ = call(capsys, "verify", "--id", "no-such-entry")
    assert code == 2


def test_catalog_export(capsys, tmp_path):
    path = tmp_path / "catalog.json"
    code, _, _ = call(capsys, "catalog", "--output", str(path))
    assert code == 0
    assert len(json.loads(path.read_text())) >= 45
