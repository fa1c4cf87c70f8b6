import json

from g1min import model_from_dict, model_to_dict, construct_22, scalar_multiply
from g1min.cli import main
from g1min.exactnum import is_prime


def write_model(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def quartic_file(tmp_path, coeffs, name="q.json"):
    return write_model(tmp_path, name, {"kind": "quartic", "coeffs": [str(c) for c in coeffs]})


def form22_file(tmp_path, F, name="f.json"):
    return write_model(tmp_path, name, model_to_dict(F))


def test_invariants_quartic(tmp_path, capsys):
    path = quartic_file(tmp_path, (1, 0, 0, 0, 1))
    assert main(["invariants", path]) == 0
    out = capsys.readouterr().out
    assert "I = 12" in out and "J = 0" in out and "Delta = 256" in out


def test_invariants_form22_json(tmp_path, capsys):
    path = form22_file(tmp_path, construct_22(0, 0, 0, 1))
    assert main(["invariants", path, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["Delta"] == "-64"
    assert doc["a_invariants"] == ["0", "0", "0", "1", "0"]
    assert doc["xi"] == "0" and doc["eta"] == "0"


def test_invariants_zero_model(tmp_path, capsys):
    path = quartic_file(tmp_path, (0, 0, 0, 0, 0))
    assert main(["invariants", path]) == 0
    assert "Delta = 0" in capsys.readouterr().out


def test_parse_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["invariants", str(bad)]) == 2
    path = write_model(tmp_path, "short.json", {"kind": "quartic", "coeffs": ["1"]})
    assert main(["invariants", path]) == 2


def test_level_command(tmp_path, capsys):
    path = form22_file(tmp_path, construct_22(0, 0, 0, 1))
    assert main(["level", path, "--prime", "2", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {"vDelta": 6, "vDeltaMin": 6, "kappa": 0, "level": 0}


def test_level_scaled_model(tmp_path, capsys):
    path = form22_file(tmp_path, scalar_multiply(construct_22(0, 0, 0, 1), 2))
    assert main(["level", path, "--prime", "2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["level"] == 1


def test_level_kind_mismatch_exit_3(tmp_path, capsys):
    path = quartic_file(tmp_path, (1, 0, 0, 0, 1))
    assert main(["level", path, "--prime", "2"]) == 3


def test_level_singular_exit_4(tmp_path, capsys):
    path = write_model(tmp_path, "s.json", {"kind": "form22", "coeffs": ["0"] * 9})
    assert main(["level", path, "--prime", "2"]) == 4


def test_minimise_local_and_round_trip(tmp_path, capsys):
    F = scalar_multiply(construct_22(0, 0, 0, 1), 2)
    path = form22_file(tmp_path, F)
    out_path = str(tmp_path / "min.json")
    assert main(["minimise", path, "--prime", "2", "--json", "--out", out_path]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["vDeltaInitial"] == 18 and doc["vDeltaFinal"] == 6
    assert doc["transformation"]["kind"] == "form22"
    # re-ingesting the output reports "already minimal" with the same Delta
    assert main(["minimise", out_path, "--prime", "2", "--json"]) == 0
    doc2 = json.loads(capsys.readouterr().out)
    assert doc2["alreadyMinimal"] is True
    assert doc2["vDeltaInitial"] == 6
    assert model_from_dict(doc2["model"]) == model_from_dict(doc["model"])


def test_minimise_singular_exit_4(tmp_path, capsys):
    path = write_model(tmp_path, "s.json", {"kind": "form22", "coeffs": ["0"] * 9})
    assert main(["minimise", path, "--prime", "2"]) == 4


def test_minimise_global(tmp_path, capsys):
    F = scalar_multiply(construct_22(0, 0, 0, 1), 6)
    path = form22_file(tmp_path, F)
    assert main(["minimise", path, "--global", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["primes"] == [2, 3]


def test_minimise_global_factorisation_failure_exit_5(tmp_path, capsys):
    # Delta = 256 e^3 with e a product of two primes beyond the trial bound
    p = 1 << 20
    while not is_prime(p):
        p += 1
    q = p + 1
    while not is_prime(q):
        q += 1
    path = quartic_file(tmp_path, (1, 0, 0, 0, p * q))
    assert main(["minimise", path, "--global"]) == 5


def test_construct_and_invariants_round_trip(tmp_path, capsys):
    out = str(tmp_path / "c.json")
    assert main(["construct", "--curve", "0,0,0,1", "--type", "22", "--out", out]) == 0
    capsys.readouterr()
    assert main(["invariants", out, "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["Delta"] == "-64"


def test_construct_singular_exit_4(capsys):
    assert main(["construct", "--curve", "0,0,0,0", "--type", "22"]) == 4


def test_convert_requires_corner_zero_exit_3(tmp_path, capsys):
    path = form22_file(tmp_path, construct_22(0, 0, 0, 1))
    assert main(["convert", "2to3", path]) == 3
    err = capsys.readouterr().err
    assert "a11" in err


def test_convert_2to3_works(tmp_path, capsys):
    from g1min import GroupElement, act

    swap_y = GroupElement("form22", 1, (((1, 0), (0, 1)), ((0, 1), (1, 0))))
    F = act(swap_y, construct_22(0, 0, 0, 1))
    path = form22_file(tmp_path, F)
    assert main(["convert", "2to3", path]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["kind"] == "cube"
    capsys.readouterr()
    cube_path = write_model(tmp_path, "cube.json", doc)
    assert main(["invariants", cube_path, "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["Delta"] == "-64"


def test_convert_wrong_kind_exit_3(tmp_path):
    path = quartic_file(tmp_path, (1, 0, 0, 0, 1))
    assert main(["convert", "2to3", path]) == 3
    assert main(["convert", "3to2", path]) == 3


def test_oracle_weights_count(capsys):
    assert main(["oracle", "weights", "--count-only"]) == 0
    assert capsys.readouterr().out.strip() == "81 minimal, 8 after symmetry"


def test_oracle_weights_listing(capsys):
    assert main(["oracle", "weights", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["minimal"]) == 81 and len(doc["symmetric"]) == 8


def test_oracle_min22(tmp_path, capsys):
    path = form22_file(tmp_path, construct_22(0, 0, 0, 1))
    assert main(["oracle", "min22", path, "--prime", "2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["minimal"] is True
    path = form22_file(tmp_path, scalar_multiply(construct_22(0, 0, 0, 1), 2), "g.json")
    assert main(["oracle", "min22", path, "--prime", "2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["minimal"] is False


def test_invariants_hypercube(tmp_path, capsys):
    coeffs = ["0"] * 16
    # identity pattern: entries (i,j,k,l) with i=j and k=l
    for idx in (0, 3, 12, 15):
        coeffs[idx] = "1"
    path = write_model(tmp_path, "h.json", {"kind": "hypercube", "coeffs": coeffs})
    assert main(["invariants", path, "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["Delta"] == "0"


def test_construct_critical_then_minimise(tmp_path, capsys):
    out = str(tmp_path / "crit.json")
    assert main(["construct", "--critical", "form22", "--prime", "5",
                 "--seed", "3", "--out", out]) == 0
    capsys.readouterr()
    assert main(["minimise", out, "--prime", "5", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["alreadyMinimal"] is True and doc["steps"] == []
    assert main(["level", out, "--prime", "5", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["level"] >= 1


def test_construct_requires_curve_or_critical(capsys):
    assert main(["construct", "--type", "22"]) == 2
