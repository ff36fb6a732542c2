import json

import pytest

import orbitadm

H3_YZ = """algebra h3
dim 3
basis X Y Z
bracket X Y = Z
subalgebra Y; Z
functional 0, 1
"""

EXPECTED = {
    "abelian_r3": ("AbsolutelyContinuous", "ConjecturallyNotAdmissible"),
    "axb_f0": ("Singular", "NotAdmissible"),
    "axb_f1": ("AbsolutelyContinuous", "Admissible"),
    "diag12": ("Singular", "NotAdmissible"),
    "grelaud": ("AbsolutelyContinuous", "Admissible"),
    "h3_x": ("AbsolutelyContinuous", "ConjecturallyNotAdmissible"),
    "h3_yz": ("Singular", "NotAdmissible"),
    "h3_z": ("Singular", "NotAdmissible"),
    "h5": ("AbsolutelyContinuous", "ConjecturallyNotAdmissible"),
}


def test_corpus_verdicts():
    corpus = orbitadm.corpus()
    assert sorted(corpus) == sorted(EXPECTED)
    for name, (spectral, admissibility) in EXPECTED.items():
        report = orbitadm.verdict(corpus[name], seed=7)
        assert report["spectral"]["verdict"] == spectral, name
        assert report["admissibility"]["verdict"] == admissibility, name
        assert list(report) == [
            "structure", "d_tau", "m", "witness", "spectral",
            "admissibility", "warnings", "seed", "trials",
        ]


def test_parse_and_normalize():
    parsed = orbitadm.parse(H3_YZ)
    assert parsed["basis"] == ["X", "Y", "Z"]
    assert parsed["generators"] == [["0", "1", "0"], ["0", "0", "1"]]
    assert parsed["functional"] == ["0", "1"]
    assert orbitadm.normalize(orbitadm.normalize(H3_YZ)) == orbitadm.normalize(H3_YZ)


def test_ranks_agree():
    d_tau, witness, free = orbitadm.generic_rank(H3_YZ, seed=3)
    assert (d_tau, free) == (1, False)
    assert len(witness) == 1
    assert orbitadm.symbolic_rank(H3_YZ)[0] == 1


def test_stabilizer_and_jacobian():
    rep = orbitadm.stabilizer(H3_YZ, [5])
    assert rep["rank_M"] == 1
    assert rep["dim_G_orbit"] == 2
    jac = orbitadm.jacobian(orbitadm.corpus()["axb_f1"], ["0"])
    assert jac["numerical_rank"] == 2
    assert jac["max_dev_topleft"] < 1e-6


def test_errors():
    with pytest.raises(orbitadm.ParseError):
        orbitadm.parse("algebra h3\ndim 3\nbasis X Y Z\nbracket X X = Z\n")
    broken = "algebra b\ndim 3\nbasis X Y Z\nbracket X Y = Z\nbracket X Z = X\n"
    assert any("(X, Y, Z)" in v for v in orbitadm.validate(broken))
    with pytest.raises(orbitadm.OrbitadmError):
        orbitadm.verdict(broken)
    sl2 = "algebra sl2\ndim 3\nbasis H E F\nbracket H E = 2*E\nbracket H F = -2*F\nbracket E F = H\n"
    with pytest.raises(orbitadm.PreconditionFailed):
        orbitadm.verdict(sl2)


def test_run_cli_is_deterministic():
    args = ["verdict", "corpus:grelaud", "--seed", "7", "--json"]
    first = orbitadm.run_cli(args)
    assert first[0] == 0
    assert first == orbitadm.run_cli(args)
    assert json.loads(first[1])["admissibility"]["verdict"] == "Admissible"
