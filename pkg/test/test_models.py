import json

import pytest
from pydantic import ValidationError

from conflab.core.lcsa import Parity, check_jacobi, check_skew
from conflab.core.polyring import D, L
from conflab.models import AlgebraFile

VIRASORO = {
    "name": "Vir_c",
    "basis": [{"name": "L"}, {"name": "C"}],
    "params": ["c"],
    "brackets": {"L,L": {"L": "d + 2*l"}, "L,C": {"C": "d + c*l"}},
}


def test_document_builds_algebra():
    alg = AlgebraFile.model_validate(VIRASORO).to_algebra()
    assert alg.name == "Vir_c"
    assert alg.names == ("L", "C")
    assert alg.parameters() == {"c"}
    assert check_skew(alg).passed
    assert check_jacobi(alg).passed


def test_mirror_is_filled_by_skew_symmetry():
    document = {
        "basis": [{"name": "L"}, {"name": "G", "parity": "odd"}],
        "brackets": {"L,L": {"L": "d + 2*l"}, "L,G": {"G": "d + 3/2*l"}},
    }
    alg = AlgebraFile.model_validate(document).to_algebra()
    assert alg.name == "algebra"
    assert alg.parity("G") is Parity.ODD
    assert alg.q("G", "L", "G") == D / 2 + L * 3 / 2


def test_load(tmp_path):
    path = tmp_path / "vir.json"
    path.write_text(json.dumps(VIRASORO), encoding="utf-8")
    assert AlgebraFile.load(path).params == ["c"]


@pytest.mark.parametrize(
    "change",
    [
        {"basis": []},
        {"basis": [{"name": "L"}, {"name": "L"}]},
        {"basis": [{"name": "l"}]},
        {"basis": [{"name": "L", "parity": "both"}]},
        {"params": ["d"]},
        {"params": ["c", "c"]},
        {"params": ["C1"]},
        {"brackets": {"L": {"L": "1"}}},
        {"brackets": {"L,X": {"L": "1"}}},
        {"brackets": {"L,L": {"L": "d + k"}}},
        {"brackets": {"L,L": {"L": "d +"}}},
        {"extra": 1},
    ],
)
def test_invalid_documents(change):
    with pytest.raises(ValidationError):
        AlgebraFile.model_validate({**VIRASORO, **change})
