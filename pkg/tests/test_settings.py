import json

import numpy as np
import pytest

import settings
import utils

from errors import InvalidInput
from field_tower import FieldCtx


def write_toml(tmp_path, text):

    path = tmp_path / "job.toml"
    path.write_text(text)

    return str(path)


def test_defaults():

    config = settings.get_job_config()

    assert (config.p, config.m, config.k) == (2, 1, 2)
    assert config.format == "json"
    assert config.budget == 20000
    assert config.ring_params().n == 4


def test_flags_override_the_file(tmp_path):

    path = write_toml(tmp_path, "[field]\np = 3\n[ring]\nk = 1\n"
                                "[job]\nbudget = 50\n")
    config = settings.get_job_config({"k": 2, "budget": None}, path)

    assert (config.p, config.k, config.budget) == (3, 2, 50)


def test_elements_parse_from_flag_text():

    config = settings.get_job_config({"p": 3, "m": 2, "alpha": "[2, 1]",
                                      "delta": "4"})

    params = config.ring_params()

    assert params.alpha == 5
    assert params.delta == 4
    assert config.as_dict()["alpha"] == (2, 1)


@pytest.mark.parametrize("text", ["[field]\ncolour = 1\n",
                                  "[network]\nport = 1\n",
                                  "[field\n"])
def test_bad_files_are_rejected(tmp_path, text):

    with pytest.raises(InvalidInput):

        settings.get_job_config({}, write_toml(tmp_path, text))


def test_unknown_mode_is_rejected():

    with pytest.raises(InvalidInput):

        settings.get_job_config({"mode": "everything"})


def test_zero_alpha_is_rejected():

    with pytest.raises(InvalidInput):

        settings.get_job_config({"alpha": "0"}).ring_params()


def test_jsonable_handles_field_values():

    GF = FieldCtx(2, 2).GF
    payload = {"x": GF([1, 3]), "y": np.int64(4), "z": frozenset({2, 1}),
               "w": (np.bool_(True),)}

    assert utils.jsonable(payload) == {"x": [1, 3], "y": 4, "z": [1, 2],
                                       "w": [True]}


def test_records_frame_flattens_nested_records():

    frame = utils.records_frame([{"a": 1, "triple": {"g": [[1], [0]],
                                                     "c": 2}}])

    assert list(frame.columns) == ["a", "triple.g", "triple.c"]
    assert json.loads(frame.loc[0, "triple.g"]) == [[1], [0]]


def test_write_output_is_atomic(tmp_path):

    target = tmp_path / "out.json"
    utils.write_output("{}\n", str(target))

    assert target.read_text() == "{}\n"
    assert [p.name for p in tmp_path.iterdir()] == ["out.json"]


def test_read_json_reports_bad_input(tmp_path):

    path = tmp_path / "bad.json"
    path.write_text("{nope")

    with pytest.raises(InvalidInput):

        utils.read_json(str(path))

    with pytest.raises(InvalidInput):

        utils.read_json(str(tmp_path / "missing.json"))
