# -*- coding: utf-8 -*-
"""
Copyright (c) The Really Nice Codes developers 2026.

This file is part of Really Nice Codes.

Really Nice Codes is free software: you can redistribute it and/or modify it
under the terms of the GNU Affero General Public License as published by the
Free Software Foundation, either version 3 of the License, or (at your option)
 any later version.

Really Nice Codes is distributed in the hope that it will be useful, but
WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY
or FITNESS FOR A PARTICULAR PURPOSE.
See the GNU General Public License for more details.

You should have received a copy of the GNU Affero General Public License
along with Really Nice Codes. If not, see:
<https://www.gnu.org/licenses/agpl-3.0.html>.

Job settings. Values come from command-line flags, then an optional TOML
file with [field], [ring] and [job] sections, then the defaults below.
"""

import json
import logging

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from dataclasses import asdict, dataclass

from errors import InvalidInput
from field_tower import FieldCtx
from quotient_poly import RingParams

logger = logging.getLogger(__name__)

COMMANDS = ("classify", "dual", "selfdual", "oracle")
MODES = ("check", "enumerate", "count", "census")
SCOPES = ("ideals", "selfdual", "crosscheck")
FORMATS = ("json", "csv", "pdf")

DEFAULTS = {
    "field": {"p": 2, "m": 1, "modulus": None},
    "ring": {"k": 2, "alpha": 1, "delta": 1},
    "job": {"command": None, "mode": "check", "scope": "crosscheck",
            "format": "json", "budget": 20000, "input": None, "out": None},
}


@dataclass(frozen=True)
class JobConfig:

    p: int
    m: int
    modulus: tuple
    k: int
    alpha: object
    delta: object
    command: str
    mode: str
    scope: str
    format: str
    budget: int
    input: str
    out: str

    def __post_init__(self):

        if self.command is not None and self.command not in COMMANDS:

            raise InvalidInput(f"unknown command {self.command!r}")

        if self.mode not in MODES:

            raise InvalidInput(f"unknown self-dual mode {self.mode!r}")

        if self.scope not in SCOPES:

            raise InvalidInput(f"unknown oracle scope {self.scope!r}")

        if self.format not in FORMATS:

            raise InvalidInput(f"unknown output format {self.format!r}")

        if self.budget < 1:

            raise InvalidInput("budget must be positive")

    def field_ctx(self):

        return FieldCtx(self.p, self.m, self.modulus)

    def ring_params(self):
        """RingParams as configured, alpha and delta possibly lists."""

        ctx = self.field_ctx()

        return RingParams(ctx, self.k, int(ctx.elem(self.alpha)),
                          int(ctx.elem(self.delta)))

    def as_dict(self):

        values = asdict(self)
        values["modulus"] = None if self.modulus is None else \
            list(self.modulus)

        return values


def _parse_element(value):
    """Flags arrive as text: '3' or '[1, 0]'."""

    if value is None or not isinstance(value, str):

        return value

    try:

        parsed = json.loads(value)

    except json.JSONDecodeError as err:

        raise InvalidInput(f"cannot parse field element {value!r}") from err

    if isinstance(parsed, (int, list)):

        return tuple(parsed) if isinstance(parsed, list) else parsed

    raise InvalidInput(f"field element {value!r} must be an int or a list")


def load_config_file(path):
    """
    Read and check a TOML job file.

    Returns
    -------
    values : dict
        Flat mapping of the recognised keys found in the file.
    """

    try:

        with open(path, "rb") as handle:

            data = tomllib.load(handle)

    except OSError as err:

        raise InvalidInput(f"cannot read config {path}: {err}") from err

    except tomllib.TOMLDecodeError as err:

        raise InvalidInput(f"malformed config {path}: {err}") from err

    values = {}

    for section, content in data.items():

        if section not in DEFAULTS or not isinstance(content, dict):

            raise InvalidInput(f"unknown config section [{section}]")

        for key, value in content.items():

            if key not in DEFAULTS[section]:

                raise InvalidInput(f"unknown key {key!r} in [{section}]")

            values[key] = value

    return values


def get_job_config(flags=None, config_path=None):
    """
    Merge flags over the config file over the defaults.

    Parameters
    ----------
    flags : dict or None
        Values given on the command line; None means not given.
    config_path : str or None
        Optional TOML file.

    Returns
    -------
    config : JobConfig
    """

    merged = {}

    for section in DEFAULTS.values():

        merged.update(section)

    if config_path is not None:

        merged.update(load_config_file(config_path))

    for key, value in (flags or {}).items():

        if key not in merged:

            raise InvalidInput(f"unknown setting {key!r}")

        if value is not None:

            merged[key] = value

    for key in ("alpha", "delta"):

        merged[key] = _parse_element(merged[key])

    modulus = merged["modulus"]

    if isinstance(modulus, str):

        modulus = _parse_element(modulus)

    merged["modulus"] = None if modulus is None else tuple(modulus)

    try:

        config = JobConfig(p=int(merged["p"]), m=int(merged["m"]),
                           modulus=merged["modulus"], k=int(merged["k"]),
                           alpha=merged["alpha"], delta=merged["delta"],
                           command=merged["command"], mode=merged["mode"],
                           scope=merged["scope"], format=merged["format"],
                           budget=int(merged["budget"]),
                           input=merged["input"], out=merged["out"])

    except (TypeError, ValueError) as err:

        if isinstance(err, InvalidInput):

            raise

        raise InvalidInput(f"bad setting: {err}") from err

    logger.debug("job config %s", config.as_dict())

    return config
