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
"""

import json
import os
import sys
import tempfile

import numpy as np
import pandas as pd

from errors import InvalidInput


def jsonable(obj):
    """
    Convenience method to turn numpy/galois scalars and arrays, tuples and
    sets into plain JSON types.
    """

    if isinstance(obj, dict):

        return {str(key): jsonable(value) for key, value in obj.items()}

    if isinstance(obj, (list, tuple, set, frozenset)):

        items = sorted(obj, key=str) if isinstance(obj, (set, frozenset)) \
            else obj

        return [jsonable(item) for item in items]

    if isinstance(obj, np.ndarray):

        return jsonable(obj.tolist())

    if isinstance(obj, np.bool_):

        return bool(obj)

    if isinstance(obj, np.integer):

        return int(obj)

    return obj


def dumps(payload):

    return json.dumps(jsonable(payload), indent=2, sort_keys=False) + "\n"


def read_json(path=None):
    """
    JSON document from a file, or from stdin when path is None or '-'.
    """

    try:

        if path in (None, "-"):

            text = sys.stdin.read()

        else:

            with open(path, encoding="utf-8") as handle:

                text = handle.read()

    except OSError as err:

        raise InvalidInput(f"cannot read {path}: {err}") from err

    try:

        return json.loads(text)

    except json.JSONDecodeError as err:

        raise InvalidInput(f"malformed JSON input: {err}") from err


def flatten_record(record, prefix=""):
    """Nested dict -> one flat dict with dotted keys, for CSV rows."""

    flat = {}

    for key, value in record.items():

        name = f"{prefix}{key}"

        if isinstance(value, dict):

            flat.update(flatten_record(value, name + "."))

        elif isinstance(value, (list, tuple)):

            flat[name] = json.dumps(jsonable(value))

        else:

            flat[name] = jsonable(value)

    return flat


def records_frame(records):
    """
    Pandas DataFrame with one flattened row per record.
    """

    return pd.DataFrame([flatten_record(record) for record in records])


def write_output(data, out_path=None):
    """
    Write str or bytes to out_path atomically (temporary file in the same
    directory, then os.replace), or to stdout when out_path is None.
    """

    if isinstance(data, str):

        data = data.encode("utf-8")

    if out_path is None:

        sys.stdout.buffer.write(data)
        sys.stdout.flush()

        return

    directory = os.path.dirname(os.path.abspath(out_path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".rn_codes-")

    try:

        with os.fdopen(fd, "wb") as handle:

            handle.write(data)

        os.replace(tmp_path, out_path)

    except BaseException:

        if os.path.exists(tmp_path):

            os.remove(tmp_path)

        raise
