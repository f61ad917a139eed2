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

import matplotlib

matplotlib.use("Agg")

import matplotlib.colors as mc  # noqa: E402
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

CENSUS_CMAP = mc.LinearSegmentedColormap.from_list("CENSUS_CMAP",
                                                   [(0.0, "#A8202F"),
                                                    (0.5, "#FCB927"),
                                                    (1.0, "#37913B")])


def plot_census(table, dark_mode=False):
    """
    Grouped bars of N(2^k, t, s) per t, one bar per s, with the closed
    formula drawn as markers on top.

    Parameters
    ----------
    table : pandas.DataFrame
        Census rows with at least the t, s, count and formula columns.
    dark_mode : bool
        Light text on a dark background.

    Returns
    -------
    fig : matplotlib.figure.Figure
    """

    if dark_mode:

        fc = '#E5E8EE'
        fg = '#222834'

    else:

        fc = 'black'
        fg = 'white'

    fig, ax = plt.subplots(figsize=(6, 3.5))
    fig.patch.set_facecolor(fg)
    ax.set_facecolor(fg)

    if table.empty:

        ax.text(0.5, 0.5, "no monomial self-dual codes", ha="center",
                va="center", color=fc, transform=ax.transAxes)
        ax.set_axis_off()

        return fig

    ts = sorted(table["t"].unique())
    ss_ = sorted(table["s"].unique())
    width = 0.8 / len(ss_)
    positions = {t: i for i, t in enumerate(ts)}

    for idx, s in enumerate(ss_):

        rows = table[table["s"] == s]
        xs = np.array([positions[t] for t in rows["t"]]) + idx * width
        color = CENSUS_CMAP(idx / max(len(ss_) - 1, 1))
        ax.bar(xs, rows["count"], width=width, color=color, label=f"s = {s}")
        ax.scatter(xs, rows["formula"], marker="_", s=200, color=fc,
                   zorder=3)

    ax.set_xticks(np.arange(len(ts)) + 0.4 - width / 2)
    ax.set_xticklabels([str(t) for t in ts], color=fc)
    ax.set_xlabel("t", color=fc)
    ax.set_ylabel("self-dual codes", color=fc)
    ax.tick_params(colors=fc)

    for spine in ax.spines.values():

        spine.set_color(fc)

    legend = ax.legend(frameon=False)

    for text in legend.get_texts():

        text.set_color(fc)

    total = int(table["count"].sum())
    k = int(table["k"].iloc[0])
    ax.set_title(f"N(2^{k}) = {total}", color=fc)
    fig.tight_layout()

    return fig
