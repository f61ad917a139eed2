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

from io import BytesIO

from PIL import Image as PILImage
from reportlab.lib import colors
from reportlab.lib.colors import HexColor
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import getSampleStyleSheet
from reportlab.pdfbase.pdfmetrics import stringWidth
from reportlab.platypus import (HRFlowable, Image, Paragraph, SimpleDocTemplate,
                                Spacer, Table, TableStyle)

from data_viz import plot_census
from utils import flatten_record, jsonable

BG_COLOR = HexColor("#333C4E")
TABLE_STYLE = TableStyle([
    ('BACKGROUND', (0, 0), (-1, 0), BG_COLOR),
    ('TEXTCOLOR', (0, 0), (-1, 0), colors.whitesmoke),
    ('ALIGN', (0, 0), (-1, -1), 'LEFT'),
    ('VALIGN', (0, 0), (-1, -1), 'TOP'),
    ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
    ('BOTTOMPADDING', (0, 0), (-1, 0), 12),
    ('GRID', (0, 0), (-1, -1), 0.5, colors.grey),
    ('FONTSIZE', (0, 0), (-1, -1), 8)
])
CENSUS_COLUMNS = ["t", "s", "w", "dim", "nullity", "alt_rank", "consistent",
                  "count", "formula"]


def measure(text, font='Helvetica-Bold', size=8, padding=6):

    return stringWidth(text, font, size) + padding


def _document(pdf_buffer):

    return SimpleDocTemplate(pdf_buffer,
                             pagesize=A4,
                             leftMargin=20,
                             rightMargin=20,
                             topMargin=20,
                             bottomMargin=20)


def _header(title, config, styles):

    elements = [Paragraph(title, styles['Title']),
                HRFlowable(width="100%", thickness=1, color=colors.grey)]
    ring = (f"<b>Field:</b> F_{config['p']}^{config['m']} &nbsp; "
            f"<b>k:</b> {config['k']} &nbsp; "
            f"<b>alpha:</b> {json.dumps(jsonable(config['alpha']))} &nbsp; "
            f"<b>delta:</b> {json.dumps(jsonable(config['delta']))}")
    elements.append(Spacer(1, 12))
    elements.append(Paragraph(ring, styles['BodyText']))
    elements.append(Spacer(1, 12))

    return elements


def get_census_table(table):

    headers = [name for name in CENSUS_COLUMNS if name in table.columns]
    data = [headers]

    for _, row in table.iterrows():

        data.append([str(row[name]) for name in headers])

    census_table = Table(data,
                         hAlign='LEFT',
                         vAlign='TOP',
                         colWidths=[measure(h, padding=20) for h in headers])
    census_table.setStyle(TABLE_STYLE)

    return census_table


def get_record_table(record):
    """Two-column key/value table of a flattened report record."""

    styles = getSampleStyleSheet()
    data = [["Key", "Value"]]

    for key, value in flatten_record(record).items():

        data.append([key, Paragraph(str(value), styles['BodyText'])])

    record_table = Table(data,
                         hAlign='LEFT',
                         vAlign='TOP',
                         colWidths=[160, A4[0] - 200])
    record_table.setStyle(TABLE_STYLE)

    return record_table


def _chart(table):

    figure = plot_census(table, dark_mode=False)
    chart_buf = BytesIO()
    figure.savefig(chart_buf, format="png", bbox_inches="tight", dpi=200)
    chart_buf.seek(0)
    pil_img = PILImage.open(chart_buf)
    img_w_px, img_h_px = pil_img.size
    aspect = img_h_px / img_w_px
    d_width = 400
    chart_buf.seek(0)

    return Image(chart_buf, width=d_width, height=d_width * aspect)


def get_census_report(config, table, summary):
    """
    PDF of the self-dual census: summary, per-(t, s) table and chart.

    Returns
    -------
    pdf_buffer : BytesIO
    """

    pdf_buffer = BytesIO()
    doc = _document(pdf_buffer)
    styles = getSampleStyleSheet()
    elements = _header("Self-dual census", config, styles)
    elements.append(get_record_table(summary))
    elements.append(Spacer(1, 12))
    elements.append(_chart(table))
    elements.append(Spacer(1, 12))
    elements.append(get_census_table(table))
    doc.build(elements)
    pdf_buffer.seek(0)

    return pdf_buffer


def get_summary_report(title, config, record):
    """PDF of any other command report as a key/value table."""

    pdf_buffer = BytesIO()
    doc = _document(pdf_buffer)
    styles = getSampleStyleSheet()
    elements = _header(title, config, styles)
    elements.append(get_record_table(record))
    doc.build(elements)
    pdf_buffer.seek(0)

    return pdf_buffer
