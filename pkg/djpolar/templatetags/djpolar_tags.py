# -*- coding: utf-8 -*-
from __future__ import division

from django.template import Library

from ..topology import TAG_NONSINGULAR, TAG_SINGULAR

register = Library()

TAG_COLORS = {
    TAG_NONSINGULAR: "#1a7f37",
    TAG_SINGULAR: "#8250df",
}
DEFAULT_COLOR = "#0969da"


@register.filter
def svgnum(value, digits=2):
    """
    Fixed-point formatting for SVG attributes. Negative zero prints as zero.
    If bad values are passed in, return the empty string.
    """
    try:
        text = "{0:.{1}f}".format(float(value), int(digits))
    except (ValueError, TypeError):
        return ""
    if text.startswith("-") and not text.strip("-0."):
        text = text[1:]
    return text


@register.filter
def tag_color(tag):
    """
    Fill colour of a witness marker: certified nonsingular witnesses in
    green, singular ones in purple.

    Use: {{ marker.tag|tag_color }}
    """
    return TAG_COLORS.get(tag, DEFAULT_COLOR)
