"""Text formats shared by the CLI and tests."""

from .text_formats import (
    format_descriptor,
    parse_descriptor,
    parse_element,
    parse_word,
    render_ints,
    render_word,
)

__all__ = [
    "format_descriptor",
    "parse_descriptor",
    "parse_element",
    "parse_word",
    "render_ints",
    "render_word",
]
