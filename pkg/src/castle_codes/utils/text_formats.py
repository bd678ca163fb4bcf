"""Line-oriented text formats: code descriptors, words and field-element rendering."""

from collections.abc import Iterable

from pydantic import ValidationError

from ..algebra.field import FieldSpec
from ..algebra.linalg import FieldVector
from ..errors import FieldError, FormatError
from ..models.code_models import CodeDescriptor

_DESCRIPTOR_KEYS = ("format", "model", "q", "r", "q0", "m", "delta")
_INTEGER_KEYS = frozenset({"q", "r", "q0", "m", "delta"})


def parse_descriptor(text: str) -> CodeDescriptor:
    """Parse ``key=value`` lines; blank lines and ``#`` comments are ignored."""
    values: dict[str, object] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = (part.strip() for part in line.partition("="))
        if not sep or key not in _DESCRIPTOR_KEYS:
            raise FormatError(f"line {number}: expected one of {_DESCRIPTOR_KEYS} as key=value")
        if key in values:
            raise FormatError(f"line {number}: duplicate key {key!r}")
        if key in _INTEGER_KEYS:
            try:
                values[key] = int(value)
            except ValueError as exc:
                raise FormatError(f"line {number}: {key} must be an integer") from exc
        else:
            values[key] = value
    try:
        return CodeDescriptor.model_validate(values)
    except ValidationError as exc:
        raise FormatError(f"invalid descriptor: {exc.errors()[0]['msg']}") from exc


def format_descriptor(descriptor: CodeDescriptor) -> str:
    data = descriptor.model_dump(mode="json")
    lines = [f"{key}={data[key]}" for key in _DESCRIPTOR_KEYS if data[key] is not None]
    return "\n".join(lines) + "\n"


def parse_element(token: str, field: FieldSpec) -> int:
    """An integer code, or ``a`` / ``a^k`` for powers of the primitive element."""
    token = token.strip()
    try:
        if token == "a":
            return field.generator
        if token.startswith("a^"):
            return field.exp(int(token[2:]))
        return field.check_code(int(token))
    except (ValueError, FieldError) as exc:
        raise FormatError(f"{token!r} is not an element of {field.name}") from exc


def parse_word(text: str, field: FieldSpec) -> FieldVector:
    """Whitespace- or comma-separated elements."""
    tokens = text.replace(",", " ").split()
    return FieldVector(field, [parse_element(tok, field) for tok in tokens])


def render_word(field: FieldSpec, codes: Iterable[int], pretty: bool = False) -> str:
    if pretty:
        return " ".join(field.pretty(c) for c in codes)
    return " ".join(str(c) for c in codes)


def render_ints(values: Iterable[int], sep: str = ",") -> str:
    return sep.join(str(v) for v in values)


__all__ = [
    "parse_descriptor",
    "format_descriptor",
    "parse_element",
    "parse_word",
    "render_word",
    "render_ints",
]
