"""Protocols package initialization."""

from .curve_protocol import CurveProtocol

__all__ = ["CurveProtocol"]
