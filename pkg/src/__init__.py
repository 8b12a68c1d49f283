"""Signature-based Groebner basis engines over prime fields."""

__version__ = "0.1.0"
