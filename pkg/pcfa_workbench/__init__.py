"""Executable semantics and experiment workbench for deterministic PCFA systems."""

__version__ = "0.1.0"
