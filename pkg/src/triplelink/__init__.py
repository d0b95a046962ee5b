"""Doodle mu-invariants, chord-diagram pairings and Milnor's triple linking number."""

__version__ = "0.1.0"
