"""Connections of roots and their equivalence classes."""
