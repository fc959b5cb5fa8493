"""Persisted homleibniz settings."""
