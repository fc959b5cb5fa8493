"""Pydantic schemas for algebra files and JSON reports."""
