"""Mapping utilities from domain objects to the report schema."""
