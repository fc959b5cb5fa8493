"""Hom-algebra values, identity checks, ideals and constructions."""
