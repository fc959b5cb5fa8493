"""Loaders for algebra and twisting-map files."""
