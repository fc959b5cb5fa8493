"""Root classification relative to J, ideal checks and simplicity verdicts."""
