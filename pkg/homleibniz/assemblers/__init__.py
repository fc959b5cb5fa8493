"""Human-readable rendering of analysis results."""
