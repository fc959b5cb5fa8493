"""homleibniz package."""
