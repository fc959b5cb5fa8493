"""Class ideals and the global decomposition of a split algebra."""
