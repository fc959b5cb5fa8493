"""Root-space decompositions and the twist action on roots."""
