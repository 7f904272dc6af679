"""Features - vertical slice architecture."""
