"""Core infrastructure: configuration, logging and error handling."""
