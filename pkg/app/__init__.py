"""High-precision evaluation of slowly convergent inverse-logarithm series."""
