"""Counting polynomials and ranks for large-girth regular graphs."""
