"""Seidel switching classes, two-graphs and automorphism groups."""
