"""Exact solver and certificate checker for speed-bounded cops-and-robber games."""
