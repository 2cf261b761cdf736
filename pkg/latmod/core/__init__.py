"""Lattice values, chains and canonical keys."""
