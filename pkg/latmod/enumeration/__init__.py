"""Exhaustive enumeration and corpus catalogs."""
