"""Lattice files, reports, DOT export and the command line."""
