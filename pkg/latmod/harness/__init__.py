"""Corpus-scale verification suites."""
