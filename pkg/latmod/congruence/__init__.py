"""Congruences and quotients."""
