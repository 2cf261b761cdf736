"""Structural property checks."""
