"""latmod: finite lattices, congruences and supersolvability certificates."""

__version__ = "0.3.0"
