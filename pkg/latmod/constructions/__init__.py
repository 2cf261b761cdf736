"""Named lattice families, the grid model and down-set lattices."""
