"""Finite homological models: strict Koszul dg modules, circled products of
bimodule correspondences, matrix factorizations, Hopf-style structure maps,
and periodic class integrals."""
