"""Exact double Grothendieck polynomials three independent ways: operator
recursion, colored lattice-model partition functions, and tableau sums or
path determinants, with machine checks tying them together."""

__version__ = "0.1.0"
