"""Degrees of loci of one-dimensional foliations on P^n with an invariant
linear subspace or (on P^2) an invariant smooth conic, by exact Bott
localization and interpolation in the foliation degree d."""

from .bott import BottReport, bott_sum_chern_top, bott_sum_segre, conic_degree
from .grassmann import hyperplane_degree_closed, plane_codimension, plane_degree
from .interpolate import Family, extract_small_roots, lagrange, sample_and_interpolate
from .weights import WeightVector

__version__ = "0.1.0"
