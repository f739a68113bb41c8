"""Exact sparse realizations of the algebras generated by the interval
Casimirs of three- and four-fold tensor products of q-deformed
lowest-weight representations, with every algebraic relation checked in
exact rational arithmetic."""

__version__ = "0.1.0"
