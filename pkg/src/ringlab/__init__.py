"""Constraint tools for marked triangular-lattice tilings with vertex ring matching."""

__version__ = "0.1.0"
