"""Relative boundary metrics of planar domains.

Shortest paths through a domain's closure, the induced metric on its
boundary, unique-determination classification, explicit counterexample
generators, and the arclength-preserving profile deformation solver.
"""

__version__ = "0.1.0"
