"""
Oriented hypergraphs: signed incidence structures, their incidence matrices,
balance theory and the structural recognition of balanced minimal column
dependencies.
"""

__version__ = "1.0.0"
