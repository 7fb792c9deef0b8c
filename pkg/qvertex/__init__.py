"""qvertex - boundary conditions and scattering of singular vertices on quantum star graphs."""

__version__ = "0.1.0"
