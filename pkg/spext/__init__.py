"""spext - spectral radius ascent and extremal verification for cacti and unicyclic graphs."""

__version__ = "1.0.0"
