"""latmat - Exact meet and join (GCD/LCM) matrices on finite meet semilattices."""

__version__ = "0.1.0"
