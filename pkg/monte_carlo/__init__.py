from .MonteCarlo import MonteCarlo

__all__ = ["MonteCarlo"]
