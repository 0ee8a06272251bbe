"""blockperm: exact block theory of small finite group algebras."""

from .gfq import GF, FqMatrix

__all__ = ["GF", "FqMatrix"]
__version__ = "0.1.0"
