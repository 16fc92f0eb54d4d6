from .algebra_file import AlgebraFile, BasisEntry

__all__ = ["AlgebraFile", "BasisEntry"]
