from .case import CaseConverter

__all__ = ["CaseConverter"]
