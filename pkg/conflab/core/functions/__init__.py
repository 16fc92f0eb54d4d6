from .decorators import timed

__all__ = ["timed"]
