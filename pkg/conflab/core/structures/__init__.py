from .report import Report, Residual, Status

__all__ = ["Report", "Residual", "Status"]
