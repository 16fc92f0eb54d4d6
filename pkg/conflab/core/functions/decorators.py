"""
This module provides decorators for verification checks. The `timed` decorator
records the wall time of a check on the Report it returns.
"""

import time
from functools import wraps


def timed(func):
    """
    Decorator that measures the wall time of a function returning a Report
    (or a list of Reports) and stores it on the ``elapsed`` attribute.

    #### Usage:

        ```
        @timed
        def run_jacobi(alg):
            return check_jacobi(alg)
        ```
    """

    @wraps(func)
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        result = func(*args, **kwargs)
        elapsed = time.perf_counter() - start
        reports = result if isinstance(result, list) else [result]
        for report in reports:
            if hasattr(report, "elapsed") and report.elapsed is None:
                report.elapsed = elapsed
        return result

    return wrapper
