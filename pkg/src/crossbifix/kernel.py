"""Selects the exhaustive-scan implementation at import time.

The compiled core (crossbifix._scan) is preferred; the pure-Python module is
the fallback. Set CBF_PURE_PYTHON=1 to force the fallback, e.g. to compare
the two (see benchmarks/bench_scan.py).
"""

import os

from . import _scan_py
from .words import Word

if os.environ.get("CBF_PURE_PYTHON"):
    _impl = _scan_py
else:
    try:
        from . import _scan as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _scan_py

IMPLEMENTATION: str = _impl.IMPLEMENTATION

# The compiled scan works in int64; anything larger is routed to pure Python.
_INT64_CAP = 2 ** 62


def find_candidates(q, n, members, prefixes, suffixes, limit=0, start=0):
    """Dispatch to the selected scan core (see _scan_py.find_candidates)."""
    impl = _impl
    if impl is not _scan_py and q ** n > _INT64_CAP:
        impl = _scan_py
    return impl.find_candidates(q, n, members, prefixes, suffixes, limit, start)


def encode_word(word: Word, q: int) -> int:
    """Base-q value of a word, most significant symbol first."""
    value = 0
    for s in word:
        value = value * q + s
    return value


def decode_word(value: int, q: int, n: int) -> Word:
    """Inverse of encode_word for words of length n."""
    digits = [0] * n
    for i in range(n - 1, -1, -1):
        value, digits[i] = divmod(value, q)
    return tuple(digits)
