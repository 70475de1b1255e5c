"""Unambiguous discrimination failure probabilities.

Closed-form minima for pure-mixed filtering, two pure states and matched
rank-N pairs, each checked against a brute-force oracle, plus coherence
measures and photon number weight sweeps. Everything is implemented in the
compiled extension; this package only re-exports it.
"""

try:
    from ._usdkit import *  # noqa: F401,F403
    from ._usdkit import __doc__ as _core_doc
except ImportError:
    # Build-tree layout: the extension sits on sys.path as a top level module.
    from _usdkit import *  # noqa: F401,F403
    from _usdkit import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
