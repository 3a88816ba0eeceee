"""Backend selection for the word kernels.

The compiled extension is used when it imports and the environment variable
``PCFALG_PURE_PYTHON`` is unset; it only handles machine-size integers, so
every call falls back to the generic implementation on other inputs.
"""
import os

from . import _pykernels

_ext = None
if not os.environ.get("PCFALG_PURE_PYTHON"):
    try:
        from . import _kernels as _ext
    except ImportError:
        _ext = None

BACKEND = "cython" if _ext is not None else "python"


def _dispatch(name):
    slow = getattr(_pykernels, name)
    if _ext is None:
        return slow
    fast = getattr(_ext, name)

    def run(seq):
        if all(type(c) is int for c in seq):
            out = fast(seq)
            if out is not None:
                return out
        return slow(seq)

    run.__name__ = name
    run.__doc__ = slow.__doc__
    return run


reduce_word = _dispatch("reduce_word")
fold_word = _dispatch("fold_word")
prefix_columns = _dispatch("prefix_columns")
rotation_mats = _dispatch("rotation_mats")
