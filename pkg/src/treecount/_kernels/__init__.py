"""Hot graph kernels, compiled when available.

``BACKEND`` names the implementation picked at import: ``"cython"`` when the
extension module is built, ``"python"`` otherwise.
"""

try:
    from . import _ckernels as _impl

    BACKEND = "cython"
except ImportError:  # extension not built
    from . import _pykernels as _impl

    BACKEND = "python"

ball = _impl.ball
girth = _impl.girth
random_regular = _impl.random_regular
splitmix64 = _impl.splitmix64

__all__ = ["BACKEND", "ball", "girth", "random_regular", "splitmix64"]
