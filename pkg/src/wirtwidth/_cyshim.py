"""Stand-in for the ``cython`` shadow module.

``_core.py`` is written in Cython pure-Python mode: compiled, its
decorators and type names come from the real ``cython`` module; run as
plain Python without Cython installed, this shim supplies no-op versions
of the small subset the kernel uses.  Annotations in ``_core.py`` are
postponed (``from __future__ import annotations``), so only decorators and
``compiled`` are ever evaluated at runtime.
"""

compiled = False


def _passthrough(arg=None, **kwargs):
    if callable(arg):
        return arg
    return lambda obj: obj


cclass = _passthrough
cfunc = _passthrough
ccall = _passthrough
inline = _passthrough
final = _passthrough


def boundscheck(_flag):
    return _passthrough


wraparound = boundscheck
cdivision = boundscheck
initializedcheck = boundscheck


def exceptval(*_args, **_kwargs):
    return _passthrough


def locals(**_kwargs):
    return _passthrough


def declare(_type=None, value=None, **_kwargs):
    return value


int = int  # noqa: A001 - mirror of cython.int
long = int
longlong = int
uchar = int
bint = bool
double = float
void = None
