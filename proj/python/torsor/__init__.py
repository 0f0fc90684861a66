"""Outer automorphism groups of mapping tori of finite groups."""

try:
    from ._torsor import *  # noqa: F401,F403
    from ._torsor import __version__  # noqa: F401
except ImportError:  # in-tree builds put the extension directly on sys.path
    from _torsor import *  # noqa: F401,F403
    from _torsor import __version__  # noqa: F401
