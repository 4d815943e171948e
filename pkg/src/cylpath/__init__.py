"""Finite simplicial sets, their simplicial enrichment, and cylinder and path structures."""

from importlib.resources import files


def data_path(name: str):
    """A document shipped with the package, e.g. ``delta1.sset`` or ``swap.smap``."""
    return files(__name__) / "data" / name
