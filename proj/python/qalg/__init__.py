"""Quiver algebras: indecomposables of every dimension and ray categories."""

import json

from . import _qalg
from ._qalg import QalgError, __version__

__all__ = ["QalgError", "__version__", "algebra_info", "indecomposable", "ray_category", "crowns", "cli"]


def algebra_info(text, max_dim=10000):
    return json.loads(_qalg.algebra_info(text, max_dim))


def indecomposable(text, m, max_dim=10000):
    return json.loads(_qalg.indecomposable(text, m, max_dim))


def ray_category(text, raycat=False):
    return json.loads(_qalg.ray_category(text, raycat))


def crowns(text, raycat=False, max_n=6):
    return json.loads(_qalg.crowns(text, raycat, max_n))


def cli(*args):
    """Runs the command-line tool in-process; returns (exit code, stdout, stderr)."""
    return _qalg.cli(list(args))
