"""Exact and high-precision verification of Bernoulli/zeta identities."""
from __future__ import annotations

__version__ = "0.1.0"
