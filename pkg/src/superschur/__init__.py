"""Exact combinatorics of Schur superpolynomials."""

from superschur.superpartition import SuperPartition, parse

__all__ = ["SuperPartition", "parse"]
