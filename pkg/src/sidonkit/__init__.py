"""Exact toolkit for nonabelian Sidon-type sets in finite groups and related extremal digraphs."""

__version__ = "0.1.0"
