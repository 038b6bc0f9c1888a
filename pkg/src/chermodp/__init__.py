"""Exact q,t-combinatorics and a mod-p rational Cherednik algebra engine."""

__version__ = "0.1.0"
