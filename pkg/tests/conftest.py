"""Keeps the tests directory importable for the shared helpers module."""
