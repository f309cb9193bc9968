"""Test package for the centralizer verification engine."""
