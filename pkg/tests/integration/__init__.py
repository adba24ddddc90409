"""Integration tests for hopfext."""
