"""Unit tests for hopfext."""
