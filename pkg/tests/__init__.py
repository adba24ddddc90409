"""Test suite for hopfext."""
