"""Tests for steiner-products."""
