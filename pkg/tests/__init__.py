"""Unit test package for bombieri."""
