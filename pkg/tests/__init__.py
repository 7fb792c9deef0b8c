"""Test suite for qvertex."""
