"""
Tests for the Grover schedules features.
"""
