"""
Test suite for the Grover schedules package.
"""
