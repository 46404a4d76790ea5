"""
Tests for polar-tracker
"""
