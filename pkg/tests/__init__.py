"""
Test suite for polar-tracker
"""
