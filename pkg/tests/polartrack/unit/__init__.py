"""
Unit test package
"""
