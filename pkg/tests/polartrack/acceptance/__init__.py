"""
Pipeline, oracle and property suites
"""
