"""
Shared helpers: logging, errors and PDF reports
"""
