"""
spinqpt - numerics for the XXZ central spin model.
"""

__version__ = "1.0.0"
