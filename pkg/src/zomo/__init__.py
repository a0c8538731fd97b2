"""Verification toolkit for extremal curve automorphism 3-groups:
presentation enumeration and structure analysis, exact Riemann-Hurwitz
arithmetic, and explicit Kummer-cover constructions over small prime fields.
"""

__version__ = "0.1.0"
