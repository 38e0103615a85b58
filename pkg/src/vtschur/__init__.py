"""vtschur: exact two-parameter quantum gl_n / Hecke / flag-convolution toolkit."""

__version__ = "0.1.0"
