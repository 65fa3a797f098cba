__author__ = "Patrick Bertsch"
__version__ = "0.1.0"
