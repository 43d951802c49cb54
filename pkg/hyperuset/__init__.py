"""hyperuset - U-sets of marked hyperelliptic curves and the machinery around them."""

__version__ = "0.1.0"
