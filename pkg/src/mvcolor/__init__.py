"""mvcolor - mutual-visibility sets, mutual-visibility colorings and their exact computation."""

__version__ = "0.1.0"
