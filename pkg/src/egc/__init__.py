"""Edge-girth colorings of girth-regular graphs."""

__version__ = "0.1.0"
