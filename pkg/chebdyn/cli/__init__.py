from .expr import parse_balls, parse_poly
from .main import main

__all__ = ['main', 'parse_poly', 'parse_balls']
