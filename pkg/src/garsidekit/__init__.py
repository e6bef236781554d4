"""Word reversing, Garside recognition and normal forms for complemented
monoid presentations."""

from .garside import GarsideStructure, build_structure, structure_of
from .presentation import Alphabet, Presentation, PresentationError, ReversingFunction, parse_presentation
from .recognizer import Budgets, RecognitionReport, recognize
from .reversing import Fuel, reverse_left, reverse_right, right_complement

__all__ = [
    "Alphabet",
    "Budgets",
    "Fuel",
    "GarsideStructure",
    "Presentation",
    "PresentationError",
    "RecognitionReport",
    "ReversingFunction",
    "build_structure",
    "parse_presentation",
    "recognize",
    "reverse_left",
    "reverse_right",
    "right_complement",
    "structure_of",
]

__version__ = "0.1.0"
