"""JSON wire models and sequence file readers."""

from .readers import InputFormatError, load_json_document, parse_sequence_document, read_sequence_file
from .schemas import (
    ChiModel,
    CycloModel,
    DecompositionModel,
    EquationModel,
    FracPolyModel,
    LinRepModel,
    LRSModel,
    OperatorModel,
    SeriesModel,
    poly_from_json,
    poly_to_json,
    scalar_from_json,
    scalar_to_json,
)

__all__ = [
    "ChiModel",
    "CycloModel",
    "DecompositionModel",
    "EquationModel",
    "FracPolyModel",
    "InputFormatError",
    "LinRepModel",
    "LRSModel",
    "OperatorModel",
    "SeriesModel",
    "load_json_document",
    "parse_sequence_document",
    "poly_from_json",
    "poly_to_json",
    "read_sequence_file",
    "scalar_from_json",
    "scalar_to_json",
]
