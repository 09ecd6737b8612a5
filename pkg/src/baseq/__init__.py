"""Base sequences BS(n+1, n): encoding, symmetry group, canonical form, enumeration."""

from .seqcore import (BaseQuadruple, BinarySequence, NafVector, alternate,
                      is_base_sequences, naf, naf_vector, negate, reverse)
from .quadcodec import (QuadCode, QuadSymbol, decode, encode, format_code,
                        parse_code, theorem1_check)

__version__ = "0.1.0"

__all__ = [
    "BaseQuadruple", "BinarySequence", "NafVector", "alternate", "is_base_sequences",
    "naf", "naf_vector", "negate", "reverse",
    "QuadCode", "QuadSymbol", "decode", "encode", "format_code", "parse_code", "theorem1_check",
]
