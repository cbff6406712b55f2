"""Filter step processors."""
from src.processors.base import BaseProcessor
from src.processors.mask_processor import SubspaceProcessor, TruncateProcessor
from src.processors.transform_processor import FrftProcessor, InvolutionProcessor

__all__ = [
    'BaseProcessor',
    'TruncateProcessor',
    'SubspaceProcessor',
    'FrftProcessor',
    'InvolutionProcessor',
]
