"""biascope: fine-grained bias-indicator database building and article analysis.

An offline pipeline distills a labeled article corpus into a verified,
clustered indicator vector database; an online engine analyzes arbitrary
articles against it by descriptor generation, cosine top-M matching,
majority-vote leaning prediction, and descriptor-to-span mapping. An HTTP
service and evaluation harness sit on top.
"""

from .labels import Category, Leaning
from .records import IndicatorRecord, IndicatorStage

__version__ = "0.1.0"

__all__ = ["Category", "IndicatorRecord", "IndicatorStage", "Leaning", "__version__"]
