"""argmeter: inconsistency measures and guided conflict resolution for
argument graphs, abstract or instantiated with deductive arguments."""

from .graphs import ArgumentGraph, graph
from .semantics import IN, OUT, UNDEC, Labelling, extensions, labellings

__version__ = "0.1.0"

__all__ = [
    "ArgumentGraph",
    "graph",
    "Labelling",
    "IN",
    "OUT",
    "UNDEC",
    "extensions",
    "labellings",
    "__version__",
]
