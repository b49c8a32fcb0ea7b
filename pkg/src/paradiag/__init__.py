"""Triangulations of a regular polygon counted by diagonals parallel to a fixed edge."""

from .catalan import catalan, catalan_table
from .closed_forms import (
    CountQuery,
    barry,
    f,
    f01_even,
    f01_even_k,
    f01_odd,
    f01_odd_k,
    f02_even,
    f02_even_k,
)
from .dyck import DyckSpec, count_avoiding, triangulation_to_path
from .identities import verify, verify_all
from .polygon import (
    DirectionClass,
    KHistogram,
    Triangulation,
    count_marked_triangulations,
    enumerate_triangulations,
    fan_histogram,
    histogram,
)

__version__ = "0.1.0"
