"""Figure rendering for gaussmet sweep CSVs."""

from .render import ColumnError, FigureSpec, build_figure, read_columns, render

__all__ = ["ColumnError", "FigureSpec", "build_figure", "read_columns", "render"]
