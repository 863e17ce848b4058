"""Curve data of the capacity figures and the table writer."""

from .writer import render_table, write_table, CSV_FORMAT
from .curves import (FigureResult, capacity_table, loss_table, curve_tables, write_figure,
                     NUMERIC_FAILURES)
