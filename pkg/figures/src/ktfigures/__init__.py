"""Figure scripts for the kicked-top co-simulator CSV outputs.

Read-only consumers of the CLI's CSV schema: entropy/mixing curve panels
and sphere scatter plots. No physics is recomputed here.
"""

import matplotlib

matplotlib.use("Agg")

from .csvio import FigureDataError, load_curve, load_points
from .entropy import plot_entropy_curves
from .sphere import plot_sphere

__all__ = [
    "FigureDataError", "load_curve", "load_points",
    "plot_entropy_curves", "plot_sphere",
]

__version__ = "0.1.0"
