"""Figure parameter sets and run-wide settings"""
from .figures import FIGURES, FigureSpec, CurveSpec, CAPACITY, LOSS_KMS, LOSS_KMU, LOSS_EMU, slug
from .run import RunConfig, run_cli, run_factory, resolve_seed, SEED_ENV
