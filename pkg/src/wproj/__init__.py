"""Exact-arithmetic engine for the quantum D-module of a weighted projective
space, its Landau-Ginzburg mirror, and their limits and unfoldings."""

from ._rat import BACKEND, RAT, rat
from .amodel import AModelPackage, build_amodel, verify_amodel
from .bmodel import BModelPackage, build_bmodel, verify_bmodel
from .combinatorics import (SpectrumData, WeightData, build_weight_data,
                            c_sequence_oracle, enumerate_weight_tuples,
                            spectrum_data, stepping_sequence,
                            verify_combinatorics)
from .connection import (CheckReport, Connection, Variable, gauge_transform,
                         verify_adjoint, verify_flatness,
                         verify_pairing_flatness)
from .limits import (FrobeniusAlgebraData, LimitPackage, build_limit,
                     jordan_analysis, limit_cup, limit_pairing,
                     preprimitive_test, verify_limits)
from .mirror import verify_mirror, verify_product_mirror
from .puiseux import PMatrix, Phase, Puiseux
from .report import run_checks, run_report, run_sweep
from .unfolding import (UnfoldingPackage, build_unfolding,
                        frobenius_potential, log_structure_checks,
                        verify_unfolded_flatness)

__version__ = "0.1.0"
