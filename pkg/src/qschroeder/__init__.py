"""Exact q-Schröder-like numbers, their q-series and continued fractions."""

from .closedforms import (F_from_h, F_from_recurrence, H_series, SeriesBundle, build_bundle,
                          f_from_F, f_from_H, f_from_h, f_from_recurrence, h_series)
from .contfrac import CATALOGUE, CFSpec, Convergent, cf_catalogue, cf_convergent, cf_stabilized
from .errors import (DegenerateQError, DomainError, IncompatibleSeriesError,
                     NonStabilizingError, NonUnitError, RejectedParamsError)
from .exactnum import QPoly, Rational, parse_qpoly, parse_rational, qpoly_arith, qpoly_eval, rat_arith
from .powerseries import (TruncSeries, ts_add, ts_eq_to_order, ts_inverse, ts_mul, ts_mul_z,
                          ts_qdilate)
from .qkit import (QFactorialCache, qbinomial, qexp_inv_series, qexp_series,
                   qpochhammer_inv_series, qpochhammer_series)
from .schroeder import Params, catalan_closed, gen_A, gen_a, reference_prefix
from .verifier import (REGISTRY, IdentityReport, SamplePlan, hankel_det,
                       jfraction_hankel_check, verify_all, verify_identity)

__version__ = "0.1.0"
