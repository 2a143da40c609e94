"""morinlab: exact classification of corank-one map-germs as Morin
singularities, with A-isotopy invariants, rotation witnesses, and
striction-curve analysis of ruling maps.  All arithmetic is exact over
the rationals; every verdict is a theorem about the supplied jet."""

from .classify import (MorinResult, equivalence_fuzz, morin_classify,
                       normalized_chain_rank)
from .errors import (DimensionError, FrameError, MorinlabError,
                     NotCorankOneError, ParityError, ParseError,
                     SingularMatrixError, TruncationError, WitnessError)
from .forms import (FormSpec, conjugate, identity_map, invert_diffeo,
                    isotopy_form, normal_form, pi_rotation, random_diffeo)
from .germ import (LambdaData, SingularChainReport, adapt_target,
                   corank_at_origin, eta_derive, lambda_vector, null_field,
                   singular_chain)
from .isotopy import (IsotopyReport, RotationWitness, apply_witness,
                      d_invariant, isotopy_classify, isotopy_witness)
from .jets import Jet, jet_det, jet_inv, jet_matrix_solve
from .maps import MapJet, jet_compose, map_from_components
from .parser import (FramedCurveSource, GermSource, germ_from_map,
                     parse_framed_curve, parse_germ)
from .rationals import QQ, rat, rat_str, sign
from .ruling import (FramedCurve, RulingCheck, StrictionResult, exp_frame,
                     random_framed_curve, rotation_frame, ruling_map,
                     ruling_morin1_check, striction)

__version__ = "0.1.0"
