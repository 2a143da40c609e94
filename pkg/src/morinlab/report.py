"""JSON report construction for the command-line surface.

Every report is a tagged object (discriminator field ``report``) that
validates against the schema shipped as ``report_schema.json``.  Field
names are frozen by that schema.  Rationals are serialized as exact
strings ``p`` or ``p/q``; the only nondeterministic field is
``timing_seconds``.
"""

from __future__ import annotations

import importlib.resources
import json

from .classify import MorinResult
from .germ import SingularChainReport
from .isotopy import IsotopyReport, RotationWitness
from .rationals import rat_str
from .ruling import RulingCheck, StrictionResult

TOOL_VERSION = "0.1.0"


def load_schema() -> dict:
    ref = importlib.resources.files("morinlab").joinpath("report_schema.json")
    return json.loads(ref.read_text())


def verdict_dict(v: MorinResult) -> dict:
    out = {"kind": v.kind, "label": v.label()}
    for key in ("r", "corank", "step", "expected_rank", "actual_rank",
                "r_max", "required_order"):
        val = getattr(v, key)
        if val is not None:
            out[key] = val
    return out


def chain_dict(chain: SingularChainReport) -> dict:
    return {
        "eta_lambda_values": [[rat_str(x) for x in row]
                              for row in chain.eta_lambda_values],
        "chain_ranks": list(chain.chain_ranks),
    }


def _base(report_kind: str, timing: float) -> dict:
    return {"report": report_kind, "version": TOOL_VERSION,
            "timing_seconds": timing}


def classify_report(input_text: str, r_max: int, verdict: MorinResult,
                    timing: float) -> dict:
    out = _base("classify", timing)
    out["input"] = input_text
    out["r_max"] = r_max
    out["verdict"] = verdict_dict(verdict)
    if verdict.evidence is not None:
        out["chain"] = chain_dict(verdict.evidence)
    return out


def fuzz_report(input_text: str, r_max: int, trials: int, degree: int,
                seed: int, baseline: MorinResult,
                verdicts: list[MorinResult], timing: float) -> dict:
    out = _base("fuzz", timing)
    out["input"] = input_text
    out["r_max"] = r_max
    out["trials"] = trials
    out["degree"] = degree
    out["seed"] = seed
    out["baseline"] = verdict_dict(baseline)
    out["verdicts"] = [verdict_dict(v) for v in verdicts]
    out["all_match"] = all(v.kind == baseline.kind and v.r == baseline.r
                           for v in verdicts)
    return out


def spec_dict(spec) -> dict:
    return {"r": spec.r, "a": spec.a, "extra": spec.extra,
            "eps1": spec.eps1, "eps2": spec.eps2,
            "source_dim": spec.m, "target_dim": spec.n}


def form_report(spec, germ_text: str, timing: float) -> dict:
    out = _base("form", timing)
    out["spec"] = spec_dict(spec)
    out["germ"] = germ_text
    return out


def d_invariant_report(input_text: str, r: int, d_sign: int, gauge_note: str,
                       timing: float) -> dict:
    out = _base("d_invariant", timing)
    out["input"] = input_text
    out["r"] = r
    out["d_sign"] = d_sign
    out["gauge_note"] = gauge_note
    return out


def table_report(r_max: int, a_max: int, reports: list[IsotopyReport],
                 timing: float) -> dict:
    out = _base("table", timing)
    out["r_max"] = r_max
    out["a_max"] = a_max
    out["cells"] = [{"r": rep.r, "a": rep.a, "case_id": rep.case_id,
                     "class_count": rep.class_count,
                     "invariant_label": rep.invariant_label}
                    for rep in reports]
    return out


def witness_report(w: RotationWitness, verified: bool, timing: float) -> dict:
    out = _base("witness", timing)
    out["spec"] = spec_dict(w.spec)
    out["representative"] = spec_dict(w.representative)
    out["source_rotations"] = [list(s) for s in w.source_sets]
    out["target_rotations"] = [list(s) for s in w.target_sets]
    out["verified"] = verified
    return out


def ruling_report(input_text: str, n: int, order: int, st: StrictionResult,
                  chk: RulingCheck, timing: float) -> dict:
    out = _base("ruling", timing)
    out["input"] = input_text
    out["n"] = n
    out["order"] = order
    out["striction_u_at_zero"] = [rat_str(u.constant_term()) for u in st.u]
    out["alpha_at_zero"] = [rat_str(x) for x in chk.alpha_at_zero]
    out["classifier_verdict"] = verdict_dict(chk.classifier)
    out["morin1_by_classifier"] = chk.morin1_by_classifier
    out["morin1_by_alpha"] = chk.morin1_by_alpha
    out["agree"] = chk.agree
    out["eta_lambda_at_zero"] = [rat_str(x) for x in chk.eta_lambda_at_zero]
    out["identity_rhs"] = [rat_str(x) for x in chk.identity_rhs]
    out["identity_holds"] = chk.identity_holds
    out["delta_det_at_zero"] = rat_str(chk.delta_det_at_zero)
    return out


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"
