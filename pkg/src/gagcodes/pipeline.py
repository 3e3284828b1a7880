"""Config-driven orchestration: resolve, analyze, build, verify.

analyze computes the whole algebraic structure (footprints, semigroup,
points, delta sequence, sigma table) without building a code; build
adds the generator matrix and bounds; verify runs the distance oracle
and compares every bound.  Each step returns a PipelineResult whose
report dict is the single source for both the human-readable and the
JSON output, so the two always carry the same numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import (
    InnerCode,
    build_E_improved,
    build_E_lambda,
    build_extended_code,
    delta_sequence,
)
from .config import config_to_dict
from .distoracle import DEFAULT_CAP, min_distance, verify_bounds
from .errors import ConfigError
from .gf import make_field
from .groebner import buchberger, buchberger_moller, footprint
from .points import select_points
from .polyring import Poly, WeightedOrder, format_poly, parse_poly
from .semigroup import check_order_domain, gamma_from_footprint


class OrderDomainFailure(Exception):
    """The configured ideal/order pair fails the order-domain conditions."""

    def __init__(self, diagnosis, report):
        super().__init__(diagnosis.describe())
        self.diagnosis = diagnosis
        self.report = report


@dataclass
class PipelineResult:
    config: object
    field: object
    order: object
    gb_generic: object
    fp_generic: object
    diagnosis: object
    gamma: object = None
    gb_base: object = None
    fp_base: object = None
    selection: object = None
    gb_points: object = None
    fp_points: object = None
    dseq: object = None
    inners: object = None
    code: object = None
    oracle: object = None
    checks: object = None
    report: dict = None


def _mono_strs(order, monos):
    return [order.format_mono(m) for m in monos]


def _structure_report(result):
    cfg = result.config
    order = result.order
    fld = result.field
    diagnosis = result.diagnosis
    report = {
        "config": config_to_dict(cfg),
        "field": {
            "p": fld.p,
            "k": fld.k,
            "q": fld.q,
            "modulus": list(fld.modulus),
        },
        "ring": {
            "variables": list(order.names),
            "weights": [order.var_weight(i) if order.r == 1 else list(order.var_weight(i))
                        for i in range(order.num_vars)],
            "precedence": list(order.precedence),
            "r": order.r,
        },
        "generic_ideal": {
            "groebner_basis": [format_poly(g) for g in result.gb_generic.polys],
            "footprint_finite": result.fp_generic.finite,
            "lead_monomials": _mono_strs(order, result.gb_generic.lead_monomials()),
        },
        "order_domain": {
            "satisfied": diagnosis.satisfied,
            "exhaustive": diagnosis.exhaustive,
            "checked_weight_bound": diagnosis.checked_weight_bound,
            "failing_generator": (
                format_poly(diagnosis.failing_generator)
                if diagnosis.failing_generator is not None
                else None
            ),
            "colliding_pair": (
                _mono_strs(order, diagnosis.colliding_pair)
                if diagnosis.colliding_pair is not None
                else None
            ),
            "description": diagnosis.describe(),
        },
    }
    if not diagnosis.satisfied:
        return report
    report["semigroup"] = {
        "generators": list(result.gamma.generators),
        "gaps": list(result.gamma.gaps) if result.gamma.gaps is not None else None,
        "genus": result.gamma.genus,
        "conductor": result.gamma.conductor,
    }
    report["base_footprint"] = {
        "size": len(result.fp_base.monomials),
        "monomials": _mono_strs(order, result.fp_base.monomials),
        "weights": list(result.fp_base.weights),
    }
    sel = result.selection
    report["points"] = {
        "h": len(sel.points),
        "degrees": list(sel.degrees),
        "compositum_q": sel.compositum.q,
        "coordinates": [list(pt.enc()) for pt in sel.points],
    }
    report["point_footprint"] = {
        "size": len(result.fp_points.monomials),
        "monomials": _mono_strs(order, result.fp_points.monomials),
        "weights": list(result.fp_points.weights),
    }
    if result.dseq is not None:
        report["delta_sequence"] = {
            "weights": list(result.dseq.weights),
            "monomials": _mono_strs(order, result.dseq.monomials),
        }
        report["sigma"] = [[w, result.dseq.sigma_table[w]] for w in result.dseq.weights]
    report["inner_codes"] = [c.label for c in result.inners]
    return report


def analyze(cfg):
    """Resolve a config into the full algebraic structure (no code built)."""
    fld = make_field(cfg.field.p, cfg.field.k, cfg.field.modulus)
    weights = [w if isinstance(w, int) else tuple(w) for w in cfg.ring.weights]
    order = WeightedOrder(cfg.ring.variables, weights, cfg.ring.precedence)
    gens = [parse_poly(s, fld, order) for s in cfg.ideal.generators]
    gb_generic = buchberger(gens)
    fp_generic = footprint(gb_generic)
    diagnosis = check_order_domain(gb_generic, fp_generic)
    result = PipelineResult(
        config=cfg,
        field=fld,
        order=order,
        gb_generic=gb_generic,
        fp_generic=fp_generic,
        diagnosis=diagnosis,
    )
    if not diagnosis.satisfied:
        result.report = _structure_report(result)
        raise OrderDomainFailure(diagnosis, result.report)
    result.gamma = gamma_from_footprint(fp_generic)

    # the base ideal adds the field equations of GF(q)
    field_eqs = []
    for i in range(order.num_vars):
        mono_q = tuple(fld.q if j == i else 0 for j in range(order.num_vars))
        mono_1 = tuple(1 if j == i else 0 for j in range(order.num_vars))
        field_eqs.append(
            Poly(fld, order, {mono_q: fld.one, mono_1: -fld.one})
        )
    result.gb_base = buchberger(gens + field_eqs)
    result.fp_base = footprint(result.gb_base)

    result.selection = select_points(gb_generic, cfg.points.rational, cfg.points.extra)
    result.gb_points = buchberger_moller(result.selection.comp_points(), order)
    result.fp_points = footprint(result.gb_points)
    if order.r == 1:
        result.dseq = delta_sequence(fp_generic, result.gamma, result.selection)
    result.inners = _resolve_inner_codes(cfg, result.selection)
    result.report = _structure_report(result)
    return result


def _resolve_inner_codes(cfg, selection):
    section = cfg.inner_codes
    fld = selection.base_field
    if section.codes is None:
        kind = section.default
        maker = InnerCode.identity if kind == "identity" else InnerCode.parity
        return [maker(fld, pt.degree) for pt in selection.points]
    if len(section.codes) != len(selection.points):
        raise ConfigError(
            f"{len(section.codes)} inner codes configured for "
            f"{len(selection.points)} selected points"
        )
    inners = []
    for entry, pt in zip(section.codes, selection.points):
        inner = InnerCode.from_matrix(fld, entry["matrix"], entry["distance"])
        if inner.k != pt.degree:
            raise ConfigError(
                f"inner code dimension {inner.k} does not match point degree {pt.degree}"
            )
        inners.append(inner)
    return inners


def build(cfg):
    """analyze + construct the configured code."""
    result = analyze(cfg)
    space = cfg.space
    if space.type == "monomials":
        span = [parse_poly(s, result.field, result.order) for s in space.monomials]
        code = build_extended_code(
            span, result.selection, result.inners, result.gamma, result.gb_points
        )
    elif space.type == "weight_le":
        if result.dseq is None:
            raise ConfigError("weight-threshold spaces need scalar weights")
        code = build_E_lambda(
            space.lam, result.fp_generic, result.gamma, result.selection,
            result.inners, result.dseq,
        )
    else:
        if result.dseq is None:
            raise ConfigError("improved spaces need scalar weights")
        code = build_E_improved(
            space.delta, result.fp_generic, result.gamma, result.selection,
            result.inners, result.dseq,
        )
    result.code = code
    result.report["code"] = {
        "n": code.n,
        "k": code.k,
        "q": code.field.q,
        "construction": code.construction,
        "bounds": dict(sorted(code.bounds.items())),
        "provenance": code.provenance,
        "matrix": code.matrix_encodings(),
    }
    return result


def verify(cfg, max_enum=DEFAULT_CAP, workers=1):
    """build + oracle distance + per-bound soundness checks."""
    result = build(cfg)
    report = min_distance(result.code, cap=max_enum, workers=workers)
    checks = verify_bounds(result.code, report)
    result.oracle = report
    result.checks = checks
    result.report["oracle"] = {
        "method": report.method,
        "enumerated_count": report.enumerated_count,
        "exact_distance": report.exact_distance,
        "min_weight_found": report.min_weight_found,
        "witness_message": list(report.witness_message) if report.witness_message else None,
        "witness_codeword": list(report.witness_codeword) if report.witness_codeword else None,
    }
    result.report["bound_checks"] = {
        "all_ok": all(c.ok for c in checks),
        "checks": [
            {
                "name": c.name,
                "value": c.value,
                "kind": c.kind,
                "reference": c.reference,
                "ok": c.ok,
            }
            for c in checks
        ],
    }
    return result


# -- rendering -------------------------------------------------------------------

def report_text(report):
    """Human-readable rendering of a report dict (same numbers as JSON)."""
    lines = []
    fld = report["field"]
    ring = report["ring"]
    lines.append(
        f"field: GF({fld['q']}) = GF({fld['p']})^{fld['k']}, modulus {fld['modulus']}"
    )
    wtxt = ", ".join(
        f"w({v}) = {w}" for v, w in zip(ring["variables"], ring["weights"])
    )
    lines.append(f"ring: {', '.join(ring['variables'])} with {wtxt}; "
                 f"precedence {' > '.join(ring['precedence'])}")
    gi = report["generic_ideal"]
    lines.append(f"groebner basis: {'; '.join(gi['groebner_basis'])}")
    od = report["order_domain"]
    lines.append(f"order domain: {od['description']}")
    if not od["satisfied"]:
        if od["failing_generator"] is not None:
            lines.append(f"  witness generator: {od['failing_generator']}")
        if od["colliding_pair"] is not None:
            lines.append(f"  witness pair: {od['colliding_pair'][0]} , {od['colliding_pair'][1]}")
        return "\n".join(lines) + "\n"
    sg = report["semigroup"]
    lines.append(
        f"semigroup: generated by {sg['generators']}; genus {sg['genus']}; "
        f"conductor {sg['conductor']}"
    )
    if sg["gaps"] is not None:
        lines.append(f"  gaps: {sg['gaps']}")
    bf = report["base_footprint"]
    lines.append(f"base footprint ({bf['size']} monomials): {' '.join(bf['monomials'])}")
    lines.append(f"  weights: {bf['weights']}")
    pts = report["points"]
    lines.append(
        f"points: h = {pts['h']}, degrees {pts['degrees']}, "
        f"compositum GF({pts['compositum_q']})"
    )
    lines.append(f"  coordinates: {pts['coordinates']}")
    pf = report["point_footprint"]
    lines.append(f"point footprint ({pf['size']} monomials): {' '.join(pf['monomials'])}")
    lines.append(f"  weights: {pf['weights']}")
    if "delta_sequence" in report:
        lines.append(f"delta sequence: {report['delta_sequence']['weights']}")
        sig = " ".join(f"sigma({w})={s}" for w, s in report["sigma"])
        lines.append(f"sigma table: {sig}")
    lines.append(f"inner codes: {report['inner_codes']}")
    if "code" in report:
        code = report["code"]
        lines.append(
            f"code: [{code['n']},{code['k']}] over GF({code['q']}), "
            f"construction {code['construction']}"
        )
        btxt = " ".join(f"{k}={v}" for k, v in code["bounds"].items())
        lines.append(f"bounds: {btxt}")
    if "oracle" in report:
        oracle = report["oracle"]
        if oracle["exact_distance"] is not None:
            lines.append(
                f"oracle: exact distance {oracle['exact_distance']} "
                f"({oracle['method']} enumeration of {oracle['enumerated_count']} messages)"
            )
        elif oracle["enumerated_count"] == 0:
            lines.append("oracle: zero code, no nonzero codewords to enumerate")
        else:
            lines.append(
                f"oracle: {oracle['method']} scan, min weight found "
                f"{oracle['min_weight_found']}"
            )
        bc = report["bound_checks"]
        verdict = "all bounds sound" if bc["all_ok"] else "BOUND VIOLATION"
        lines.append(f"bound checks: {verdict}")
        for c in bc["checks"]:
            status = "ok" if c["ok"] else "VIOLATED"
            lines.append(
                f"  {c['name']} = {c['value']} vs {c['kind']} {c['reference']}: {status}"
            )
    return "\n".join(lines) + "\n"
