"""Oracle cross-checks, determinism, caps, and bound verification."""

import random

import pytest

from second_oracle import naive_min_distance

from gagcodes.codes import CodeInstance, build_E_lambda
from gagcodes.distoracle import (
    exact_min_distance,
    min_distance,
    verify_bounds,
)
from gagcodes.errors import ResourceCapError
from gagcodes.gf import make_field


def _random_matrix(rng, fld, k, n):
    return [
        tuple(fld.element(rng.randrange(fld.q)) for _ in range(n))
        for _ in range(k)
    ]


def test_matches_second_oracle_gf2():
    f2 = make_field(2, 1)
    rng = random.Random(101)
    for _ in range(10):
        rows = _random_matrix(rng, f2, 4, 10)
        got = exact_min_distance(f2, rows)
        want, _ = naive_min_distance([[x.enc for x in r] for r in rows], 2)
        assert got.exact_distance == want


def test_matches_second_oracle_gf4():
    f4 = make_field(2, 2)
    rng = random.Random(103)
    for _ in range(8):
        rows = _random_matrix(rng, f4, 3, 7)
        got = exact_min_distance(f4, rows)
        want, _ = naive_min_distance([[x.enc for x in r] for r in rows], 4)
        assert got.exact_distance == want


def test_matches_second_oracle_gf3():
    f3 = make_field(3, 1)
    rng = random.Random(107)
    for _ in range(6):
        rows = _random_matrix(rng, f3, 3, 8)
        got = exact_min_distance(f3, rows)
        want, _ = naive_min_distance([[x.enc for x in r] for r in rows], 3)
        assert got.exact_distance == want


def test_fixture_code_against_second_oracle(curve56):
    code = build_E_lambda(
        6, curve56.fp_generic, curve56.gamma, curve56.selection,
        curve56.identity_inners, curve56.dseq,
    )
    report = min_distance(code)
    want, _ = naive_min_distance(code.matrix_encodings(), 4)
    assert report.exact_distance == want == 6
    assert report.enumerated_count == 63
    assert report.method == "full"


def test_witness_weight_matches_distance(curve56):
    code = build_E_lambda(
        6, curve56.fp_generic, curve56.gamma, curve56.selection,
        curve56.identity_inners, curve56.dseq,
    )
    report = min_distance(code)
    assert sum(1 for v in report.witness_codeword if v) == report.exact_distance
    # the witness message reproduces the witness codeword
    f4 = code.field
    acc = [0] * code.n
    for digit, row in zip(report.witness_message, code.matrix):
        for t, x in enumerate(row):
            acc[t] = f4.add_enc(acc[t], f4.mul_enc(digit, x.enc))
    assert tuple(acc) == report.witness_codeword


def test_distance_invariant_under_row_operations(curve56):
    f4 = curve56.field
    code = build_E_lambda(
        6, curve56.fp_generic, curve56.gamma, curve56.selection,
        curve56.identity_inners, curve56.dseq,
    )
    base = min_distance(code).exact_distance
    rng = random.Random(109)
    rows = [list(r) for r in code.matrix]
    for _ in range(5):
        i, j = rng.sample(range(len(rows)), 2)
        c = f4.element(rng.randrange(1, 4))
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    assert exact_min_distance(f4, rows).exact_distance == base
    # column permutation
    perm = list(range(code.n))
    rng.shuffle(perm)
    shuffled = [[row[p] for p in perm] for row in code.matrix]
    assert exact_min_distance(f4, shuffled).exact_distance == base


def test_sequential_equals_parallel(curve56):
    code = build_E_lambda(
        12, curve56.fp_generic, curve56.gamma, curve56.selection,
        curve56.identity_inners, curve56.dseq,
    )
    seq = min_distance(code, workers=1)
    for workers in (2, 3, 7):
        par = min_distance(code, workers=workers)
        assert par == seq  # bit-identical dataclass, witness included


def test_cap_refusal_and_partial():
    f4 = make_field(2, 2)
    rng = random.Random(113)
    rows = _random_matrix(rng, f4, 6, 8)
    with pytest.raises(ResourceCapError):
        exact_min_distance(f4, rows, cap=100)
    partial = exact_min_distance(f4, rows, cap=100, allow_partial=True)
    assert partial.method == "capped"
    assert partial.exact_distance is None
    assert partial.min_weight_found is not None


def test_zero_code_report():
    f4 = make_field(2, 2)
    report = exact_min_distance(f4, [])
    assert report.exact_distance is None and report.enumerated_count == 0


def test_verify_bounds_pass_and_fail(curve56):
    code = build_E_lambda(
        6, curve56.fp_generic, curve56.gamma, curve56.selection,
        curve56.identity_inners, curve56.dseq,
    )
    checks = verify_bounds(code)
    assert checks and all(c.ok for c in checks)
    # deliberately corrupted bound: failure is data, not an exception
    bad = CodeInstance(
        code.field, code.n, code.k, code.matrix, code.construction,
        dict(code.bounds, product_bound=code.n + 1), code.provenance,
    )
    bad_checks = verify_bounds(bad)
    failed = [c for c in bad_checks if not c.ok]
    assert len(failed) == 1 and failed[0].name == "product_bound"


def test_verify_requires_full_report(curve56):
    code = build_E_lambda(
        6, curve56.fp_generic, curve56.gamma, curve56.selection,
        curve56.identity_inners, curve56.dseq,
    )
    partial = min_distance(code, cap=10, allow_partial=True)
    with pytest.raises(ValueError):
        verify_bounds(code, partial)


def test_extended_equals_plain_for_identity_inners(curve56):
    # with all-rational points and identity inners the oracle distance
    # of the extended code equals the plain affine-variety distance
    from gagcodes.codes import build_affine_variety_code, well_behaving_basis
    from gagcodes.points import select_points
    from gagcodes.polyring import parse_poly

    sel = select_points(curve56.gb_generic, "all")
    span = [parse_poly(s, curve56.field, curve56.order) for s in ("1", "X", "Y")]
    fs = well_behaving_basis(span, curve56.gb_base)
    av = build_affine_variety_code(fs, sel, curve56.gamma)
    from gagcodes.codes import build_extended_code, default_inner_codes
    from gagcodes.groebner import buchberger_moller

    gb_p = buchberger_moller(sel.comp_points(), curve56.order)
    ext = build_extended_code(
        span, sel, default_inner_codes(sel), curve56.gamma, gb_p
    )
    assert min_distance(av).exact_distance == min_distance(ext).exact_distance
