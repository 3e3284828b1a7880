"""Brute-force minimum distance: the ground truth for every bound.

Full message enumeration, no information-set tricks: in the intended
regime (k <= ~10, q <= 16) the naive scan is fast and trustworthy.
Enumeration may be partitioned across workers; the reduction is an
associative min over (weight, message index), so the result is
bit-identical to sequential execution.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import ResourceCapError

DEFAULT_CAP = 1 << 20

DISTANCE_BOUND_KEYS = ("product_bound", "sigma_bound", "one_point_bound", "gag_designed")
DIMENSION_BOUND_KEYS = ("xnl_dim_bound",)


@dataclass
class DistanceReport:
    """Result of a (possibly capped) codeword-weight scan."""

    exact_distance: object  # int when method == "full", else None
    enumerated_count: int
    method: str  # "full" | "capped"
    min_weight_found: object
    witness_message: object  # tuple of encodings
    witness_codeword: object  # tuple of encodings


def _digits(index, q, k):
    out = []
    for _ in range(k):
        out.append(index % q)
        index //= q
    return out


def _scan_range(field, rows_enc, start, stop):
    """Best (weight, index, codeword) over message indices [start, stop)."""
    q = field.q
    k = len(rows_enc)
    n = len(rows_enc[0])
    mul = field.mul_enc
    add = field.add_enc
    sub = field.sub_enc
    scaled = [
        [[mul(a, r) for r in row] for a in range(q)]
        for row in rows_enc
    ]
    digits = _digits(start, q, k)
    cur = [0] * n
    for j, a in enumerate(digits):
        if a:
            srow = scaled[j][a]
            for t in range(n):
                cur[t] = add(cur[t], srow[t])
    best = None
    index = start
    while index < stop:
        weight = sum(1 for v in cur if v)
        if index != 0 and (best is None or weight < best[0]):
            best = (weight, index, tuple(cur))
        index += 1
        if index >= stop:
            break
        # increment the base-q counter, patching the codeword per digit
        j = 0
        while True:
            old = digits[j]
            new = old + 1
            if new == q:
                new = 0
            digits[j] = new
            so, sn = scaled[j][old], scaled[j][new]
            for t in range(n):
                cur[t] = add(sub(cur[t], so[t]), sn[t])
            if new != 0:
                break
            j += 1
    return best


def exact_min_distance(field, rows, cap=DEFAULT_CAP, workers=1, allow_partial=False):
    """DistanceReport for the code spanned by rows of FieldElements.

    Refuses (ResourceCapError) when q^k exceeds the cap, unless
    allow_partial is set, in which case the scan stops at the cap and
    the report is labelled "capped" with no exact distance.
    """
    k = len(rows)
    if k == 0:
        return DistanceReport(None, 0, "full", None, None, None)
    rows_enc = [[x.enc for x in row] for row in rows]
    q = field.q
    total = q ** k
    method = "full"
    if total > cap:
        if not allow_partial:
            raise ResourceCapError(
                f"message space {q}^{k} exceeds enumeration cap {cap}"
            )
        total = cap
        method = "capped"
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if workers == 1 or total < 4 * workers:
        best = _scan_range(field, rows_enc, 0, total)
    else:
        chunk = (total + workers - 1) // workers
        bounds = [(i * chunk, min((i + 1) * chunk, total)) for i in range(workers)]
        bounds = [(a, b) for a, b in bounds if a < b]
        with ThreadPoolExecutor(max_workers=len(bounds)) as pool:
            results = list(
                pool.map(lambda ab: _scan_range(field, rows_enc, ab[0], ab[1]), bounds)
            )
        best = None
        for r in results:
            if r is not None and (best is None or r < best):
                best = r
    weight, index, codeword = best
    message = tuple(_digits(index, q, k))
    return DistanceReport(
        exact_distance=weight if method == "full" else None,
        enumerated_count=total - 1,
        method=method,
        min_weight_found=weight,
        witness_message=message,
        witness_codeword=codeword,
    )


def min_distance(code, cap=DEFAULT_CAP, workers=1, allow_partial=False):
    """Oracle distance of a CodeInstance."""
    return exact_min_distance(
        code.field, code.matrix, cap=cap, workers=workers, allow_partial=allow_partial
    )


@dataclass
class BoundCheck:
    name: str
    value: int
    kind: str  # "distance" | "dimension"
    reference: object  # oracle distance or code dimension
    ok: bool


def verify_bounds(code, report=None, cap=DEFAULT_CAP, workers=1):
    """Compare every attached bound against the oracle; failures are data.

    Distance bounds must not exceed the exact minimum distance;
    dimension bounds must not exceed the code dimension.  Vacuous
    bounds (<= 0) pass trivially, as does the zero code.
    """
    if report is None:
        report = min_distance(code, cap=cap, workers=workers)
    if report.method != "full":
        raise ValueError("verify_bounds needs a full enumeration report")
    checks = []
    for name in DISTANCE_BOUND_KEYS:
        if name not in code.bounds:
            continue
        value = code.bounds[name]
        ok = (
            code.k == 0
            or value <= 0
            or (report.exact_distance is not None and value <= report.exact_distance)
        )
        checks.append(BoundCheck(name, value, "distance", report.exact_distance, ok))
    for name in DIMENSION_BOUND_KEYS:
        if name not in code.bounds:
            continue
        value = code.bounds[name]
        ok = value <= code.k
        checks.append(BoundCheck(name, value, "dimension", code.k, ok))
    return checks
