"""Declarative construction configs: parse, validate, serialize.

The file format is TOML with the sections [field], [ring], [ideal],
[points], [inner_codes], [space], [output].  Serialization emits a
fixed key order so that parse -> serialize -> parse is the identity on
configs and rebuilt artifacts are byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .errors import ConfigError


@dataclass
class FieldSection:
    p: int
    k: int
    modulus: object = None  # list of ints c0..ck, or None for the default


@dataclass
class RingSection:
    variables: list
    weights: list  # ints, or lists of ints for vector weights
    precedence: object = None


@dataclass
class IdealSection:
    generators: list


@dataclass
class PointsSection:
    rational: object = "all"  # "all" | "none" | list of encoding tuples
    extra: list = dc_field(default_factory=list)  # [(degree, index), ...]


@dataclass
class InnerSection:
    default: str = "identity"  # "identity" | "parity"
    codes: object = None  # list of {"matrix": [[int]], "distance": int}


@dataclass
class SpaceSection:
    type: str  # "monomials" | "weight_le" | "improved"
    monomials: object = None
    lam: object = None
    delta: object = None


@dataclass
class OutputSection:
    matrix: object = None  # default matrix output path


@dataclass
class ConstructionConfig:
    field: FieldSection
    ring: RingSection
    ideal: IdealSection
    points: PointsSection
    inner_codes: InnerSection
    space: SpaceSection
    output: OutputSection


def _require(table, key, kind, where):
    if key not in table:
        raise ConfigError(f"missing key '{key}' in [{where}]")
    value = table[key]
    if kind is not None and not isinstance(value, kind):
        raise ConfigError(f"key '{key}' in [{where}] has the wrong type")
    return value


def _check_unknown(table, allowed, where):
    for key in table:
        if key not in allowed:
            raise ConfigError(f"unknown key '{key}' in [{where}]")


def parse_config(text):
    try:
        raw = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"config syntax error: {exc}") from None
    return config_from_dict(raw)


def load_config(path):
    try:
        with open(path, "rb") as fh:
            text = fh.read().decode("utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from None
    return parse_config(text)


def config_from_dict(raw):
    for section in ("field", "ring", "ideal", "points", "space"):
        if section not in raw:
            raise ConfigError(f"missing section [{section}]")
    _check_unknown(
        raw,
        {"field", "ring", "ideal", "points", "inner_codes", "space", "output"},
        "config",
    )

    f = raw["field"]
    _check_unknown(f, {"p", "k", "modulus"}, "field")
    fld = FieldSection(
        p=_require(f, "p", int, "field"),
        k=_require(f, "k", int, "field"),
        modulus=[int(c) for c in f["modulus"]] if "modulus" in f else None,
    )

    r = raw["ring"]
    _check_unknown(r, {"variables", "weights", "precedence"}, "ring")
    variables = _require(r, "variables", list, "ring")
    weights = _require(r, "weights", list, "ring")
    if len(weights) != len(variables):
        raise ConfigError("ring.weights must list one weight per variable")
    norm_weights = []
    for w in weights:
        if isinstance(w, int):
            norm_weights.append(w)
        elif isinstance(w, list) and all(isinstance(c, int) for c in w):
            norm_weights.append(list(w))
        else:
            raise ConfigError("ring.weights entries must be ints or int lists")
    precedence = r.get("precedence")
    if precedence is not None:
        if sorted(precedence) != sorted(variables):
            raise ConfigError("ring.precedence must be a permutation of the variables")
        precedence = list(precedence)
    ring = RingSection(list(variables), norm_weights, precedence)

    i = raw["ideal"]
    _check_unknown(i, {"generators"}, "ideal")
    generators = _require(i, "generators", list, "ideal")
    if not generators or not all(isinstance(g, str) for g in generators):
        raise ConfigError("ideal.generators must be a nonempty list of strings")
    ideal = IdealSection(list(generators))

    p = raw["points"]
    _check_unknown(p, {"rational", "extra"}, "points")
    rational = p.get("rational", "all")
    if isinstance(rational, str):
        if rational not in ("all", "none"):
            raise ConfigError("points.rational must be 'all', 'none', or a point list")
    elif isinstance(rational, list):
        rational = [tuple(int(c) for c in pt) for pt in rational]
        if any(len(pt) != len(variables) for pt in rational):
            raise ConfigError("explicit points must have one encoding per variable")
    else:
        raise ConfigError("points.rational must be 'all', 'none', or a point list")
    extra = []
    for entry in p.get("extra", []):
        if not isinstance(entry, dict) or set(entry) != {"degree", "index"}:
            raise ConfigError("points.extra entries must be {degree = d, index = i}")
        extra.append((int(entry["degree"]), int(entry["index"])))
    points = PointsSection(rational, extra)

    ic = raw.get("inner_codes", {})
    _check_unknown(ic, {"default", "codes"}, "inner_codes")
    default = ic.get("default", "identity")
    if default not in ("identity", "parity"):
        raise ConfigError("inner_codes.default must be 'identity' or 'parity'")
    codes = ic.get("codes")
    if codes is not None:
        parsed = []
        for entry in codes:
            if not isinstance(entry, dict) or set(entry) != {"matrix", "distance"}:
                raise ConfigError(
                    "inner_codes.codes entries must be {matrix = [[..]], distance = d}"
                )
            matrix = [[int(c) for c in row] for row in entry["matrix"]]
            parsed.append({"matrix": matrix, "distance": int(entry["distance"])})
        codes = parsed
    inner = InnerSection(default, codes)

    s = raw["space"]
    _check_unknown(s, {"type", "monomials", "lambda", "delta"}, "space")
    stype = _require(s, "type", str, "space")
    if stype == "monomials":
        monos = _require(s, "monomials", list, "space")
        if not monos or not all(isinstance(m, str) for m in monos):
            raise ConfigError("space.monomials must be a nonempty list of strings")
        space = SpaceSection("monomials", monomials=list(monos))
    elif stype == "weight_le":
        space = SpaceSection("weight_le", lam=int(_require(s, "lambda", int, "space")))
    elif stype == "improved":
        space = SpaceSection("improved", delta=int(_require(s, "delta", int, "space")))
    else:
        raise ConfigError("space.type must be 'monomials', 'weight_le', or 'improved'")

    o = raw.get("output", {})
    _check_unknown(o, {"matrix"}, "output")
    output = OutputSection(o.get("matrix"))

    return ConstructionConfig(fld, ring, ideal, points, inner, space, output)


def config_to_dict(cfg):
    """Plain-dict echo of a resolved config (JSON- and TOML-friendly)."""
    out = {
        "field": {"p": cfg.field.p, "k": cfg.field.k},
        "ring": {
            "variables": list(cfg.ring.variables),
            "weights": [w if isinstance(w, int) else list(w) for w in cfg.ring.weights],
        },
        "ideal": {"generators": list(cfg.ideal.generators)},
        "points": {},
        "inner_codes": {"default": cfg.inner_codes.default},
        "space": {"type": cfg.space.type},
        "output": {},
    }
    if cfg.field.modulus is not None:
        out["field"]["modulus"] = list(cfg.field.modulus)
    if cfg.ring.precedence is not None:
        out["ring"]["precedence"] = list(cfg.ring.precedence)
    if isinstance(cfg.points.rational, str):
        out["points"]["rational"] = cfg.points.rational
    else:
        out["points"]["rational"] = [list(pt) for pt in cfg.points.rational]
    if cfg.points.extra:
        out["points"]["extra"] = [
            {"degree": d, "index": i} for d, i in cfg.points.extra
        ]
    if cfg.inner_codes.codes is not None:
        out["inner_codes"]["codes"] = [
            {"matrix": [list(r) for r in c["matrix"]], "distance": c["distance"]}
            for c in cfg.inner_codes.codes
        ]
    if cfg.space.monomials is not None:
        out["space"]["monomials"] = list(cfg.space.monomials)
    if cfg.space.lam is not None:
        out["space"]["lambda"] = cfg.space.lam
    if cfg.space.delta is not None:
        out["space"]["delta"] = cfg.space.delta
    if cfg.output.matrix is not None:
        out["output"]["matrix"] = cfg.output.matrix
    return out


def _toml_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, str):
        escaped = v.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    if isinstance(v, dict):
        inner = ", ".join(f"{k} = {_toml_value(val)}" for k, val in v.items())
        return "{" + inner + "}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_toml_value(x) for x in v) + "]"
    raise ConfigError(f"cannot serialize value {v!r}")


def serialize_config(cfg):
    """Deterministic TOML text for a config."""
    data = config_to_dict(cfg)
    lines = []
    for section in ("field", "ring", "ideal", "points", "inner_codes", "space", "output"):
        table = data.get(section)
        if not table:
            continue
        lines.append(f"[{section}]")
        for key, value in table.items():
            lines.append(f"{key} = {_toml_value(value)}")
        lines.append("")
    return "\n".join(lines)
