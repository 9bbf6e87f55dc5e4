"""JSON schemas (draft 2020-12) for every CLI output, keyed by verb."""

from __future__ import annotations

DECIMAL = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"}
NATURAL = {"type": "string", "pattern": r"^[0-9]+$"}
# finite field elements print as one residue or as ascending coefficients
ELEMENT = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?(,[0-9]+)*$"}
POLY = {"type": "string", "pattern": r"^-?[0-9]+(,-?[0-9]+)*$"}
FLOAT = {"type": "string"}


def _obj(props: dict, required=None, extra=False) -> dict:
    return {"type": "object", "properties": props,
            "required": list(props) if required is None else required,
            "additionalProperties": extra}


def _arr(item, n=None) -> dict:
    out = {"type": "array", "items": item}
    if n is not None:
        out["minItems"] = out["maxItems"] = n
    return out


QUAT_CLASSIFY = {"oneOf": [
    _obj({"kind": {"const": "Division"},
          "obstruction": {"type": "array", "minItems": 1, "items": {
              "type": "array", "prefixItems": [
                  {"type": "string", "pattern": r"^([0-9]+|inf)$"}, {"const": -1}],
              "minItems": 2, "maxItems": 2}}}),
    _obj({"kind": {"const": "Split"}, "witness": _arr(ELEMENT, 4)}),
]}

QUAT_EVAL = _obj({"algebra": _arr(ELEMENT, 2), "witness": _arr(ELEMENT, 4),
                  "result": _arr(ELEMENT, 4), "norm": ELEMENT}, required=[])

NORM_COKERNEL = _obj({"extension": {"type": "string"}, "image": _arr({"type": "string"}),
                      "image_generators": _arr({"type": "string"}),
                      "target_order": NATURAL, "order": NATURAL, "structure": _arr(NATURAL)})

SURJECTIVITY = _obj({"extension": {"type": "string"}, "surjective": {"type": "boolean"},
                     "preimages": {"type": "object", "additionalProperties": ELEMENT}})

QUADRATIC_NORM = _obj({"q": NATURAL, "levels": _arr(_obj({"extension": {"type": "string"},
                                                    "surjective": {"type": "boolean"}}))})

TOWER_LEVEL = _obj({"i": NATURAL, "min_poly": POLY,
                    "ambient": {"type": "string", "pattern": r"^GF\([0-9]+\^[0-9]+\)$"},
                    "degree": NATURAL})

TOWER_REPORT = _obj({"base": {"type": "string", "pattern": r"^PC\([0-9]+;[0-9]+\)$"},
                     "kind": {"enum": ["artin-schreier", "kummer", "quadratic"]},
                     "p": NATURAL, "seed_element": ELEMENT, "max_ambient_bits": NATURAL,
                     "levels": {**_arr(TOWER_LEVEL), "minItems": 1}})

TOWER_VERIFY = _obj({"base": {"type": "string"}, "degree_bound": NATURAL,
                     "linear": {"type": "boolean"}})

FOURTH_POWER = _obj({"q": NATURAL, "all_fourth_powers": {"type": "boolean"},
                     "roots": {"type": "object", "additionalProperties": ELEMENT}})

ANTICLOSURE = _obj({"field": {"type": "string"}, "is_trivial": {"type": "boolean"},
                    "degree": NATURAL, "reason": {"enum": ["intersection", "unique-minimal"]},
                    "generator": POLY, "witnesses": _arr({"type": "string"})},
                   required=["field", "is_trivial", "degree", "reason"])

MGROUP = _obj({"name": {"type": "string"}, "order": NATURAL, "subgroups": NATURAL,
               "maximal": _arr(_arr(NATURAL)), "is_m_group": {"type": "boolean"},
               "is_cyclic": {"type": "boolean"},
               "generator": {"oneOf": [NATURAL, {"type": "null"}]}})

FACTOR_DEGREES = _obj({"field": {"type": "string"}, "poly": POLY, "degrees": _arr(NATURAL)})

SQRT_CHECK = _obj({"alpha": _arr(FLOAT, 2), "residual": FLOAT,
                   "within_tolerance": {"type": "boolean"}})

NORM_IMAGE = _obj({"extension": {"type": "string"}, "image": _arr(ELEMENT)})

SCHEMAS = {
    "quat classify": QUAT_CLASSIFY,
    "quat eval": QUAT_EVAL,
    "brauer cyclic": NORM_COKERNEL,
    "brauer realclosed": NORM_COKERNEL,
    "brauer surjective": SURJECTIVITY,
    "brauer quadratic-norm": QUADRATIC_NORM,
    "tower build": TOWER_REPORT,
    "tower verify": TOWER_VERIFY,
    "tower fourth-power": FOURTH_POWER,
    "anticlosure": ANTICLOSURE,
    "mgroup check": MGROUP,
    "factor-degrees": FACTOR_DEGREES,
    "sqrt-check": SQRT_CHECK,
    "norm-image": NORM_IMAGE,
}


def schema_for(verb: str) -> dict:
    return {"$schema": "https://json-schema.org/draft/2020-12/schema", **SCHEMAS[verb]}
