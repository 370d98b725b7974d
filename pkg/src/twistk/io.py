"""JSON schemas for groups, multipliers, and words.

Every exact number crosses the wire as a string "p/q"; floats appear
only in the optional evaluation hints.  The multiplier schema is
variant-tagged by "type": klein | table | trivial | direct_product |
torus | g3 | free_product.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .freeprod import FPWord, FreeProduct, FreeProductMultiplier
from .groups import FiniteGroup
from .lattices import G3Multiplier, LatticeMultiplier, MuMatrix, Theta, _MU_KEYS
from .multipliers import (
    FiniteMultiplier,
    KleinMultiplier,
    Multiplier,
    TableMultiplier,
    trivial_multiplier,
)
from .products import Bihomomorphism, ProductMultiplier
from .torus import IrrationalBasis, RotationNumber


class SchemaError(ValueError):
    pass


def _require(data: Mapping, key: str):
    if key not in data:
        raise SchemaError(f"missing field {key!r}")
    return data[key]


def decode_rotation(data) -> RotationNumber:
    try:
        return RotationNumber.from_json(data)
    except (TypeError, ValueError, AttributeError) as exc:
        raise SchemaError(f"bad rotation number {data!r}: {exc}") from None


def decode_group(data) -> FiniteGroup:
    table = _require(data, "table")
    try:
        return FiniteGroup(table, data.get("names"))
    except ValueError as exc:
        raise SchemaError(f"bad group: {exc}") from None


def _decode_basis(data) -> IrrationalBasis:
    labels = tuple(data.get("basis", ()))
    hints = {str(k): float(v) for k, v in data.get("hints", {}).items()}
    return IrrationalBasis(labels, hints)


def decode_multiplier(data) -> Multiplier:
    kind = _require(data, "type")
    if kind == "klein":
        try:
            return KleinMultiplier(int(_require(data, "n")), int(_require(data, "k")))
        except ValueError as exc:
            raise SchemaError(str(exc)) from None
    if kind == "trivial":
        return trivial_multiplier(decode_group(_require(data, "group")))
    if kind == "table":
        group = decode_group(_require(data, "group"))
        values = [[decode_rotation(v) for v in row] for row in _require(data, "values")]
        try:
            return TableMultiplier(group, values)
        except ValueError as exc:
            raise SchemaError(str(exc)) from None
    if kind == "direct_product":
        sigma1 = decode_multiplier(_require(data, "sigma1"))
        sigma2 = decode_multiplier(_require(data, "sigma2"))
        if not isinstance(sigma1, FiniteMultiplier) or not isinstance(sigma2, FiniteMultiplier):
            raise SchemaError("direct_product factors must be finite multipliers")
        ftable = [[decode_rotation(v) for v in row] for row in _require(_require(data, "f"), "table")]
        try:
            f = Bihomomorphism(sigma1.group, sigma2.group, ftable)
            return ProductMultiplier(sigma1, sigma2, f)
        except ValueError as exc:
            raise SchemaError(str(exc)) from None
    if kind == "torus":
        n = int(_require(data, "n"))
        basis = _decode_basis(data)
        entries = {}
        for key, value in _require(data, "theta").items():
            try:
                i, j = (int(part) for part in str(key).split(","))
            except ValueError:
                raise SchemaError(f"bad theta key {key!r}; expected 'i,j' (1-based)") from None
            entries[(i - 1, j - 1)] = decode_rotation(value)
        try:
            return LatticeMultiplier(Theta(n, entries, basis))
        except ValueError as exc:
            raise SchemaError(str(exc)) from None
    if kind == "g3":
        basis = _decode_basis(data)
        mu = {}
        for key, value in _require(data, "mu").items():
            key = str(key)
            if len(key) != 2 or not key.isdigit():
                raise SchemaError(f"bad mu key {key!r}; expected 'ij'")
            mu[(int(key[0]), int(key[1]))] = decode_rotation(value)
        try:
            return G3Multiplier(MuMatrix(mu, basis))
        except ValueError as exc:
            raise SchemaError(str(exc)) from None
    if kind == "free_product":
        sigma1 = decode_multiplier(_require(data, "sigma1"))
        sigma2 = decode_multiplier(_require(data, "sigma2"))
        if not isinstance(sigma1, FiniteMultiplier) or not isinstance(sigma2, FiniteMultiplier):
            raise SchemaError("free_product factors must be finite multipliers")
        try:
            return FreeProductMultiplier(sigma1, sigma2)
        except ValueError as exc:
            raise SchemaError(str(exc)) from None
    raise SchemaError(f"unknown multiplier type {kind!r}")


def encode_multiplier(sigma: Multiplier) -> dict:
    if isinstance(sigma, KleinMultiplier):
        return {"type": "klein", "n": sigma.n, "k": sigma.k}
    if isinstance(sigma, ProductMultiplier):
        return {
            "type": "direct_product",
            "sigma1": encode_multiplier(sigma.sigma1),
            "sigma2": encode_multiplier(sigma.sigma2),
            "f": {"table": [[v.to_json() for v in row] for row in sigma.f.table]},
        }
    if isinstance(sigma, TableMultiplier):
        return {
            "type": "table",
            "group": sigma.group.to_json(),
            "values": [[v.to_json() for v in row] for row in sigma.values],
        }
    if isinstance(sigma, LatticeMultiplier):
        return sigma.theta.to_json()
    if isinstance(sigma, G3Multiplier):
        return sigma.mu.to_json()
    if isinstance(sigma, FreeProductMultiplier):
        return {
            "type": "free_product",
            "sigma1": encode_multiplier(sigma.sigma1),
            "sigma2": encode_multiplier(sigma.sigma2),
        }
    if isinstance(sigma, FiniteMultiplier):
        return encode_multiplier(sigma.to_table())
    raise SchemaError(f"cannot encode {type(sigma).__name__}")


def encode_word(fp: FreeProduct, word: FPWord) -> list:
    return [[str(factor), fp.factor(factor).names[elem]] for factor, elem in word]


def decode_word(fp: FreeProduct, data) -> FPWord:
    letters = []
    for item in data:
        factor = int(item[0])
        if factor not in (1, 2):
            raise SchemaError(f"bad factor tag {item[0]!r}")
        group = fp.factor(factor)
        name = str(item[1])
        try:
            elem = group.index_of(name)
        except ValueError:
            raise SchemaError(f"unknown element name {name!r} in factor {factor}") from None
        letters.append(fp.letter(factor, elem))
    return fp.check_word(tuple(letters))


def encode_witness_element(sigma: Multiplier, element) -> object:
    """Encode a domain element of any multiplier family for a report."""
    if isinstance(sigma, FreeProductMultiplier):
        return encode_word(sigma.fp, element)
    if isinstance(sigma, (LatticeMultiplier, G3Multiplier)):
        return list(element)
    if isinstance(sigma, FiniteMultiplier):
        return int(element)
    return element


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational {text!r}: {exc}") from None
