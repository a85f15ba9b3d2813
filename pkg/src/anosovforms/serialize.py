"""JSON encoding and decoding of every on-disk format.

All numbers are exact rational strings ("p/q" or "p"); no floats exist
anywhere in the formats.  canonical_dumps produces byte-identical output
for equal objects (sorted keys, tight separators, trailing newline), which
is what makes gold-file tests and CLI round-trips exact.
"""

from __future__ import annotations

import json

from .anosov import AnosovCertificate
from .errors import BadParameters
from .exactmath import Interval, Polynomial, RationalMatrix, rat, rat_to_str
from .liealg import LieAlgebra
from .numfield import FieldElement, GaloisDatum, verify_galois_datum
from .pfaffian import BinaryQuadraticForm
from .pisot import ConeConstraint


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


# -- polynomials, matrices, intervals --------------------------------------


def poly_to_json(p: Polynomial) -> list[str]:
    return [rat_to_str(c) for c in p.coeffs]


def poly_from_json(data) -> Polynomial:
    return Polynomial([rat(str(c)) for c in data])


def matrix_to_json(m: RationalMatrix) -> list[list[str]]:
    return [[rat_to_str(x) for x in row] for row in m.entries]


def matrix_from_json(data) -> RationalMatrix:
    return RationalMatrix([[rat(str(x)) for x in row] for row in data])


def interval_to_json(iv: Interval) -> dict:
    return {"lo": rat_to_str(iv.lo), "hi": rat_to_str(iv.hi)}


def interval_from_json(data) -> Interval:
    return Interval(rat(str(data["lo"])), rat(str(data["hi"])))


# -- Galois data ------------------------------------------------------------


def datum_to_json(d: GaloisDatum) -> dict:
    out = {
        "min_poly": poly_to_json(d.min_poly),
        "automorphisms": [poly_to_json(q) for q in d.automorphisms],
        "identity": d.identity_index,
        "table": [list(row) for row in d.table],
        "assume_irreducible": d.assume_irreducible,
    }
    if d.totally_real:
        out["roots"] = [interval_to_json(iv) for iv in d.root_enclosures]
    else:
        out["totally_real"] = False
        out["moduli"] = [interval_to_json(iv) for iv in d.root_moduli]
    if d.distinguished_index:
        out["distinguished"] = d.distinguished_index
    return out


def datum_from_json(data, verify: bool = True) -> GaloisDatum:
    totally_real = data.get("totally_real", True)
    datum = GaloisDatum(
        min_poly=poly_from_json(data["min_poly"]),
        automorphisms=tuple(poly_from_json(q) for q in data["automorphisms"]),
        identity_index=int(data["identity"]),
        table=tuple(tuple(int(x) for x in row) for row in data["table"]),
        root_enclosures=tuple(interval_from_json(iv) for iv in data["roots"])
        if totally_real else None,
        totally_real=totally_real,
        root_moduli=tuple(interval_from_json(iv) for iv in data.get("moduli", []))
        if not totally_real else None,
        assume_irreducible=bool(data.get("assume_irreducible", False)),
        distinguished_index=int(data.get("distinguished", 0)),
    )
    return verify_galois_datum(datum) if verify else datum


def element_to_json(x: FieldElement) -> list[str]:
    return [rat_to_str(c) for c in x.coeffs]


def element_from_json(datum: GaloisDatum, data) -> FieldElement:
    return datum.element([rat(str(c)) for c in data])


# -- Lie algebras -----------------------------------------------------------


def algebra_to_json(a: LieAlgebra) -> dict:
    if not isinstance(a.field, str):
        out_field = datum_to_json(a.field)
    else:
        out_field = "Q"
    out = {
        "field": out_field,
        "dim": a.dim,
        "brackets": [[i, j, k, rat_to_str(c)] for (i, j, k, c) in a.brackets],
    }
    if a.basis_labels:
        out["labels"] = list(a.basis_labels)
    return out


def algebra_from_json(data) -> LieAlgebra:
    f = data["field"]
    field = "Q" if f == "Q" else datum_from_json(f)
    brackets = tuple(
        (int(i), int(j), int(k), rat(str(c))) for (i, j, k, c) in data["brackets"]
    )
    labels = tuple(data["labels"]) if "labels" in data else None
    return LieAlgebra(field, int(data["dim"]), brackets, labels)


def map_to_json(m: RationalMatrix) -> dict:
    return {"matrix": matrix_to_json(m)}


def map_from_json(data) -> RationalMatrix:
    if "matrix" not in data:
        raise BadParameters("map file needs a 'matrix' key")
    return matrix_from_json(data["matrix"])


# -- certificates and forms -------------------------------------------------


def certificate_to_json(c: AnosovCertificate) -> dict:
    return {
        "charpoly": poly_to_json(c.charpoly),
        "determinant": rat_to_str(c.determinant),
        "integer_like": c.integer_like,
        "hyperbolic": c.hyperbolic,
        "signature": list(c.signature) if c.signature else None,
        "type": list(c.algebra_type),
        "class": c.nilpotency_class,
        "minimal_signature": c.minimal_signature,
        "assumptions": list(c.assumptions),
    }


def form_to_json(h: BinaryQuadraticForm) -> dict:
    return {"a": rat_to_str(h.a), "b": rat_to_str(h.b), "c": rat_to_str(h.c)}


def form_from_json(data) -> BinaryQuadraticForm:
    return BinaryQuadraticForm(rat(str(data["a"])), rat(str(data["b"])),
                               rat(str(data["c"])))


def representation_to_json(rho) -> dict:
    return {
        "datum": datum_to_json(rho.datum),
        "images": [matrix_to_json(im) for im in rho.images],
    }


def representation_from_json(data, algebra=None):
    from .galoisform import Representation, verify_representation

    datum = datum_from_json(data["datum"])
    images = tuple(matrix_from_json(im) for im in data["images"])
    return verify_representation(Representation(datum, images, algebra))


def labeled_algebra_to_json(la) -> dict:
    out = algebra_to_json(la.algebra)
    out["field"] = datum_to_json(la.datum)
    out["labels"] = [element_to_json(lab) for lab in la.labels]
    out["generators"] = list(la.generators)
    return out


def labeled_algebra_from_json(data):
    from .galoisform import build_labeled_algebra

    datum = datum_from_json(data["field"])
    labels = [element_from_json(datum, lab) for lab in data["labels"]]
    spec = [(int(i), int(j), rat(str(c)), int(k))
            for (i, j, k, c) in data["brackets"]]
    return build_labeled_algebra(labels, spec,
                                 tuple(int(g) for g in data["generators"]))


def constraints_from_json(data) -> list[ConeConstraint]:
    out = []
    for item in data:
        out.append(ConeConstraint(tuple(int(c) for c in item["coeffs"]),
                                  str(item["rel"])))
    return out


def recipe_output_to_json(out) -> dict:
    return {
        "algebra": algebra_to_json(out.algebra),
        "matrix": matrix_to_json(out.matrix),
        "certificate": certificate_to_json(out.certificate),
        "provenance": out.provenance,
    }
