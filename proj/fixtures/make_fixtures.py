#!/usr/bin/env python3
"""Regenerates the model documents in this directory."""

import itertools
import json
import pathlib

HERE = pathlib.Path(__file__).resolve().parent


def s(x):
    return str(x)


def mat(rows):
    return [[s(v) for v in row] for row in rows]


def group_category(names, mult):
    tensor = {a: {b: names[mult[i][j]] for j, b in enumerate(names)} for i, a in enumerate(names)}
    return {
        "objects": names,
        "unit": names[0],
        "tensor": tensor,
        "morphisms": [],
        "composition": {},
        "tensor_morphisms": {},
    }


def group_duals(names, mult):
    unit = names[0]
    out = {}
    for i, a in enumerate(names):
        inv = next(j for j in range(len(names)) if mult[j][i] == 0)
        out[a] = {"dual": names[inv], "ev": "id_" + unit, "coev": "id_" + unit}
    return out


def one_dim_strong(names):
    pairs = {a: {b: mat([[1]]) for b in names} for a in names}
    return {
        "dims": {a: 1 for a in names},
        "morphisms": {},
        "lax2": pairs,
        "lax0": mat([[1]]),
        "oplax2": pairs,
        "oplax0": mat([[1]]),
    }


# Separable Frobenius structure on k^2: pointwise product and its dual.
M2 = [[1, 0, 0, 0], [0, 0, 0, 1]]
M0 = [[1], [1]]
W2 = [[1, 0], [0, 0], [0, 0], [0, 1]]
W0 = [[1, 1]]


def pair_functor(names, m2=M2, m0=M0, w2=W2, w0=W0):
    return {
        "dims": {a: 2 for a in names},
        "morphisms": {},
        "lax2": {a: {b: mat(m2) for b in names} for a in names},
        "lax0": mat(m0),
        "oplax2": {a: {b: mat(w2) for b in names} for a in names},
        "oplax0": mat(w0),
    }


def cyclic(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def s3():
    perms = [p for p in itertools.permutations(range(3))]
    perms.sort(key=lambda p: (p != (0, 1, 2), p))
    names = ["e" if p == (0, 1, 2) else "p" + "".join(map(str, p)) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    mult = [[index[tuple(a[b[k]] for k in range(3))] for b in perms] for a in perms]
    return names, mult


def document(category, functor, duals=None, terms=None):
    doc = {"category": dict(category), "functor": functor}
    if duals is not None:
        doc["category"]["duals"] = duals
    if terms:
        doc["terms"] = terms
    return doc


def write(name, doc):
    (HERE / name).write_text(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n")


def main():
    z2 = (["e", "g"], cyclic(2))
    trivial = (["e"], [[0]])

    write("strong_z2.json",
          document(group_category(*z2), one_dim_strong(z2[0]), group_duals(*z2),
                   {"counit_of_unit": "eta;eps", "antipode": "S"}))
    write("weak_pair.json",
          document(group_category(*trivial), pair_functor(trivial[0]), group_duals(*trivial),
                   {"counit_of_unit": "eta;eps", "antipode": "S", "frobenius": "lax2(e,e);oplax2(e,e)"}))
    write("trivial_n1.json",
          document(group_category(*trivial), one_dim_strong(trivial[0]), group_duals(*trivial)))
    write("z2_n2.json", document(group_category(*z2), pair_functor(z2[0]), group_duals(*z2)))
    z3 = (["e", "a", "b"], cyclic(3))
    write("z3_strong.json", document(group_category(*z3), one_dim_strong(z3[0]), group_duals(*z3)))
    sym = s3()
    write("s3_strong.json", document(group_category(*sym), one_dim_strong(sym[0]), group_duals(*sym)))

    # One object and an idempotent p; tensor of morphisms is composition.
    idem = {
        "objects": ["e"],
        "unit": "e",
        "tensor": {"e": {"e": "e"}},
        "morphisms": [{"name": "p", "src": "e", "dst": "e"}],
        "composition": {"p∘p": "p"},
        "tensor_morphisms": {"p⊗p": "p", "p⊗id_e": "p", "id_e⊗p": "p"},
    }
    f = pair_functor(["e"])
    f["morphisms"] = {"p": mat([[1, 0], [0, 0]])}
    write("idempotent.json", document(idem, f, {"e": {"dual": "e", "ev": "id_e", "coev": "id_e"}}))

    cat_w = group_category(*trivial)
    duals_w = group_duals(*trivial)
    write("defect_m0.json", document(cat_w, pair_functor(["e"], m0=[[1], [0]]), duals_w))
    write("defect_w0.json", document(cat_w, pair_functor(["e"], w0=[[1, 0]]), duals_w))
    write("defect_w2.json", document(cat_w, pair_functor(["e"], w2=[[1, 0], [0, 0], [0, 0], [0, 0]]), duals_w))
    write("defect_m2_scaled.json", document(cat_w, pair_functor(["e"], m2=[[2, 0, 0, 0], [0, 0, 0, 2]]), duals_w))
    broken = one_dim_strong(z2[0])
    broken["oplax0"] = mat([[0]])
    write("defect_strong_w0.json", document(group_category(*z2), broken, group_duals(*z2)))

    # F(p) given with three entries per row for a 2x2 slot.
    bad = pair_functor(["e"])
    bad["morphisms"] = {"p": mat([[1, 0, 0], [0, 0, 0]])}
    write("bad_shape.json", document(idem, bad))


if __name__ == "__main__":
    main()
