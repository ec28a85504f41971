#!/usr/bin/env python3
"""Regenerates catalog/*.json. Matrices act on row vectors from the right."""
import json
import os
import sys


def one_dim(values):
    return {"dimension": 1, "action": [[[str(v)]] for v in values]}


def mat(rows):
    return [[str(x) for x in r] for r in rows]


def quaternion_tables():
    # basis order 1, i, j, k; products of signed units as (sign, index)
    table = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    return table


def q8():
    t = quaternion_tables()
    # points 1..8 = +1,+i,+j,+k,-1,-i,-j,-k
    def point(sign, idx):
        return idx + 1 if sign > 0 else idx + 5

    def right_mult(g):
        img = []
        for p in range(8):
            sign = 1 if p < 4 else -1
            s, idx = t[(p % 4, g)]
            img.append(point(sign * s, idx))
        return img

    def quat_matrix(g):
        rows = []
        for e in range(4):
            s, idx = t[(e, g)]
            row = [0] * 4
            row[idx] = s
            rows.append(row)
        return mat(rows)

    gens = [right_mult(1), right_mult(2)]
    reps = {
        "regular": {"construct": "regular"},
        "permutation": {"construct": "permutation"},
        "trivial": {"construct": "trivial"},
        "chi_i": one_dim([1, -1]),
        "chi_j": one_dim([-1, 1]),
        "chi_k": one_dim([-1, -1]),
        "quaternion": {"dimension": 4, "action": [quat_matrix(1), quat_matrix(2)]},
    }
    return {"degree": 8, "generators": gens}, reps


def a4_standard(perm):
    # basis f_i = e_i - e_4, i = 1..3; e_i . g = e_{g(i)}
    def vec(i):
        v = [0, 0, 0]
        if i < 3:
            v[i] = 1
        return v
    rows = []
    for i in range(3):
        a = vec(perm[i] - 1)
        b = vec(perm[3] - 1)
        rows.append([a[c] - b[c] for c in range(3)])
    return mat(rows)


def catalog():
    std_a = mat([[0, 1], [-1, -1]])
    swap = mat([[0, 1], [1, 0]])
    entries = {}
    entries["S3"] = ({"degree": 3, "generators": [[2, 3, 1], [2, 1, 3]]}, {
        "regular": {"construct": "regular"},
        "permutation": {"construct": "permutation"},
        "trivial": {"construct": "trivial"},
        "sign": one_dim([1, -1]),
        "standard": {"dimension": 2, "action": [std_a, swap]},
    })
    entries["C2"] = ({"degree": 2, "generators": [[2, 1]]}, {
        "regular": {"construct": "regular"},
        "permutation": {"construct": "permutation"},
        "trivial": {"construct": "trivial"},
        "sign": one_dim([-1]),
    })
    entries["C4"] = ({"degree": 4, "generators": [[2, 3, 4, 1]]}, {
        "regular": {"construct": "regular"},
        "permutation": {"construct": "permutation"},
        "trivial": {"construct": "trivial"},
        "sign": one_dim([-1]),
        "rotation": {"dimension": 2, "action": [mat([[0, 1], [-1, 0]])]},
    })
    entries["D4"] = ({"degree": 4, "generators": [[2, 3, 4, 1], [1, 4, 3, 2]]}, {
        "regular": {"construct": "regular"},
        "permutation": {"construct": "permutation"},
        "trivial": {"construct": "trivial"},
        "chi_s": one_dim([1, -1]),
        "chi_r": one_dim([-1, 1]),
        "chi_rs": one_dim([-1, -1]),
        "standard": {"dimension": 2, "action": [mat([[0, 1], [-1, 0]]), mat([[1, 0], [0, -1]])]},
    })
    entries["Q8"] = q8()
    a, b = [2, 3, 1, 4], [2, 1, 4, 3]
    entries["A4"] = ({"degree": 4, "generators": [a, b]}, {
        "regular": {"construct": "regular"},
        "permutation": {"construct": "permutation"},
        "trivial": {"construct": "trivial"},
        "rotation": {"dimension": 2, "action": [std_a, mat([[1, 0], [0, 1]])]},
        "standard": {"dimension": 3, "action": [a4_standard(a), a4_standard(b)]},
    })
    return entries


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "catalog")
    for name, (group, reps) in catalog().items():
        with open(os.path.join(out, name + ".json"), "w") as f:
            json.dump({"name": name, "group": group, "representations": reps}, f, indent=1)
            f.write("\n")


if __name__ == "__main__":
    main()
