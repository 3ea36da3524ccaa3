#!/usr/bin/env python3
# Copyright 2026 The fincat Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes fixtures/v2.fincat: F2-vector spaces of dimension 0, 1, 2 and all linear maps."""

import itertools
import sys

OBJECTS = ["0", "v1", "v2"]
DIM = {"0": 0, "v1": 1, "v2": 2}


def matrices(rows, cols):
    for bits in itertools.product((0, 1), repeat=rows * cols):
        yield tuple(tuple(bits[r * cols:(r + 1) * cols]) for r in range(rows))


def identity(n):
    return tuple(tuple(int(r == c) for c in range(n)) for r in range(n))


def multiply(g, f, rows, inner, cols):
    return tuple(
        tuple(sum(g[r][k] * f[k][c] for k in range(inner)) % 2 for c in range(cols)) for r in range(rows)
    )


def name(src, dst, m):
    if src == dst and m == identity(DIM[src]):
        return "id_" + src
    if DIM[src] == 0 or DIM[dst] == 0:
        return "z_" + src + "_" + dst
    return src + dst + "_" + "".join(str(b) for row in m for b in row)


def main(out):
    hom = {(s, d): list(matrices(DIM[d], DIM[s])) for s in OBJECTS for d in OBJECTS}
    lines = ["# Generated by tools/gen_v2.py: F2-vector spaces of dimension 0, 1, 2.", "category v2",
             "objects " + " ".join(OBJECTS)]
    for s in OBJECTS:
        for d in OBJECTS:
            for m in hom[(s, d)]:
                n = name(s, d, m)
                if not n.startswith("id_"):
                    lines.append(f"arrow {n} : {s} -> {d}")
    for a in OBJECTS:
        for b in OBJECTS:
            for c in OBJECTS:
                for f in hom[(a, b)]:
                    for g in hom[(b, c)]:
                        fn, gn = name(a, b, f), name(b, c, g)
                        if fn.startswith("id_") or gn.startswith("id_"):
                            continue
                        h = multiply(g, f, DIM[c], DIM[b], DIM[a])
                        lines.append(f"compose {gn} {fn} = {name(a, c, h)}")
    lines += [
        "",
        "pair everything on zero(v2) torsion {0 v1 v2} free {0}",
        "pair nothing on zero(v2) torsion {0} free {0 v1 v2}",
    ]
    out.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    with open(sys.argv[1] if len(sys.argv) > 1 else "fixtures/v2.fincat", "w") as f:
        main(f)
