#!/usr/bin/env python3
# Copyright 2026 The dessins Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes data/gh22.json, the split Cayley hexagon of order 2.

Points are the 63 points of the parabolic quadric
    x0 x4 + x1 x5 + x2 x6 = x3^2
in PG(6, 2); lines are the quadric lines whose Grassmann coordinates satisfy
    p12 = p34, p54 = p32, p20 = p35, p65 = p30, p01 = p36, p46 = p31
(signs are irrelevant over GF(2)). Projecting from the nucleus (0,0,0,1,0,0,0)
drops x3 and lands in the symplectic space W(5, 2), whose points are the 63
three-qubit observables: qubit j carries X^(x_j) Z^(x_(j+4)).

The script checks the result before writing it: 63 points, 63 lines of
three points, three lines per point, incidence graph of girth 12 and
diameter 6, and commuting observables on every line.
"""

import itertools
import json
import pathlib
import sys
from collections import deque

EQUATIONS = [((1, 2), (3, 4)), ((5, 4), (3, 2)), ((2, 0), (3, 5)),
             ((6, 5), (3, 0)), ((0, 1), (3, 6)), ((4, 6), (3, 1))]


def on_quadric(v):
    return (v[0] & v[4]) ^ (v[1] & v[5]) ^ (v[2] & v[6]) ^ v[3] == 0


def add(u, v):
    return tuple(a ^ b for a, b in zip(u, v))


def grassmann(u, v, i, j):
    return (u[i] & v[j]) ^ (u[j] & v[i])


def label(v):
    x = (v[0], v[1], v[2])
    z = (v[4], v[5], v[6])
    return "".join("IZXY"[2 * a + b] for a, b in zip(x, z))


def symplectic(u, v):
    return (u[0] & v[4]) ^ (u[4] & v[0]) ^ (u[1] & v[5]) ^ (u[5] & v[1]) ^ (u[2] & v[6]) ^ (u[6] & v[2])


def incidence_check(n_points, lines):
    n = n_points + len(lines)
    adj = [[] for _ in range(n)]
    for l, line in enumerate(lines):
        for p in line:
            adj[p].append(n_points + l)
            adj[n_points + l].append(p)
    girth, diameter = None, 0
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cycle = dist[u] + dist[w] + 1
                    girth = cycle if girth is None else min(girth, cycle)
        if min(dist) < 0:
            raise SystemExit("incidence graph is disconnected")
        diameter = max(diameter, max(dist))
    return girth, diameter


def main():
    points = [v for v in itertools.product((0, 1), repeat=7) if any(v) and on_quadric(v)]
    index = {v: i for i, v in enumerate(points)}
    lines = set()
    for u, v in itertools.combinations(points, 2):
        w = add(u, v)
        if w not in index:
            continue
        if all(grassmann(u, v, *a) == grassmann(u, v, *b) for a, b in EQUATIONS):
            lines.add(tuple(sorted((index[u], index[v], index[w]))))
    lines = sorted(lines)

    assert len(points) == 63, len(points)
    assert len(lines) == 63, len(lines)
    per_point = [0] * 63
    for line in lines:
        for p in line:
            per_point[p] += 1
        for a, b in itertools.combinations(line, 2):
            assert symplectic(points[a], points[b]) == 0
    assert set(per_point) == {3}, set(per_point)
    girth, diameter = incidence_check(63, lines)
    assert (girth, diameter) == (12, 6), (girth, diameter)

    labels = [label(v) for v in points]
    assert len(set(labels)) == 63 and "III" not in labels
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data/gh22.json")
    out.write_text(json.dumps({"points": labels, "lines": [list(l) for l in lines]}, indent=1) + "\n")
    print(f"wrote {out}: 63 points, 63 lines, girth {girth}, diameter {diameter}")


if __name__ == "__main__":
    main()
