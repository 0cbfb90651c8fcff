#!/usr/bin/env python3
# Copyright 2026 The QUAV Planner Authors
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
"""Generates the bundled scenario files.

Geometry is laid out in local meters around a UTM zone 49N origin and
converted to WGS84 with pyproj, so the files carry plain lat/lon.
"""

import argparse
import json
import pathlib

from pyproj import Transformer

ORIGIN_LAT, ORIGIN_LON = 23.13, 113.26
TO_UTM = Transformer.from_crs("EPSG:4326", "EPSG:32649", always_xy=True)
TO_GEO = Transformer.from_crs("EPSG:32649", "EPSG:4326", always_xy=True)
OX, OY = TO_UTM.transform(ORIGIN_LON, ORIGIN_LAT)


def geo(x, y):
    lon, lat = TO_GEO.transform(OX + x, OY + y)
    return round(lat, 10), round(lon, 10)


def point(x, y):
    lat, lon = geo(x, y)
    return {"lat": lat, "lon": lon}


def rect(x0, y0, x1, y1):
    return [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]


def polygon(ring):
    coords = [[geo(x, y)[1], geo(x, y)[0]] for x, y in ring]
    coords.append(coords[0])
    return {"type": "Feature", "properties": {},
            "geometry": {"type": "Polygon", "coordinates": [coords]}}


def scenario(name, description, start, end, obstacles):
    return {
        "name": name,
        "description": description,
        "utm_zone": 49,
        "start": point(*start),
        "end": point(*end),
        "obstacles": {"type": "FeatureCollection",
                      "features": [polygon(o) for o in obstacles]},
    }


SCENARIOS = [
    scenario("s1_corridor",
             "Two blocks leave a corridor; the direct line clips the lower block.",
             (0, 0), (60, 0),
             [rect(22, -14, 34, 4), rect(22, 18, 34, 30)]),
    scenario("s2_cluster",
             "Dense cluster of small blocks across the direct line.",
             (0, 0), (64, 6),
             [rect(18, -4, 24, 4), rect(30, 10, 36, 16), rect(36, -12, 42, -6),
              rect(44, 2, 48, 8)]),
    scenario("s3_open_field",
             "Open field with one block on the direct line.",
             (0, 0), (56, 0),
             [rect(24, -6, 32, 8)]),
    scenario("s4_wall_gap",
             "Wall across the route with an off-axis gap.",
             (0, 0), (60, 0),
             [rect(28, -30, 32, 4), rect(28, 18, 32, 40)]),
    scenario("s5_slalom",
             "Two staggered blocks force an S-shaped route.",
             (0, 0), (60, 0),
             [rect(18, -12, 24, 4), rect(38, -4, 44, 12)]),
    scenario("s6_diagonal",
             "Diagonal route through a field of scattered obstacles.",
             (0, 0), (48, 40),
             [rect(16, 10, 26, 18), rect(30, 26, 36, 32), rect(34, 6, 40, 12)]),
]

EMPTY = scenario("empty", "Obstacle-free field.", (0, 0), (60, 0), [])

# Small, fast instances used by the test suite.
FAST = {"cost": {"buffer_distance": 1.0},
        "qaoa": {"qubits": 6, "layers": 2, "steps": 20, "shots": 256},
        "bounds_margin": 8.0}

FIXTURES = [
    dict(scenario("small_empty", "Short obstacle-free hop.", (0, 0), (20, 0), []), **FAST),
    dict(scenario("small_wall", "Short hop past one block.", (0, 0), (20, 0),
                  [rect(9, -3, 11, 3)]), **FAST),
    dict(scenario("start_in_obstacle", "Start inside a block.", (0, 0), (20, 0),
                  [rect(-1, -1, 1, 1)]), **FAST),
    dict(scenario("enclosed_end", "End walled in on all sides.", (0, 0), (20, 0),
                  [rect(16, -4, 17, 4), rect(23, -4, 24, 4), rect(16, 4, 24, 5),
                   rect(16, -5, 24, -4)]), **FAST),
    dict(scenario("rrt_starved", "Block with an RRT iteration cap far too low.",
                  (0, 0), (20, 0), [rect(9, -3, 11, 3)]), **FAST,
         rrt={"max_iterations": 3}),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent
                                             / "scenarios"))
    parser.add_argument("--fixtures", default=str(pathlib.Path(__file__).resolve().parent.parent
                                                  / "tests" / "fixtures"))
    args = parser.parse_args()
    for directory, items in ((args.out, SCENARIOS + [EMPTY]), (args.fixtures, FIXTURES)):
        out = pathlib.Path(directory)
        out.mkdir(parents=True, exist_ok=True)
        for s in items:
            path = out / f"{s['name']}.json"
            path.write_text(json.dumps(s, indent=2) + "\n")
            print(path)


if __name__ == "__main__":
    main()
