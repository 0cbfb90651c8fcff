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
"""Writes UTM reference values computed with pyproj as a C++ include."""

import pathlib
import random

from pyproj import Transformer


def main():
    rng = random.Random(20260101)
    rows = []
    fixed = [(23.13, 113.26, 49), (23.1291, 113.2644, 49), (0.0, 111.0, 49),
             (-33.8688, 151.2093, 56), (51.5074, -0.1278, 30), (40.7128, -74.0060, 18),
             (-0.0001, 117.0, 50), (79.9, 3.0, 31), (-79.9, -177.0, 1), (64.1, 0.0, 31)]
    for lat, lon, zone in fixed:
        rows.append((lat, lon, zone))
    for _ in range(40):
        zone = rng.randint(1, 60)
        cm = -183 + 6 * zone
        rows.append((rng.uniform(-80, 84), cm + rng.uniform(-3, 3), zone))
    out = []
    for lat, lon, zone in rows:
        south = lat < 0
        epsg = (32700 if south else 32600) + zone
        t = Transformer.from_crs("EPSG:4326", f"EPSG:{epsg}", always_xy=True)
        e, n = t.transform(lon, lat)
        out.append(f"    {{{lat!r}, {lon!r}, {zone}, {'true' if south else 'false'}, {e!r}, {n!r}}},")
    path = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "utm_reference.inc"
    path.write_text("// Generated by scripts/gen_utm_fixtures.py.\n"
                    "// lat, lon, zone, south, easting, northing\n" + "\n".join(out) + "\n")
    print(path)


if __name__ == "__main__":
    main()
