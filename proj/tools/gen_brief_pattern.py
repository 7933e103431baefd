#!/usr/bin/env python3
"""Regenerates src/features/brief_pattern.inc.

256 point pairs drawn from an isotropic Gaussian (sigma = 31/5) with a fixed
seed. Points outside the radius-15 disc are redrawn so that any rotation of
the pattern stays inside the 31x31 patch.
"""
import random
import sys

SEED = 0x5EED_0B1F
SIGMA = 31.0 / 5.0
RADIUS = 15
COUNT = 256


def draw_point(rng):
    while True:
        x = round(rng.gauss(0.0, SIGMA))
        y = round(rng.gauss(0.0, SIGMA))
        if x * x + y * y <= RADIUS * RADIUS:
            return x, y


def main():
    rng = random.Random(SEED)
    pairs = []
    while len(pairs) < COUNT:
        a = draw_point(rng)
        b = draw_point(rng)
        if a != b:
            pairs.append((a[0], a[1], b[0], b[1]))
    out = sys.stdout
    out.write("// Generated by tools/gen_brief_pattern.py. Do not edit.\n")
    out.write("// {x1, y1, x2, y2} per test; all points lie within radius 15.\n")
    for p in pairs:
        out.write("{%d, %d, %d, %d},\n" % p)


if __name__ == "__main__":
    main()
