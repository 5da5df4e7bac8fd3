#!/usr/bin/env python3
"""Builds the desk corpus: non-overlapping 256x256 crops of scikit-image's
bundled sample photographs, written as binary PPM (color) or PGM (gray)."""

import argparse
import os

import numpy as np
from skimage import data, io

SOURCES = [
    "astronaut.png", "chelsea.png", "coffee.png", "rocket.jpg",
    "motorcycle_left.png", "motorcycle_right.png", "ihc.png",
    "hubble_deep_field.jpg", "camera.png", "moon.png", "coins.png",
    "brick.png", "grass.png", "gravel.png", "cell.png",
]
CROP = 256


def write_pnm(path, img):
    h, w = img.shape[:2]
    magic = b"P6" if img.ndim == 3 else b"P5"
    with open(path, "wb") as f:
        f.write(b"%s\n%d %d\n255\n" % (magic, w, h))
        f.write(np.ascontiguousarray(img, dtype=np.uint8).tobytes())


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("out_dir")
    ap.add_argument("--count", type=int, default=50)
    args = ap.parse_args()
    os.makedirs(args.out_dir, exist_ok=True)
    root = os.path.dirname(data.__file__)
    n = 0
    for name in SOURCES:
        img = io.imread(os.path.join(root, name))
        if img.ndim == 3:
            img = img[:, :, :3]
        stem = os.path.splitext(name)[0]
        for y in range(0, img.shape[0] - CROP + 1, CROP):
            for x in range(0, img.shape[1] - CROP + 1, CROP):
                if n == args.count:
                    return
                crop = img[y:y + CROP, x:x + CROP]
                ext = "ppm" if crop.ndim == 3 else "pgm"
                write_pnm(os.path.join(args.out_dir, "%02d_%s_%d_%d.%s" % (n, stem, y, x, ext)), crop)
                n += 1


if __name__ == "__main__":
    main()
