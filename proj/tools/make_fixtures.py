#!/usr/bin/env python3
"""Regenerate the ERP test fixtures from scikit-image sample photos.

Each photo is mirrored side by side so the 0/2pi seam is continuous, then
resized to a W = 2H equirectangular raster and saved as 8-bit RGB PNG.
"""
import argparse
from pathlib import Path

import numpy as np
from PIL import Image
from skimage import data
from skimage.transform import resize

LARGE = ["astronaut", "coffee", "chelsea"]
SMALL = ["rocket", "immunohistochemistry", "astronaut", "coffee", "chelsea"]


def to_erp(name: str, height: int) -> np.ndarray:
    img = getattr(data, name)()
    if img.ndim == 2:
        img = np.stack([img] * 3, axis=-1)
    img = img[..., :3]
    wide = np.concatenate([img, img[:, ::-1]], axis=1)
    out = resize(wide, (height, 2 * height), order=3, anti_aliasing=True)
    return np.clip(np.rint(out * 255.0), 0, 255).astype(np.uint8)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "tests" / "fixtures"))
    args = ap.parse_args()
    out = Path(args.out)
    (out / "hr").mkdir(parents=True, exist_ok=True)
    (out / "small").mkdir(parents=True, exist_ok=True)
    for name in LARGE:
        Image.fromarray(to_erp(name, 512)).save(out / "hr" / f"{name}.png", optimize=True)
    for i, name in enumerate(SMALL):
        Image.fromarray(to_erp(name, 128)).save(out / "small" / f"{i:02d}_{name}.png", optimize=True)
    Image.fromarray(to_erp("astronaut", 64)).save(out / "tiny.png", optimize=True)


if __name__ == "__main__":
    main()
