#!/usr/bin/env python3
"""Prepare MNIST IDX files for the simulator.

Looks for the four standard IDX files in the target directory (default ./data,
override with LFGADMM_DATA_DIR or --dir). If they are missing, builds them from
the npm `mnist` package, which ships 10,000 real MNIST digits as JSON with
pixel values stored as p/255 rounded to three decimals (byte-exact to invert).
The result is a stratified 7,500 / 2,500 train/test split written in the
official IDX layout, so the C++ loader treats it exactly like an official
distribution. If you have the official 60k/10k files, just drop them in the
data directory instead and this script is a no-op.
"""

import argparse
import json
import os
import random
import shutil
import struct
import subprocess
import sys
import tempfile

FILES = [
    "train-images-idx3-ubyte",
    "train-labels-idx1-ubyte",
    "t10k-images-idx3-ubyte",
    "t10k-labels-idx1-ubyte",
]

TEST_FRACTION = 0.25
SPLIT_SEED = 12345


def have_all(data_dir):
    return all(os.path.isfile(os.path.join(data_dir, f)) for f in FILES)


def npm_fetch_digits(tmp):
    subprocess.run(
        ["npm", "install", "--prefix", tmp, "--no-save", "--no-audit",
         "--no-fund", "mnist"],
        check=True,
        stdout=subprocess.DEVNULL,
    )
    digits_dir = os.path.join(tmp, "node_modules", "mnist", "src", "digits")
    per_digit = []
    for d in range(10):
        with open(os.path.join(digits_dir, f"{d}.json")) as f:
            flat = json.load(f)["data"]
        if len(flat) % 784 != 0:
            raise RuntimeError(f"digit {d}: unexpected payload length {len(flat)}")
        images = []
        for i in range(0, len(flat), 784):
            images.append(bytes(round(v * 255) for v in flat[i:i + 784]))
        per_digit.append(images)
    return per_digit


def write_idx(images_path, labels_path, samples):
    with open(images_path, "wb") as f:
        f.write(struct.pack(">IIII", 0x803, len(samples), 28, 28))
        for img, _ in samples:
            f.write(img)
    with open(labels_path, "wb") as f:
        f.write(struct.pack(">II", 0x801, len(samples)))
        f.write(bytes(lbl for _, lbl in samples))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dir", default=os.environ.get("LFGADMM_DATA_DIR", "data"))
    args = ap.parse_args()

    data_dir = args.dir
    os.makedirs(data_dir, exist_ok=True)
    if have_all(data_dir):
        print(f"MNIST IDX files already present in {data_dir}")
        return 0
    if shutil.which("npm") is None:
        print("npm not found and IDX files missing; place the official MNIST "
              f"files in {data_dir} instead", file=sys.stderr)
        return 1

    with tempfile.TemporaryDirectory() as tmp:
        per_digit = npm_fetch_digits(tmp)

    rng = random.Random(SPLIT_SEED)
    train, test = [], []
    for d, images in enumerate(per_digit):
        idx = list(range(len(images)))
        rng.shuffle(idx)
        n_test = int(len(images) * TEST_FRACTION)
        test.extend((images[i], d) for i in idx[:n_test])
        train.extend((images[i], d) for i in idx[n_test:])
    rng.shuffle(train)
    rng.shuffle(test)

    write_idx(os.path.join(data_dir, FILES[0]), os.path.join(data_dir, FILES[1]), train)
    write_idx(os.path.join(data_dir, FILES[2]), os.path.join(data_dir, FILES[3]), test)
    print(f"wrote {len(train)} train / {len(test)} test samples to {data_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
