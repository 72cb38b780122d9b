"""Walk through the inference engine: build each channel/window configuration,
run a forward pass, inspect the per-layer trace, and round-trip the weights
through the binary container format."""

import tempfile
from pathlib import Path

import numpy as np

from eegadapt import (
    build_config,
    footprint,
    forward,
    forward_trace,
    load_weights,
    random_weights,
    save_weights,
)

PRESETS = {"baseline": (64, 3.0), "c_one": (19, 2.0), "c_two": (8, 1.0)}


def main():
    rng = np.random.default_rng(0)

    print("== configurations and footprints ==")
    for name, (channels, window) in PRESETS.items():
        cfg = build_config(channels, window)
        fp = footprint(cfg)
        print(f"{name:9s} {channels:2d} ch x {window:.0f} s "
              f"-> feature_dim {cfg.feature_dim:3d}, "
              f"{fp.total_params} params, {fp.total_bytes} bytes, "
              f"{fp.total_macs} MACs")

    print("\n== forward pass (c_two) ==")
    cfg = build_config(8, 1.0)
    weights = random_weights(cfg, seed=7)
    epoch = rng.standard_normal((cfg.channels, cfg.samples)).astype(np.float32)
    features, probs = forward(weights, cfg, epoch)
    print(f"features: shape {features.shape}, dtype {features.dtype}")
    print(f"probabilities: {np.array2string(probs, precision=4)}"
          f" (sum {probs.sum():.6f})")

    print("\n== per-layer activation shapes ==")
    for layer, arr in forward_trace(weights, cfg, epoch).items():
        print(f"{layer:15s} {arr.shape}")

    print("\n== container round trip ==")
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "c_two.edaw"
        save_weights(weights, cfg, path)
        restored, cfg2 = load_weights(path)
        _, probs2 = forward(restored, cfg2, epoch)
        print(f"wrote {path.stat().st_size} bytes, "
              f"probabilities identical: {np.array_equal(probs, probs2)}")


if __name__ == "__main__":
    main()
