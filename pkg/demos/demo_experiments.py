"""End-to-end experiment harness: ingest a corpus, plan splits, run the
online-adaptation experiment, and benchmark forward vs classifier update."""

import tempfile
from pathlib import Path

from eegadapt import build_config, random_weights, save_weights
from eegadapt.dataset import (
    ingest_corpus,
    load_epoch_store,
    make_splits,
    save_epoch_store,
)
from eegadapt.harness import emit_report, run_bench, run_online_experiment

from synthetic_data import make_corpus


def main():
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        corpus = make_corpus(tmp / "corpus")
        subjects, report = ingest_corpus(corpus, montage="8ch",
                                         window_seconds=1.0)
        store_dir = tmp / "store"
        save_epoch_store(store_dir, subjects, "8ch", 1.0, seed=0,
                         report=report)
        store = load_epoch_store(store_dir)

        cfg = build_config(8, 1.0)
        container = tmp / "pretrained.edaw"
        save_weights(random_weights(cfg, seed=5), cfg, container)

        print("== online adaptation experiment ==")
        plan = make_splits(store.catalog(), "online", seed=9, n_offline=2)
        result = run_online_experiment("c_two", container, store, plan)
        for sid, row in sorted(result["per_subject"].items()):
            print(f"  {sid}: pre {row['pre']:.2f} -> post {row['post']:.2f} "
                  f"(gain {row['gain']:+.2f})")
        print(f"subject-averaged gain: {result['gain']:+.3f}")

        print("\n== bench (host timings; update = classifier-only) ==")
        for cid in ("baseline", "c_one", "c_two"):
            bench = run_bench(cid, repetitions=50, seed=0)
            print(f"  {cid:9s} forward p50 {bench['forward_p50_ms']:8.3f} ms, "
                  f"update p50 {bench['update_p50_ms']:8.4f} ms")

        out = tmp / "online.json"
        emit_report(result, out, "json")
        print(f"\nreport written: {out.name}, {out.stat().st_size} bytes")


if __name__ == "__main__":
    main()
