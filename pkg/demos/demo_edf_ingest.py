"""Parse EDF+ recordings, cut them into labeled epochs, and build an epoch
store on disk.  Uses a synthetic corpus so no download is needed."""

import tempfile
from pathlib import Path

from eegadapt.dataset import (
    extract_epochs,
    ingest_corpus,
    load_epoch_store,
    save_epoch_store,
)
from eegadapt.edf import parse_edf

from synthetic_data import make_corpus


def main():
    with tempfile.TemporaryDirectory() as tmp:
        corpus = make_corpus(Path(tmp) / "corpus")

        print("== one recording ==")
        rec = parse_edf(corpus / "S001R04.edf")
        seconds = rec.n_records * rec.record_duration
        print(f"{len(rec.labels)} signals @ {rec.sampling_rates[0]} Hz, "
              f"{seconds:.1f} s, start {rec.start_date} {rec.start_time}")
        for ann in rec.annotations[:5]:
            print(f"  +{ann.onset:5.2f}s  {ann.duration:.2f}s  {ann.text}")

        print("\n== epoch extraction (run 4, 1 s windows) ==")
        epochs, skipped = extract_epochs(rec, 4, window_seconds=1.0)
        for label in ("L", "R", "0", "F"):
            n = sum(1 for e in epochs if e.label == label)
            print(f"  class {label}: {n} epochs")
        print(f"  skipped (too short for window): {skipped}")

        print("\n== corpus ingest and epoch store ==")
        subjects, report = ingest_corpus(corpus, montage="8ch",
                                         window_seconds=1.0)
        store_dir = Path(tmp) / "store"
        save_epoch_store(store_dir, subjects, "8ch", 1.0, seed=0,
                         report=report)
        store = load_epoch_store(store_dir)
        print(f"subjects: {store.subjects}")
        data, labels = store.load_subject("S003")
        print(f"S003: array {data.shape} {data.dtype}, "
              f"labels {labels.tolist()}")


if __name__ == "__main__":
    main()
