"""Shared helper for the demo scripts: writes a small synthetic corpus of
Physionet-style motor imagery task runs so every demo is runnable offline."""

import numpy as np

from eegadapt.dataset import MONTAGES
from eegadapt.edf import EdfAnnotation, write_edf


def write_run(path, run, fs=160, channels=None, n_task_events=6,
              event_seconds=1.25, seed=0):
    """Write one synthetic task run as EDF+ and return its path.

    The annotation track alternates T0 rest with task cues: T1/T2 on
    left/right runs (4, 8, 12), T2 only on fists/feet runs (6, 10, 14).
    """
    rng = np.random.default_rng(seed)
    channels = channels if channels is not None else MONTAGES["8ch"]
    lr_run = run in (4, 8, 12)
    events = []
    t = 0.0
    for i in range(n_task_events):
        events.append(EdfAnnotation(t, event_seconds, "T0"))
        t += event_seconds
        code = ("T1" if i % 2 == 0 else "T2") if lr_run else "T2"
        events.append(EdfAnnotation(t, event_seconds, code))
        t += event_seconds
    events.append(EdfAnnotation(t, event_seconds, "T0"))
    t += event_seconds
    n = int(np.ceil(t)) * fs
    signals = {f"{ch}..": rng.integers(-500, 500, size=n).astype(np.int16)
               for ch in channels}
    write_edf(path, signals, fs, annotations=events,
              phys_min=-1000.0, phys_max=1000.0)
    return path


def make_corpus(root, subjects=("S001", "S002", "S003", "S004"), runs=(4, 6)):
    """Write one file per subject and run under `root`."""
    root.mkdir(parents=True, exist_ok=True)
    for s, sid in enumerate(subjects):
        for run in runs:
            write_run(root / f"{sid}R{run:02d}.edf", run, seed=100 * s + run)
    return root
