"""Growth tables for the Gamma family on generated l-claw-free instances."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from lclaw.family import count_cap, gamma
from lclaw.instances import gen_lclaw_instance

THREADS_ENV = "LCLAW_THREADS"


@dataclass
class BenchConfig:
    l: int = 2
    sizes: tuple[int, ...] = (10, 14, 18, 22)
    trials: int = 3
    seed: int = 0
    density: float = 0.5
    workers: int | None = None  # None: read LCLAW_THREADS, default 1


@dataclass
class BenchRow:
    n: int
    trials: int
    family_max: int
    family_mean: float
    embeddings_max: int
    embeddings_mean: float
    cap_ok: bool
    seconds_mean: float


def trial_seed(seed: int, n: int, trial: int) -> int:
    return seed * 1_000_003 + n * 1_009 + trial


def _trial(args: tuple[int, int, int, float]) -> tuple[int, int, bool, float]:
    seed, n, l, density = args
    inst = gen_lclaw_instance(seed, n, l, density)
    t0 = time.perf_counter()
    fam = gamma(inst.graph, l)
    dt = time.perf_counter() - t0
    return len(fam), fam.stats.embeddings, len(fam) <= count_cap(inst.graph, fam), dt


def worker_count(cfg: BenchConfig) -> int:
    if cfg.workers is not None:
        return max(1, cfg.workers)
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def run_bench(cfg: BenchConfig) -> list[BenchRow]:
    jobs = [
        (trial_seed(cfg.seed, n, t), n, cfg.l, cfg.density)
        for n in cfg.sizes
        for t in range(cfg.trials)
    ]
    workers = worker_count(cfg)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_trial, jobs))
    else:
        results = [_trial(j) for j in jobs]
    rows = []
    for i, n in enumerate(cfg.sizes):
        chunk = results[i * cfg.trials:(i + 1) * cfg.trials]
        sizes = [r[0] for r in chunk]
        embs = [r[1] for r in chunk]
        rows.append(BenchRow(
            n=n,
            trials=len(chunk),
            family_max=max(sizes),
            family_mean=sum(sizes) / len(sizes),
            embeddings_max=max(embs),
            embeddings_mean=sum(embs) / len(embs),
            cap_ok=all(r[2] for r in chunk),
            seconds_mean=sum(r[3] for r in chunk) / len(chunk),
        ))
    return rows


def format_table(rows: list[BenchRow], timing: bool = True) -> str:
    head = ["n", "trials", "family_max", "family_mean", "embeddings_max", "embeddings_mean", "cap_ok"]
    if timing:
        head.append("seconds_mean")
    body = []
    for r in rows:
        cells = [
            str(r.n), str(r.trials), str(r.family_max), f"{r.family_mean:.1f}",
            str(r.embeddings_max), f"{r.embeddings_mean:.1f}", "yes" if r.cap_ok else "NO",
        ]
        if timing:
            cells.append(f"{r.seconds_mean:.4f}")
        body.append(cells)
    widths = [max(len(h), *(len(c[i]) for c in body)) if body else len(h) for i, h in enumerate(head)]
    fmt = lambda cells: "  ".join(c.rjust(wd) for c, wd in zip(cells, widths))  # noqa: E731
    return "\n".join([fmt(head), *map(fmt, body)])
