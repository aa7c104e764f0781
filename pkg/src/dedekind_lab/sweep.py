"""Parallel parameter sweeps with deterministic, worker-count-independent output."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from itertools import combinations

from . import render
from .geometry import min_ratio, verify_lemmas
from .highdim import log_convexity_check, ratio_d, ratio_d_powered

CONJECTURE_SQ = Fraction(3, 4)
WORKERS_ENV = "DEDEKIND_LAB_WORKERS"
MODES = ("r2", "r5", "logconvex", "lemmas")


@dataclass(frozen=True)
class SweepConfig:
    mode: str = "r2"
    a_lo: int = 3
    a_hi: int = 35
    workers: int = 1
    exhaustive: int = 0  # r2: also scan b, c <= K a
    r_max: int = 5  # logconvex
    b_max: int = 12  # r5: largest subdivision count considered
    precision: int = 4

    @classmethod
    def resolve_workers(cls, flag: int | None) -> int:
        env = os.environ.get(WORKERS_ENV)
        if env:
            return max(1, int(env))
        return max(1, flag or 1)


@dataclass
class SweepResult:
    config: SweepConfig
    header: tuple
    rows: list
    summary: dict = field(default_factory=dict)
    counterexample: bool = False


def _r2_item(args):
    a, exhaustive = args
    m = min_ratio(a, exhaustive=exhaustive)
    return a, m.value.squared, m.witness


def _r5_item(args):
    a, b_max = args
    best = None
    for bs in combinations(range(2, min(a - 1, b_max) + 1), 5):
        key = ratio_d_powered(a, bs)
        if best is None or key < best[0]:
            best = (key, bs)
    return a, best


def _logconvex_item(args):
    a, r_max = args
    checked = degenerate = 0
    violations = []
    for b in range(2, a + 1):
        rep = log_convexity_check(a, b, r_max)
        if rep.degenerate:
            degenerate += 1
            continue
        checked += 1
        if not rep.ok:
            violations.append(b)
    return a, checked, degenerate, violations


def _pmap(fn, items, workers):
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=1))


def run_sweep(cfg: SweepConfig) -> SweepResult:
    a_values = list(range(cfg.a_lo, cfg.a_hi + 1))
    if cfg.mode == "r2":
        out = _pmap(_r2_item, [(a, cfg.exhaustive) for a in a_values if a >= 3], cfg.workers)
        rows, best = [], None
        for a, sq, (b, c) in out:
            rows.append((a, sq.numerator, sq.denominator, render.fixed(_sqrt(sq), cfg.precision), b, c))
            if best is None or sq < best[0]:
                best = (sq, a, b, c)
        res = SweepResult(
            cfg,
            ("a", "min_ratio_sq_num", "min_ratio_sq_den", "approx", "witness_b", "witness_c"),
            rows,
        )
        if best:
            sq, a, b, c = best
            res.summary = {
                "min_sq": render.exact(sq),
                "approx": render.fixed(_sqrt(sq), cfg.precision),
                "witness": f"({a};{b},{c})",
            }
            res.counterexample = sq < CONJECTURE_SQ
        return res
    if cfg.mode == "r5":
        out = _pmap(_r5_item, [(a, cfg.b_max) for a in a_values], cfg.workers)
        rows, best = [], None
        for a, item in out:
            if item is None:
                continue
            key, bs = item
            r = ratio_d(a, bs)
            rows.append((a, " ".join(map(str, bs)), render.fixed(float(r), cfg.precision)))
            if best is None or key < best[0]:
                best = (key, a, bs, r)
        res = SweepResult(cfg, ("a", "b", "min_R5"), rows)
        if best:
            _, a, bs, r = best
            res.summary = {
                "min_R5": render.fixed(float(r), cfg.precision),
                "witness": f"({a};{','.join(map(str, bs))})",
            }
        return res
    if cfg.mode == "logconvex":
        out = _pmap(_logconvex_item, [(a, cfg.r_max) for a in a_values], cfg.workers)
        rows = [(a, n, g, " ".join(map(str, v))) for a, n, g, v in out]
        total = sum(len(v) for *_, v in out)
        res = SweepResult(cfg, ("a", "checked", "degenerate", "violating_b"), rows)
        res.summary = {
            "violations": total,
            "checked": sum(n for _, n, _, _ in out),
            "degenerate": sum(g for _, _, g, _ in out),
        }
        return res
    if cfg.mode == "lemmas":
        rep = verify_lemmas(max(cfg.a_hi, 4))
        rows = [(name, "pass" if ok else "fail", len(rep.counterexamples[name])) for name, ok in rep.passed.items()]
        res = SweepResult(cfg, ("lemma", "status", "counterexamples"), rows)
        res.summary = {k: str(v) for k, v in rep.findings.items()}
        res.summary["all_passed"] = rep.ok()
        return res
    raise ValueError(f"unknown sweep mode {cfg.mode!r}")


def _sqrt(sq: Fraction) -> Fraction:
    with localcontext() as ctx:
        ctx.prec = 40
        return Fraction((Decimal(sq.numerator) / Decimal(sq.denominator)).sqrt())
