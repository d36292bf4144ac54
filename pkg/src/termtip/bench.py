"""Timing harness: per-phase durations, descriptive statistics, and a
dictionary-vs-LLM comparison table.

Durations come from a monotonic clock. Simulated provider latency advances
a virtual clock instead of sleeping, so network-scale numbers reproduce in
milliseconds of real time; simulated runs are labeled as such.
"""

from __future__ import annotations

import logging
import statistics
import time
from contextlib import contextmanager
from dataclasses import dataclass

from .content import SourceDocument
from .errors import EmptyInput
from .matcher import TermResolver
from .pipeline import PipelineConfig, build_env, run_pipeline
from .providers import LlmProviderBase, StubLlmProvider

log = logging.getLogger(__name__)

PHASES = ("sanitize", "extract", "classify", "match", "resolve", "annotate")
PHASE_TOTAL = "total"

METHOD_DICTIONARY = "dictionary"
METHOD_LLM = "llm"
METHOD_MANUAL = "manual"


@dataclass(frozen=True)
class TimingSample:
    phase: str
    duration_ms: float


class VirtualClock:
    """Monotonic clock whose sleep_ms advances virtual time without waiting."""

    def __init__(self) -> None:
        self._offset_ms = 0.0

    def now_ms(self) -> float:
        return time.perf_counter() * 1000.0 + self._offset_ms

    def sleep_ms(self, duration_ms: float) -> None:
        self._offset_ms += duration_ms


class FakeClock:
    """Deterministic test clock: each reading advances by a fixed step."""

    def __init__(self, step_ms: float = 5.0):
        self.t = 0.0
        self.step_ms = step_ms

    def now_ms(self) -> float:
        value = self.t
        self.t += self.step_ms
        return value

    def sleep_ms(self, duration_ms: float) -> None:
        self.t += duration_ms


class PhaseTimer:
    """Collects (phase, duration) samples via paired clock readings."""

    def __init__(self, clock=None):
        self.clock = clock if clock is not None else VirtualClock()
        self.samples: list[TimingSample] = []

    @contextmanager
    def phase(self, name: str):
        start = self.clock.now_ms()
        try:
            yield
        finally:
            self.samples.append(TimingSample(name, self.clock.now_ms() - start))


@dataclass(frozen=True)
class Stats:
    n: int
    mean: float
    median: float
    sd: float
    min: float
    max: float
    range: float


def summarize(samples) -> Stats:
    """Descriptive statistics with the sample (n-1) standard deviation;
    sd is 0 for a single observation."""
    values = list(samples)
    if not values:
        raise EmptyInput("cannot summarize an empty sample list")
    sd = statistics.stdev(values) if len(values) > 1 else 0.0
    lo, hi = min(values), max(values)
    return Stats(
        n=len(values),
        mean=statistics.fmean(values),
        median=statistics.median(values),
        sd=sd,
        min=lo,
        max=hi,
        range=hi - lo,
    )


# Stopwatch-measured baseline for a single manual search-engine lookup of
# one acronym (n=25); shipped as fixed reference constants for the
# comparison table.
MANUAL_SEARCH_BASELINE_MS = Stats(
    n=25, mean=17200.0, median=16000.0, sd=4717.0,
    min=12000.0, max=34000.0, range=22000.0,
)


@dataclass(frozen=True)
class ComparisonReport:
    dictionary: Stats
    llm: Stats
    manual: Stats | None
    speedup_ratio: float  # llm.mean / dictionary.mean
    simulated: bool = False


def compare(dictionary_stats: Stats, llm_stats: Stats,
            manual_stats: Stats | None = None,
            simulated: bool = False) -> ComparisonReport:
    return ComparisonReport(
        dictionary=dictionary_stats,
        llm=llm_stats,
        manual=manual_stats,
        speedup_ratio=llm_stats.mean / dictionary_stats.mean,
        simulated=simulated,
    )


def report_rows(report: ComparisonReport) -> list[dict]:
    """Machine-readable rows, one per method."""
    rows = []
    for method, stats in ((METHOD_DICTIONARY, report.dictionary),
                          (METHOD_LLM, report.llm),
                          (METHOD_MANUAL, report.manual)):
        if stats is None:
            continue
        rows.append({
            "method": method,
            "n": stats.n,
            "mean_ms": stats.mean,
            "median_ms": stats.median,
            "sd_ms": stats.sd,
            "min_ms": stats.min,
            "max_ms": stats.max,
        })
    return rows


def render_table(report: ComparisonReport) -> str:
    header = ("method", "n", "mean_ms", "median_ms", "sd_ms", "min_ms", "max_ms")
    rows = [[
        row["method"], str(row["n"]),
        f"{row['mean_ms']:.1f}", f"{row['median_ms']:.1f}", f"{row['sd_ms']:.1f}",
        f"{row['min_ms']:.1f}", f"{row['max_ms']:.1f}",
    ] for row in report_rows(report)]
    widths = [max(len(header[i]), *(len(r[i]) for r in rows)) for i in range(len(header))]
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(header))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row))
              for row in rows]
    lines.append("")
    label = " (simulated latency)" if report.simulated else ""
    lines.append(f"speedup llm/dictionary: {report.speedup_ratio:.2f}x{label}")
    return "\n".join(lines)


class _DelayedGlossary:
    """Adds a one-shot virtual delay before the first definition fetch,
    modeling one network round-trip per page (clearly simulated)."""

    def __init__(self, inner, delay_ms: float, clock):
        self._inner = inner
        self._delay_ms = delay_ms
        self._clock = clock

    def _tick(self) -> None:
        if self._delay_ms:
            self._clock.sleep_ms(self._delay_ms)
            self._delay_ms = 0.0

    def list_keys(self):
        return self._inner.list_keys()

    def get_entry(self, key):
        self._tick()
        return self._inner.get_entry(key)

    def search(self, query, limit=20):
        return self._inner.search(query, limit)

    def upsert_cached(self, entry):
        return self._inner.upsert_cached(entry)


class _DelayedLlm(LlmProviderBase):
    """Same one-shot virtual delay for the LLM path."""

    def __init__(self, inner: LlmProviderBase, delay_ms: float, clock):
        super().__init__()
        self._inner = inner
        self._delay_ms = delay_ms
        self._clock = clock

    def complete(self, prompt: str) -> str:
        if self._delay_ms:
            self._clock.sleep_ms(self._delay_ms)
            self._delay_ms = 0.0
        return self._inner.complete(prompt)


def time_pipeline(doc: SourceDocument, config: PipelineConfig, runs: int,
                  clock=None, warm: bool = False) -> list[TimingSample]:
    """Run the pipeline ``runs`` times and collect per-phase + total samples.

    State is cold per run (fresh environment and resolver) unless ``warm``,
    which shares one environment and a memoizing resolver across runs.
    """
    if runs < 1:
        raise ValueError("runs must be >= 1")
    clock = clock if clock is not None else VirtualClock()
    samples: list[TimingSample] = []
    shared_env = build_env(config) if warm else None
    shared_resolver = shared_env.make_resolver(keep_memo=True) if warm else None
    for run in range(runs):
        env = shared_env if warm else build_env(config)
        resolver = shared_resolver if warm else None
        timer = PhaseTimer(clock)
        try:
            run_pipeline(doc, env, timer=timer, resolver=resolver)
        except Exception:
            log.error("pipeline failed on bench run %d/%d", run + 1, runs)
            raise
        samples.extend(timer.samples)
    return samples


def totals(samples: list[TimingSample]) -> list[float]:
    return [s.duration_ms for s in samples if s.phase == PHASE_TOTAL]


def by_phase(samples: list[TimingSample]) -> dict[str, list[float]]:
    grouped: dict[str, list[float]] = {}
    for sample in samples:
        grouped.setdefault(sample.phase, []).append(sample.duration_ms)
    return grouped


def run_comparison(doc: SourceDocument, config: PipelineConfig, runs: int,
                   simulate_ms: dict[str, float] | None = None,
                   warm: bool = False, clock=None,
                   include_manual: bool = True) -> ComparisonReport:
    """Benchmark the dictionary path and the provider path on one document.

    The LLM method resolves every term through the definition provider
    (stubbed with the dictionary's own content so resolution succeeds
    offline). ``simulate_ms`` maps method name to an injected per-run
    latency applied on the first definition fetch.
    """
    simulate_ms = simulate_ms or {}
    clock = clock if clock is not None else VirtualClock()

    dict_samples = _run_method(
        doc, config, runs, clock, warm,
        glossary_delay=simulate_ms.get(METHOD_DICTIONARY, 0.0),
        provider_only=False,
    )
    llm_samples = _run_method(
        doc, config, runs, clock, warm,
        llm_delay=simulate_ms.get(METHOD_LLM, 0.0),
        provider_only=True,
    )
    return compare(
        summarize(totals(dict_samples)),
        summarize(totals(llm_samples)),
        MANUAL_SEARCH_BASELINE_MS if include_manual else None,
        simulated=bool(simulate_ms),
    )


def _run_method(doc, config, runs, clock, warm, glossary_delay=0.0,
                llm_delay=0.0, provider_only=False) -> list[TimingSample]:
    def build_run_state():
        env = build_env(config)
        glossary = env.glossary
        llm = _definition_stub_from(env.glossary) if provider_only else env.llm
        if glossary_delay:
            glossary = _DelayedGlossary(glossary, glossary_delay, clock)
        if llm_delay:
            llm = _DelayedLlm(llm, llm_delay, clock)
        resolver = TermResolver(glossary, llm, cache_enabled=False,
                                keep_memo=warm, provider_only=provider_only)
        return env, resolver

    samples: list[TimingSample] = []
    state = build_run_state() if warm else None
    for run in range(runs):
        env, resolver = state if warm else build_run_state()
        timer = PhaseTimer(clock)
        try:
            run_pipeline(doc, env, timer=timer, resolver=resolver)
        except Exception:
            log.error("bench run %d/%d failed", run + 1, runs)
            raise
        samples.extend(timer.samples)
    return samples


def _definition_stub_from(glossary) -> LlmProviderBase:
    """A definition provider backed by the dictionary's own entries, so the
    provider path resolves the same terms the dictionary path does."""
    table = {e.key: (e.expansion, e.definition)
             for e in glossary.search("", limit=1_000_000)}
    return StubLlmProvider(definitions=table)
