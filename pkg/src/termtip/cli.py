"""Command-line entry point: annotate, classify, serve, bench, approve.

Stdout carries data (annotated HTML, verdict lines, tables); stderr carries
diagnostics. Exit codes: 1 input/parse failure, 2 glossary unreachable or
bind failure, 3 invalid configuration.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from . import bench as benchmod
from .content import SourceDocument
from .errors import (
    ConfigError,
    EmptyDocument,
    GlossaryUnreachable,
    NoContent,
    ParseFailure,
    StoreUnavailable,
)
from .glossary import GlossaryStore
from .pipeline import MODE_LIVE, MODE_OFFLINE, PipelineConfig, build_env, run_pipeline

EXIT_PARSE = 1
EXIT_GLOSSARY = 2
EXIT_CONFIG = 3

_CONFIG_KEYS = {
    "provider_mode": str,
    "store": str,
    "glossary_url": str,
    "noise_selectors": list,
    "excluded_ancestors": list,
    "annotate_every_occurrence": bool,
    "cache_enabled": bool,
    "truncate_chars": int,
    "tech_prefixes": list,
    "seed_keywords": list,
    "confidence_threshold": float,
    "taxonomy_endpoint": str,
    "llm_endpoint": str,
}


def load_config(path: Path | None, overrides: dict) -> PipelineConfig:
    """Build a PipelineConfig from an optional TOML file plus CLI overrides."""
    values: dict = {}
    if path is not None:
        try:
            data = tomllib.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, tomllib.TOMLDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        for key, value in data.items():
            if key not in _CONFIG_KEYS:
                raise ConfigError(f"unknown config key {key!r}")
            values[key] = value
    values.update({k: v for k, v in overrides.items() if v is not None})

    kwargs: dict = {}
    if "provider_mode" in values:
        kwargs["provider_mode"] = values["provider_mode"]
    if "store" in values:
        kwargs["store_path"] = values["store"]
    if "glossary_url" in values:
        kwargs["glossary_url"] = values["glossary_url"]
    if "noise_selectors" in values:
        kwargs["noise_selectors"] = tuple(values["noise_selectors"])
    if "excluded_ancestors" in values:
        kwargs["excluded_ancestors"] = tuple(values["excluded_ancestors"])
    for key in ("annotate_every_occurrence", "cache_enabled", "truncate_chars",
                "confidence_threshold", "taxonomy_endpoint", "llm_endpoint"):
        if key in values:
            kwargs[key] = values[key]
    if "tech_prefixes" in values:
        kwargs["tech_prefixes"] = tuple(values["tech_prefixes"])
    if "seed_keywords" in values:
        kwargs["seed_keywords"] = frozenset(values["seed_keywords"])
    config = PipelineConfig(**kwargs)
    config.validate()
    return config


def _read_input(source: str) -> bytes:
    if source == "-":
        return sys.stdin.buffer.read()
    path = Path(source)
    try:
        return path.read_bytes()
    except OSError as exc:
        raise ParseFailure(f"cannot read {source}: {exc}") from exc


def _decode(raw: bytes, source: str) -> str:
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseFailure(f"{source} is not valid UTF-8: {exc}") from exc


def _build_config(ctx: click.Context) -> PipelineConfig:
    try:
        return load_config(ctx.obj["config_path"], ctx.obj["overrides"])
    except ConfigError as exc:
        click.echo(f"config error: {exc}", err=True)
        sys.exit(EXIT_CONFIG)


@click.group()
@click.option("--config", "config_path", type=click.Path(path_type=Path),
              default=None, help="TOML config file.")
@click.option("--offline/--live", "offline", default=None,
              help="Provider mode (offline stubs are the default).")
@click.option("--glossary-url", default=None, help="Remote glossary service URL.")
@click.option("--store", default=None,
              type=click.Path(path_type=Path),
              help="Local glossary JSONL path (created from seeds if missing).")
@click.option("--no-cache", is_flag=True, default=False,
              help="Disable write-back of provider definitions.")
@click.pass_context
def main(ctx, config_path, offline, glossary_url, store, no_cache):
    """Acronym tooltip engine: annotate pages, classify, serve the glossary,
    and benchmark the pipeline."""
    overrides: dict = {}
    if offline is not None:
        overrides["provider_mode"] = MODE_OFFLINE if offline else MODE_LIVE
    if glossary_url is not None:
        overrides["glossary_url"] = glossary_url
    if store is not None:
        overrides["store"] = str(store)
    if no_cache:
        overrides["cache_enabled"] = False
    ctx.ensure_object(dict)
    ctx.obj["config_path"] = config_path
    ctx.obj["overrides"] = overrides


@main.command()
@click.argument("source")
@click.pass_context
def annotate(ctx, source):
    """Annotate HTML from SOURCE (file path or - for stdin) onto stdout."""
    config = _build_config(ctx)
    try:
        raw = _read_input(source)
        html = _decode(raw, source)
        doc = SourceDocument(locator=source, html=html)
        env = build_env(config)
        result = run_pipeline(doc, env)
    except (ParseFailure, EmptyDocument, NoContent) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    except (GlossaryUnreachable, StoreUnavailable) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_GLOSSARY)

    if result.skipped:
        sys.stdout.buffer.write(raw)  # byte-identical passthrough
        sys.stdout.flush()
        click.echo(f"skipped: not tech ({result.classification.decided_by})",
                   err=True)
        return
    sys.stdout.write(result.annotated.tree.serialize())
    sys.stdout.flush()
    terms = result.annotated.annotations
    occurrences = result.annotated.total_wrapped
    detail = ", ".join(f"{key} x{count}" for key, count in terms)
    click.echo(f"annotated {occurrences} occurrence(s) of {len(terms)} term(s)"
               + (f": {detail}" if detail else ""), err=True)


@main.command()
@click.argument("source")
@click.pass_context
def classify(ctx, source):
    """Print the tech verdict for SOURCE as "tech|non-tech <decided_by>"."""
    config = _build_config(ctx)
    try:
        html = _decode(_read_input(source), source)
        doc = SourceDocument(locator=source, html=html)
        env = build_env(config)
        from .content import extract_main_content, sanitize
        tree = sanitize(doc, env.selectors)
        article = extract_main_content(tree)
        verdict = env.classify_text(article.clean_text)
    except (ParseFailure, EmptyDocument, NoContent) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    label = "tech" if verdict.is_tech else "non-tech"
    click.echo(f"{label} {verdict.decided_by}")


@main.command()
@click.option("--port", default=8756, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.pass_context
def serve(ctx, port, host):
    """Run the glossary HTTP service until interrupted."""
    import uvicorn

    from .service import create_app

    config = _build_config(ctx)
    try:
        if config.store_path is not None:
            path = Path(config.store_path)
            store = GlossaryStore.load(path) if path.exists() else GlossaryStore.seeded(path)
            store.save()
        else:
            store = GlossaryStore.seeded()
            click.echo("no --store given: serving seeds in memory, writes are "
                       "not persisted", err=True)
    except StoreUnavailable as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_GLOSSARY)
    app = create_app(store)
    try:
        uvicorn.run(app, host=host, port=port, log_level="warning")
    except SystemExit as exc:
        if exc.code:
            click.echo(f"error: could not serve on {host}:{port}", err=True)
            sys.exit(EXIT_GLOSSARY)
        raise


def _parse_simulate(value: str | None) -> dict[str, float]:
    if not value:
        return {}
    out: dict[str, float] = {}
    for part in value.split(","):
        name, _, amount = part.partition("=")
        name = name.strip()
        if name not in (benchmod.METHOD_DICTIONARY, benchmod.METHOD_LLM):
            raise click.UsageError(f"unknown simulate method {name!r}")
        try:
            out[name] = float(amount)
        except ValueError:
            raise click.UsageError(f"bad latency value in {part!r}")
    return out


@main.command()
@click.argument("source")
@click.option("--runs", default=10, show_default=True)
@click.option("--simulate-latency", "simulate", default=None,
              help="Injected per-run latency, e.g. dictionary=2135,llm=16429 (ms).")
@click.option("--warm", is_flag=True, default=False,
              help="Reuse resolver state across runs instead of cold state.")
@click.option("--json", "as_json", is_flag=True, default=False)
@click.pass_context
def bench(ctx, source, runs, simulate, warm, as_json):
    """Time the pipeline on SOURCE and compare definition-delivery methods."""
    if runs < 1:
        raise click.UsageError("--runs must be >= 1")
    config = _build_config(ctx)
    simulate_ms = _parse_simulate(simulate)
    try:
        html = _decode(_read_input(source), source)
        doc = SourceDocument(locator=source, html=html)
        report = benchmod.run_comparison(doc, config, runs,
                                         simulate_ms=simulate_ms, warm=warm)
    except (ParseFailure, EmptyDocument, NoContent) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    except (GlossaryUnreachable, StoreUnavailable) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_GLOSSARY)
    if as_json:
        payload = {"rows": benchmod.report_rows(report),
                   "speedup_ratio": report.speedup_ratio,
                   "simulated": report.simulated,
                   "runs": runs}
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(benchmod.render_table(report))


@main.command()
@click.argument("pending_id", type=int)
@click.pass_context
def approve(ctx, pending_id):
    """Approve a pending contribution in the local store (requires --store)."""
    config = _build_config(ctx)
    if config.store_path is None:
        click.echo("error: approve needs --store", err=True)
        sys.exit(EXIT_CONFIG)
    try:
        store = GlossaryStore.load(config.store_path)
        entry = store.approve_contribution(pending_id)
    except StoreUnavailable as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_GLOSSARY)
    except Exception as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    click.echo(f"approved {entry.key}")


if __name__ == "__main__":
    main()
