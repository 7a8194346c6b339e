"""Command-line entry points: forge build, store inspect, bench run, serve."""

from __future__ import annotations

import logging
import sys
from pathlib import Path

import click

from .evalbench import AblationConfig, load_dataset, run_benchmark
from .forge import ClusterParams, build_database
from .gateway import GatewayMode, LlmGateway, ProviderConfig
from .store import VectorStore


def _provider_config(mode, fixtures, endpoint, model, embedding_model, embedding_dim) -> ProviderConfig:
    return ProviderConfig(
        endpoint=endpoint,
        model=model,
        embedding_model=embedding_model,
        embedding_dimension=embedding_dim,
        mode=GatewayMode(mode),
        fixture_path=Path(fixtures) if fixtures else None,
    )


def _gateway_options(fn):
    fn = click.option("--mode", type=click.Choice(["live", "record", "replay"]), default="live", show_default=True)(fn)
    fn = click.option("--fixtures", type=click.Path(path_type=Path), default=None, help="Fixture file for record/replay modes.")(fn)
    fn = click.option("--endpoint", default="https://api.openai.com/v1", show_default=True)(fn)
    fn = click.option("--model", default="gpt-3.5-turbo-16k", show_default=True)(fn)
    fn = click.option("--embedding-model", default="text-embedding-ada-002", show_default=True)(fn)
    return fn


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Enable debug logging.")
def main(verbose: bool) -> None:
    """Bias-indicator database tools and analysis service."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


@main.group()
def forge() -> None:
    """Offline indicator database construction."""


@forge.command("build")
@click.option("--corpus", type=click.Path(exists=True, path_type=Path), required=True)
@click.option("--alpha", type=float, required=True, help="Maximum intra-cluster Euclidean distance.")
@click.option("--confidence-threshold", type=click.IntRange(1, 10), default=6, show_default=True)
@click.option("--out", type=click.Path(path_type=Path), required=True)
@click.option("--unclustered-out", type=click.Path(path_type=Path), default=None,
              help="Also write a store over the whole verified set (for clustering ablation).")
@click.option("--per-leaning", is_flag=True, help="Cluster each leaning separately.")
@click.option("--parallelism", type=int, default=1, show_default=True)
@click.option("--embedding-dim", type=int, default=1536, show_default=True)
@_gateway_options
def forge_build(corpus, alpha, confidence_threshold, out, unclustered_out, per_leaning,
                parallelism, embedding_dim, mode, fixtures, endpoint, model, embedding_model):
    """Generate, verify, cluster, and store bias indicators from a corpus."""
    config = _provider_config(mode, fixtures, endpoint, model, embedding_model, embedding_dim)
    gateway = LlmGateway(config)
    try:
        summary = build_database(
            gateway,
            corpus,
            ClusterParams(alpha=alpha),
            confidence_threshold,
            out,
            per_leaning=per_leaning,
            parallelism=parallelism,
            unclustered_path=unclustered_out,
        )
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        click.echo(f"build failed: {exc}", err=True)
        sys.exit(1)
    click.echo(summary.to_json_line())


@main.group("store")
def store_group() -> None:
    """Vector-store file utilities."""


@store_group.command("inspect")
@click.argument("path", type=click.Path(exists=True, path_type=Path))
def store_inspect(path: Path) -> None:
    """Print the store header and per-leaning entry counts."""
    try:
        store = VectorStore.load(path)
    except Exception as exc:  # noqa: BLE001
        click.echo(f"cannot load store: {exc}", err=True)
        sys.exit(1)
    header = store.header
    click.echo(f"format version     {header.format_version}")
    click.echo(f"embedding dim      {header.embedding_dimension}")
    click.echo(f"entries            {header.entry_count}")
    click.echo(f"embedding model    {header.embedding_model}")
    click.echo(f"build params       {header.build_params_digest or '(none)'}")
    for leaning, count in store.leaning_counts().items():
        click.echo(f"{leaning.value:<8} entries   {count}")


@main.group()
def bench() -> None:
    """Benchmark and ablation runs."""


@bench.command("run")
@click.option("--dataset", "datasets", multiple=True, required=True, metavar="NAME=PATH",
              help="Dataset name and JSONL path; repeatable.")
@click.option("--store", "store_path", type=click.Path(path_type=Path), default=None)
@click.option("--m", type=int, default=5, show_default=True, help="Top-M matches per descriptor.")
@click.option("--ablate-clustering", is_flag=True, help="Use the unclustered store variant.")
@click.option("--ablate-indicators", is_flag=True, help="Zero-shot classification, no database.")
@click.option("--unclustered-store", type=click.Path(path_type=Path), default=None)
@click.option("--few-shot-exemplars", type=click.Path(exists=True, path_type=Path), default=None,
              help="Exemplar block file for the no-database route (few-shot instead of zero-shot).")
@click.option("--out", type=click.Path(path_type=Path), required=True)
@click.option("--embedding-dim", type=int, default=None, help="Defaults to the store dimension.")
@_gateway_options
def bench_run(datasets, store_path, m, ablate_clustering, ablate_indicators, unclustered_store,
              few_shot_exemplars, out, embedding_dim, mode, fixtures, endpoint, model, embedding_model):
    """Score datasets and write a metrics report plus an aligned table."""
    ablation = AblationConfig(
        use_indicator_database=not ablate_indicators,
        use_strict_clustering=not (ablate_indicators or ablate_clustering),
    )
    store = None
    if ablation.use_indicator_database:
        path = store_path
        if ablate_clustering:
            path = unclustered_store
            if path is None:
                click.echo("--ablate-clustering requires --unclustered-store", err=True)
                sys.exit(2)
        if path is None:
            click.echo("--store is required unless --ablate-indicators is set", err=True)
            sys.exit(2)
        store = VectorStore.load(path)
    dim = embedding_dim or (store.header.embedding_dimension if store else 1536)
    config = _provider_config(mode, fixtures, endpoint, model, embedding_model, dim)
    gateway = LlmGateway(config)

    loaded = []
    for spec_arg in datasets:
        name, sep, dataset_path = spec_arg.partition("=")
        if not sep:
            click.echo(f"--dataset must be NAME=PATH, got {spec_arg!r}", err=True)
            sys.exit(2)
        loaded.append(load_dataset(dataset_path, name))
    exemplars = few_shot_exemplars.read_text("utf-8") if few_shot_exemplars else None
    try:
        report = run_benchmark(
            loaded, gateway, store=store, m=m, ablation=ablation, few_shot_exemplars=exemplars
        )
    except Exception as exc:  # noqa: BLE001
        click.echo(f"benchmark failed: {exc}", err=True)
        sys.exit(1)
    report.save(out)
    click.echo(report.to_table())
    click.echo(f"report written to {out}")


@main.command("serve")
@click.option("--store", "store_path", type=click.Path(exists=True, path_type=Path), required=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--reports-dir", type=click.Path(path_type=Path), default=Path("./reports"), show_default=True)
@click.option("--m", type=int, default=5, show_default=True)
@click.option("--token", default=None, help="Shared access token; unset leaves the service open.")
@click.option("--ui", type=click.Path(exists=True, path_type=Path), default=None,
              help="Static frontend bundle to mount at /ui.")
@_gateway_options
def serve(store_path, port, host, reports_dir, m, token, ui,
          mode, fixtures, endpoint, model, embedding_model):
    """Run the analysis HTTP service over a built store."""
    import uvicorn

    from .service import create_app

    store = VectorStore.load(store_path)
    config = _provider_config(
        mode, fixtures, endpoint, model, embedding_model, store.header.embedding_dimension
    )
    gateway = LlmGateway(config)
    app = create_app(gateway, store, reports_dir, m=m, token=token)
    if ui is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=ui, html=True), name="ui")
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
