"""Operator CLI: serve, ingest, pipeline run, sus score, snapshot, report."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .config import Config
from .errors import ServiceError
from .measures import read_answers_csv, score_answer_rows
from .service import Service


def _load_config(config_path: str | None, data_dir: str | None) -> Config:
    if config_path:
        config = Config.load(config_path)
        if data_dir:
            config.data_dir = Path(data_dir)
        return config
    if data_dir:
        return Config(data_dir=Path(data_dir))
    raise click.UsageError("pass --config or --data-dir")


config_option = click.option("--config", "config_path", type=click.Path(exists=True), default=None)
data_dir_option = click.option("--data-dir", type=click.Path(), default=None)


@click.group()
def main() -> None:
    """Pool worker complaints, organize them into problem categories, collaborate on solutions."""


@main.command()
@config_option
@data_dir_option
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--ui", "ui_dir", type=click.Path(), default=None, help="Static UI directory to serve at /")
def serve(config_path: str | None, data_dir: str | None, host: str, ui_dir: str | None) -> None:
    """Start the HTTP service (replays the event log first)."""
    import uvicorn

    from .api import create_app

    config = _load_config(config_path, data_dir)
    service = Service(config)
    app = create_app(service, ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=config.http_port)


@main.command()
@config_option
@data_dir_option
@click.option("--source-kind", required=True, type=click.Choice(["subreddit", "app_store_review"]))
@click.option("--source-name", required=True)
@click.option("--file", "dump_path", required=True, type=click.Path(exists=True))
def ingest(
    config_path: str | None,
    data_dir: str | None,
    source_kind: str,
    source_name: str,
    dump_path: str,
) -> None:
    """Ingest a newline-delimited JSON dump file into the store."""
    service = Service(_load_config(config_path, data_dir))
    report = service.ingest_dump_file(source_kind, source_name, dump_path)
    click.echo(json.dumps(report.to_dict(), indent=2))


@main.group()
def pipeline() -> None:
    """Pipeline jobs."""


@pipeline.command("run")
@config_option
@data_dir_option
def pipeline_run(config_path: str | None, data_dir: str | None) -> None:
    """Categorize, summarize, and suggest solutions over the stored corpus."""
    service = Service(_load_config(config_path, data_dir))
    result = service.run_pipeline(wait=True)
    click.echo(json.dumps(result, indent=2))


@main.group()
def sus() -> None:
    """Usability questionnaire scoring."""


@sus.command("score")
@click.option("--file", "csv_path", required=True, type=click.Path(exists=True))
def sus_score(csv_path: str) -> None:
    """Score rows of 10 answers; emits `score,rating` per row."""
    click.echo("score,rating")
    for row in score_answer_rows(read_answers_csv(csv_path)):
        click.echo(f"{row['score']:g},{row['rating']}")


@main.command()
@config_option
@data_dir_option
def snapshot(config_path: str | None, data_dir: str | None) -> None:
    """Write a state snapshot so restarts replay only tail events."""
    service = Service(_load_config(config_path, data_dir))
    path = service.snapshot()
    click.echo(str(path))


@main.command()
@config_option
@data_dir_option
@click.option("--out-dir", required=True, type=click.Path())
def report(config_path: str | None, data_dir: str | None, out_dir: str) -> None:
    """Write problems.csv and problems.png for the current zoom-out view."""
    from .report import write_report

    service = Service(_load_config(config_path, data_dir))
    for path in write_report(service.zoom_out(), out_dir):
        click.echo(str(path))


def run() -> None:
    try:
        main(standalone_mode=True)
    except ServiceError as exc:
        click.echo(f"error [{exc.code}]: {exc.message}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    run()
