"""Command-line entry point for the wizard service."""

import logging
from pathlib import Path

import click
import uvicorn

from crawlwizard.api.app import AppConfig, create_app


@click.command()
@click.option("--port", default=8090, show_default=True, help="HTTP port to listen on.")
@click.option("--host", default="127.0.0.1", show_default=True, help="Bind address.")
@click.option("--data-dir", type=click.Path(path_type=Path), default=Path("./data"),
              show_default=True, help="Directory for spec event logs and snapshots.")
@click.option("--fixtures-dir", type=click.Path(exists=True, file_okay=False,
              path_type=Path), default=None,
              help="Enable fixture mode: replay recorded search results and pages "
                   "from this directory instead of calling live APIs.")
@click.option("--stopwords", type=click.Path(exists=True, dir_okay=False,
              path_type=Path), default=None,
              help="Stopword list file (one lowercase token per line); "
                   "defaults to the bundled English list.")
@click.option("--annotate-top-k", default=5, show_default=True,
              help="How many top web results get keyword/entity analysis per query.")
@click.option("--ui-dir", type=click.Path(exists=True, file_okay=False,
              path_type=Path), default=None,
              help="Serve a built browser UI from this directory at /.")
def main(port: int, host: str, data_dir: Path, fixtures_dir: Path | None,
         stopwords: Path | None, annotate_top_k: int, ui_dir: Path | None):
    """Run the crawl-specification wizard service.

    Live search credentials are read from the environment variables
    WIZARD_WEBSEARCH_KEY and WIZARD_SOCIAL_TOKEN; with --fixtures-dir set
    no network access is needed.
    """
    logging.basicConfig(level=logging.INFO,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    config = AppConfig(
        data_dir=data_dir,
        fixtures_dir=fixtures_dir,
        stopwords_path=stopwords,
        annotate_top_k=annotate_top_k,
        ui_dir=ui_dir,
    )
    uvicorn.run(create_app(config), host=host, port=port, log_level="info")


if __name__ == "__main__":
    main()
