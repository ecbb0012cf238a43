"""Bridge CLI: one-shot tagging, stdio line service, or HTTP service."""

from __future__ import annotations

import json
import sys

import click
from pydantic import BaseModel

from .backends import BackendUnavailable, load_backend
from .bridge import bridge_tag


class TagIn(BaseModel):
    text: str


@click.group()
@click.version_option(package_name="tagbridge")
def main() -> None:
    """Wrap SRL/POS/NER taggers behind the tagged-sentence wire format."""


@main.command()
@click.argument("sentence")
@click.option("--backend", "backend_name", default="builtin", show_default=True)
def tag(sentence: str, backend_name: str) -> None:
    """Tag one sentence and print the wire record."""
    try:
        backend = load_backend(backend_name)
    except BackendUnavailable as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    click.echo(json.dumps(bridge_tag(sentence, backend), ensure_ascii=False))


@main.command()
@click.option("--mode", type=click.Choice(["stdio", "http"]), default="stdio", show_default=True)
@click.option("--backend", "backend_name", default="builtin", show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8302, show_default=True)
def serve(mode: str, backend_name: str, host: str, port: int) -> None:
    """Serve tagging: one sentence per line (stdio) or POST /tag (http)."""
    try:
        backend = load_backend(backend_name)
    except BackendUnavailable as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)

    if mode == "stdio":
        for line in sys.stdin:
            sentence = line.rstrip("\n")
            if not sentence.strip():
                continue
            sys.stdout.write(json.dumps(bridge_tag(sentence, backend), ensure_ascii=False) + "\n")
            sys.stdout.flush()
        return

    import uvicorn

    uvicorn.run(create_app(backend), host=host, port=port, log_level="warning")


def create_app(backend):
    from fastapi import FastAPI
    from fastapi.exceptions import RequestValidationError
    from fastapi.responses import JSONResponse

    app = FastAPI(title="tagbridge")

    @app.exception_handler(RequestValidationError)
    async def _bad_request(request, exc):
        return JSONResponse(status_code=400, content={"error": "bad request"})

    @app.get("/health")
    def health():
        return {"status": "ok", "backend": backend.name}

    @app.post("/tag")
    def tag_endpoint(body: TagIn):
        return bridge_tag(body.text, backend)

    return app


if __name__ == "__main__":
    main()
