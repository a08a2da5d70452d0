"""Command line client for the witness service.

The CLI is a thin HTTP client.  By default it mounts the FastAPI app
in-process through an ASGI transport, so no server needs to be running;
pass --server to talk to a remote instance instead.  Every command
prints a JSON document on success and exits with:

    0  success
    1  verification failure
    2  infeasible or out of range
    3  budget exhausted
    4  usage error

Witness files written with --out are canonical: the same (m, n, seed)
produces byte-identical output on every run.
"""

from __future__ import annotations

import asyncio
import json
import sys
from typing import Any, Optional

import click
import httpx

EXIT_VERIFY = 1
EXIT_INFEASIBLE = 2
EXIT_BUDGET = 3
EXIT_USAGE = 4

_KIND_EXIT = {
    "verification": EXIT_VERIFY,
    "infeasible": EXIT_INFEASIBLE,
    "out-of-range": EXIT_INFEASIBLE,
    "budget": EXIT_BUDGET,
    "usage": EXIT_USAGE,
}

# click defaults usage errors to exit code 2, which collides with the
# infeasible code above
click.UsageError.exit_code = EXIT_USAGE


def _request(server: Optional[str], method: str, path: str,
             **kwargs: Any) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=None) as client:
            return client.request(method, path, **kwargs)

    from zforge.service import app

    async def go() -> httpx.Response:
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport, timeout=None,
                                     base_url="http://zforge.internal") as client:
            return await client.request(method, path, **kwargs)

    return asyncio.run(go())


def _call(server: Optional[str], method: str, path: str,
          **kwargs: Any) -> dict:
    """Issue a request; on a structured error print it and exit."""
    try:
        resp = _request(server, method, path, **kwargs)
    except httpx.HTTPError as exc:
        click.echo(json.dumps({"kind": "usage",
                               "detail": f"request failed: {exc}"}), err=True)
        sys.exit(EXIT_USAGE)
    body = resp.json()
    if resp.status_code != 200:
        kind = body.get("kind", "usage")
        click.echo(json.dumps(body), err=True)
        sys.exit(_KIND_EXIT.get(kind, EXIT_USAGE))
    return body


def _emit(doc: dict) -> None:
    click.echo(json.dumps(doc, indent=2, sort_keys=False))


_server_option = click.option(
    "--server", default=None, metavar="URL",
    help="Base URL of a running service; default is in-process.")
_seed_option = click.option("--seed", default=0, show_default=True,
                            help="Deterministic randomisation seed.")
_budget_option = click.option(
    "--budget", default=None, type=int, metavar="STEPS",
    help="Search step budget [default: 10000000 or ZFORGE_BUDGET].")


@click.group()
def main() -> None:
    """Exact Zarankiewicz values Z_{2,2}(m,n) with certified witnesses."""


@main.command()
@click.argument("m", type=int)
@click.argument("n", type=int)
@_server_option
def bounds(m: int, n: int, server: Optional[str]) -> None:
    """The three rational upper bounds at (M, N)."""
    _emit(_call(server, "GET", "/bounds", params={"m": m, "n": n}))


@main.command()
@click.argument("m", type=int)
@click.argument("n", type=int)
@click.option("--assume-large", is_flag=True,
              help="Apply the below-threshold formulas without the "
                   "finite-m caveat.")
@_server_option
def z(m: int, n: int, assume_large: bool, server: Optional[str]) -> None:
    """The exact value Z_{2,2}(M, N) where a formula covers it."""
    doc = _call(server, "GET", "/z",
                params={"m": m, "n": n, "assume_large": assume_large})
    if doc["z"] is None:
        click.echo(json.dumps(
            {"kind": "out-of-range",
             "detail": f"no formula covers (m={m}, n={n}); "
                       f"regime {doc['regime']}"}), err=True)
        sys.exit(EXIT_INFEASIBLE)
    _emit(doc)


@main.command()
@click.argument("m", type=int)
@click.argument("n", type=int)
@_seed_option
@_budget_option
@click.option("--out", default=None, type=click.Path(dir_okay=False),
              metavar="PATH", help="Write the canonical witness file here.")
@_server_option
def construct(m: int, n: int, seed: int, budget: Optional[int],
              out: Optional[str], server: Optional[str]) -> None:
    """Build a verified witness hypergraph attaining Z_{2,2}(M, N)."""
    doc = _call(server, "POST", "/construct",
                json={"m": m, "n": n, "seed": seed, "budget": budget})
    if out:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(doc["document"])
            fh.write("\n")
    _emit({k: doc[k] for k in ("m", "n", "z", "construction", "seed", "edges")})


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@_server_option
def verify(path: str, server: Optional[str]) -> None:
    """Check a witness file; exit 1 on any failure."""
    with open(path, "r", encoding="utf-8", errors="replace") as fh:
        text = fh.read()
    doc = _call(server, "POST", "/verify", json={"document": text})
    _emit(doc)
    if not doc["passed"] or doc["matches_formula"] is False:
        sys.exit(EXIT_VERIFY)


@main.command()
@click.argument("gdd_type", metavar="TYPE")
@_seed_option
@_server_option
def gdd(gdd_type: str, seed: int, server: Optional[str]) -> None:
    """Construct a 3-GDD of the given TYPE, e.g. '4^3' or '4^5 2^2'."""
    _emit(_call(server, "POST", "/gdd",
                json={"type": gdd_type, "seed": seed}))


@main.command()
@click.argument("m", type=int)
@click.argument("n", type=int)
@_budget_option
@_server_option
def oracle(m: int, n: int, budget: Optional[int],
           server: Optional[str]) -> None:
    """Exhaustively compute Z_{2,2}(M, N) for small M."""
    _emit(_call(server, "POST", "/oracle",
                json={"m": m, "n": n, "budget": budget}))


@main.command()
@click.argument("m_from", type=int)
@click.argument("m_to", type=int)
@click.option("--regime", default=None,
              help="Only rows in this regime, e.g. 'above-case1'.")
@_server_option
def table(m_from: int, m_to: int, regime: Optional[str],
          server: Optional[str]) -> None:
    """Regime boundaries and z at representative n for each m."""
    params: dict[str, Any] = {"m_from": m_from, "m_to": m_to}
    if regime is not None:
        params["regime"] = regime
    _emit(_call(server, "GET", "/table", params=params))


if __name__ == "__main__":
    main()
