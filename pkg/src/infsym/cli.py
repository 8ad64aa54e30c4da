"""Command-line front end.

Every subcommand is a thin client of the HTTP service: by default it
talks to an in-process application instance, or to a remote server via
--url.  Output is deterministic JSON (sorted keys); rationals travel
as "p/q" strings.

Exit codes: 0 success or admissible, 1 malformed input or exceeded
budget, 2 mathematical check failed (rejection, relation failure,
positivity violation).
"""

from __future__ import annotations

import asyncio
import json
import sys

import click
import httpx


def _post(ctx, path: str, payload: dict):
    url = ctx.obj.get("url")
    if url:
        resp = httpx.post(url.rstrip("/") + path, json=payload,
                          timeout=300.0)
        return resp.status_code, resp.json()

    from .service import app

    async def go():
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
                transport=transport, base_url="http://infsym",
                timeout=300.0) as client:
            return await client.post(path, json=payload)

    resp = asyncio.run(go())
    return resp.status_code, resp.json()


def _emit(ctx, code: int, data: dict):
    if code >= 400:
        detail = data.get("detail", data)
        click.echo(f"error: {detail}", err=True)
        sys.exit(1)
    text = json.dumps(data, sort_keys=True, indent=2)
    out = ctx.obj.get("out")
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)
    if data.get("status") == "fail":
        sys.exit(2)


def _run(ctx, path: str, payload: dict):
    code, data = _post(ctx, path, payload)
    _emit(ctx, code, data)


def _ints(s: str) -> list[int]:
    s = s.strip()
    try:
        return [int(tok) for tok in s.split(",")] if s else []
    except ValueError:
        click.echo(f"error: not an integer list: {s!r}", err=True)
        sys.exit(1)


def _rationals(s: str) -> list[str]:
    return [tok.strip() for tok in s.split(",") if tok.strip()]


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(1)


@click.group()
@click.option("--url", default=None,
              help="Remote service URL (default: in-process).")
@click.option("--out", default=None, type=click.Path(),
              help="Write the JSON result to a file.")
@click.pass_context
def main(ctx, url, out):
    """Exact character calculus for the infinite symmetric group."""
    ctx.obj = {"url": url, "out": out}


@main.group()
def partition():
    """Partition combinatorics."""


@partition.command("info")
@click.option("--parts", required=True, help="e.g. 3,1")
@click.pass_context
def partition_info(ctx, parts):
    _run(ctx, "/partition/info", {"parts": _ints(parts)})


@main.group()
def char():
    """Finite symmetric group characters."""


@char.command("table")
@click.option("--n", required=True, type=int)
@click.pass_context
def char_table(ctx, n):
    _run(ctx, "/char/table", {"n": n})


@char.command("eval")
@click.option("--shape", required=True, help="e.g. 2,1")
@click.option("--class", "cls", required=True, help="e.g. 1,1,1")
@click.pass_context
def char_eval(ctx, shape, cls):
    _run(ctx, "/char/eval",
         {"shape": _ints(shape), "class": _ints(cls)})


@main.group()
def thoma():
    """Extreme characters via their parameters."""


@thoma.command("eval")
@click.option("--alpha", default="", help="e.g. 1/2,1/2")
@click.option("--beta", default="")
@click.option("--gamma", default=None)
@click.option("--cycles", required=True,
              help="non-trivial cycle lengths, e.g. 3 or 2,2")
@click.pass_context
def thoma_eval(ctx, alpha, beta, gamma, cycles):
    _run(ctx, "/thoma/eval", {
        "alpha": _rationals(alpha), "beta": _rationals(beta),
        "gamma": gamma, "cycles": _ints(cycles)})


@main.group()
def hseries():
    """Coefficient generating series."""


@hseries.command("expand")
@click.option("--alpha", default="")
@click.option("--beta", default="")
@click.option("--gamma", default=None)
@click.option("--order", default=24, type=int)
@click.pass_context
def hseries_expand(ctx, alpha, beta, gamma, order):
    _run(ctx, "/hseries/expand", {
        "alpha": _rationals(alpha), "beta": _rationals(beta),
        "gamma": gamma, "order": order})


@hseries.command("peel")
@click.option("--coeffs", required=True, type=click.Path(),
              help="JSON file: array of rational strings")
@click.pass_context
def hseries_peel(ctx, coeffs):
    _run(ctx, "/hseries/peel", {"coeffs": _load_json(coeffs)})


@main.group()
def tp():
    """Total positivity of coefficient sequences."""


@tp.command("check")
@click.option("--coeffs", required=True, type=click.Path(),
              help="JSON file: array of rational strings")
@click.option("--window", default=10, type=int)
@click.option("--order", default=4, type=int)
@click.pass_context
def tp_check(ctx, coeffs, window, order):
    _run(ctx, "/tp/check", {"coeffs": _load_json(coeffs),
                            "window": window, "order": order})


@main.group()
def diagram():
    """Wiring diagram semigroup."""


@diagram.command("mul")
@click.option("--lhs", required=True, type=click.Path())
@click.option("--rhs", required=True, type=click.Path())
@click.pass_context
def diagram_mul(ctx, lhs, rhs):
    _run(ctx, "/diagram/mul",
         {"lhs": _load_json(lhs), "rhs": _load_json(rhs)})


@diagram.command("verify")
@click.option("--window", default=4, type=int)
@click.option("--triples", default=0, type=int,
              help="random associativity triples")
@click.option("--seed", default=0, type=int)
@click.pass_context
def diagram_verify(ctx, window, triples, seed):
    _run(ctx, "/diagram/verify",
         {"window": window, "triples": triples, "seed": seed})


@main.group()
def cosets():
    """Signed double coset combinatorics."""


@cosets.command("census")
@click.option("--n", required=True, type=int)
@click.pass_context
def cosets_census(ctx, n):
    _run(ctx, "/cosets/census", {"n": n})


@cosets.command("poly")
@click.option("--n", required=True, type=int)
@click.pass_context
def cosets_poly(ctx, n):
    _run(ctx, "/cosets/poly", {"n": n})


@cosets.command("thm4")
@click.option("--x", required=True)
@click.option("--n", required=True, type=int)
@click.option("--brute", is_flag=True)
@click.pass_context
def cosets_thm4(ctx, x, n, brute):
    _run(ctx, "/cosets/thm4", {"x": x, "n": n, "brute": brute})


@main.command("classify")
@click.option("--label", required=True, type=click.Path(),
              help="JSON label file")
@click.pass_context
def classify_cmd(ctx, label):
    _run(ctx, "/classify", {"label": _load_json(label)})


@main.command("mixture")
@click.option("--spec", required=True, type=click.Path(),
              help="JSON mixture spec file")
@click.option("--check-order", default=0, type=int)
@click.pass_context
def mixture_cmd(ctx, spec, check_order):
    _run(ctx, "/mixture",
         {"spec": _load_json(spec), "check_order": check_order})


@main.command("ergodic")
@click.option("--alpha", default="")
@click.option("--beta", default="")
@click.option("--gamma", default=None)
@click.option("--k", default=2, type=int)
@click.option("--n", "ns", required=True, help="e.g. 10,20,40")
@click.pass_context
def ergodic_cmd(ctx, alpha, beta, gamma, k, ns):
    _run(ctx, "/ergodic", {
        "alpha": _rationals(alpha), "beta": _rationals(beta),
        "gamma": gamma, "k": k, "ns": _ints(ns)})


@main.command("selftest")
@click.option("--seed", default=0, type=int)
@click.pass_context
def selftest_cmd(ctx, seed):
    _run(ctx, "/selftest", {"seed": seed})


if __name__ == "__main__":
    main()
