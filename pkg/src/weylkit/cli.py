"""Command-line front end: a thin client of the service API.

Every subcommand builds a request, sends it through the FastAPI app
(in-process by default via an ASGI transport, or to a remote --server),
and formats the response.  Exit codes: 0 success, 1 a verify suite found
a counterexample, 2 usage or regime errors.

The default KL cache path comes from the WEYLKIT_CACHE environment
variable when --cache is not given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import httpx

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2

VERIFY_SUITES = ("length", "ordersame", "elem", "tr", "tothe", "mult", "newlinkage", "kl")


class _InProcessClient:
    """Synchronous shim that drives the ASGI app without a socket."""

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False

    def post(self, path: str, json: dict) -> httpx.Response:
        import asyncio

        from .service.app import app

        async def go():
            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(transport=transport,
                                         base_url="http://weylkit.local",
                                         timeout=None) as client:
                return await client.post(path, json=json)

        return asyncio.run(go())


def _client(server: str | None):
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    return _InProcessClient()


def _weight(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _dumps(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def _print_json(data):
    print(_dumps(data))


def _add_common(parser: argparse.ArgumentParser, with_p: bool = True):
    parser.add_argument("--type", "-t", dest="series", required=True,
                        help="series letter A-G")
    parser.add_argument("--rank", type=int, required=True)
    if with_p:
        parser.add_argument("--p", type=int, required=True)
    parser.add_argument("--output", choices=("json", "csv", "plain"), default="plain")
    parser.add_argument("--server", default=None,
                        help="base URL of a running service (default: in-process)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weylkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p_roots = sub.add_parser("roots", help="root-system data for a type")
    p_roots.add_argument("--type", "-t", dest="series", required=True)
    p_roots.add_argument("--rank", type=int, required=True)
    p_roots.add_argument("--output", choices=("json", "csv", "plain"), default="plain")
    p_roots.add_argument("--server", default=None)

    p_el = sub.add_parser("elements", help="enumerate group elements by length")
    _add_common(p_el)
    p_el.add_argument("--max-len", type=int, default=4)
    p_el.add_argument("--dominant-only", action="store_true")

    p_desc = sub.add_parser("descent", help="right descent set of an element")
    _add_common(p_desc)
    group = p_desc.add_mutually_exclusive_group(required=True)
    group.add_argument("--word", help="comma-separated generator names, e.g. s1,s0")
    group.add_argument("--alcove", type=_weight, help="alcove tuple")

    p_kl = sub.add_parser("kl", help="Kazhdan-Lusztig or R polynomial of a pair")
    _add_common(p_kl)
    p_kl.add_argument("--y", required=True, help="word for the lower element")
    p_kl.add_argument("--w", required=True, help="word for the upper element")
    p_kl.add_argument("--variant", choices=("kl", "r"), default="kl")

    p_char = sub.add_parser("char", help="Weyl character and optional product")
    _add_common(p_char)
    p_char.add_argument("--chi", type=_weight, required=True)
    p_char.add_argument("--times", type=_weight, default=None)

    p_tr = sub.add_parser("translate", help="translation between orbits at character level")
    _add_common(p_tr)
    p_tr.add_argument("--from", dest="source", type=_weight, required=True)
    p_tr.add_argument("--to", dest="target", type=_weight, required=True)
    p_tr.add_argument("--chi", type=_weight, required=True)

    p_dec = sub.add_parser("decompose", help="quantum character in modular irreducibles")
    _add_common(p_dec)
    p_dec.add_argument("--weight", type=_weight, required=True)
    p_dec.add_argument("--assume-lcf", action="store_true")

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", choices=VERIFY_SUITES)
    _add_common(p_ver)
    p_ver.add_argument("--max-len", type=int, default=6)
    p_ver.add_argument("--box-radius", type=int, default=10)
    p_ver.add_argument("--base", choices=("antidominant", "dominant"),
                       default="antidominant")
    p_ver.add_argument("--lambda", dest="lam", default="auto",
                       help="regular weight coordinates or 'auto'")
    p_ver.add_argument("--mu", type=_weight, default=None,
                       help="wall weight (default: every wall)")
    p_ver.add_argument("--nu", type=_weight, default=None,
                       help="root-lattice vector for the elem suite")
    p_ver.add_argument("--assume-lcf", action="store_true")
    p_ver.add_argument("--jobs", type=int, default=1)

    p_cache = sub.add_parser("cache", help="manage the KL table cache")
    p_cache.add_argument("action", choices=("info", "clear", "save", "load"))
    _add_common(p_cache)
    p_cache.add_argument("--cache", dest="cache_path", default=None,
                         help="cache file path (default: $WEYLKIT_CACHE)")

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)

    return parser


def _params(args) -> dict:
    return {"series": args.series, "rank": args.rank, "p": args.p}


def _post(client, path: str, payload: dict) -> dict:
    response = client.post(path, json=payload)
    if response.status_code >= 400:
        try:
            detail = response.json().get("detail")
        except json.JSONDecodeError:
            detail = response.text
        raise CommandError(detail)
    return response.json()


class CommandError(Exception):
    def __init__(self, detail):
        if isinstance(detail, dict):
            message = detail.get("message", str(detail))
        else:
            message = str(detail)
        super().__init__(message)
        self.detail = detail


def _verify_rows(report: dict) -> list[dict]:
    rows = []
    for v in report.get("violations", []):
        row = {"kind": "violation"}
        row.update({k: _dumps(val) if isinstance(val, (list, dict)) else val
                    for k, val in v.items()})
        rows.append(row)
    return rows


def _emit_csv(rows: list[dict]):
    import csv

    keys = sorted({k for row in rows for k in row})
    writer = csv.DictWriter(sys.stdout, fieldnames=keys)
    writer.writeheader()
    for row in rows:
        writer.writerow(row)


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return EXIT_OK

    try:
        with _client(args.server) as client:
            return _dispatch(client, args)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except httpx.HTTPError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(client, args) -> int:
    if args.command == "roots":
        data = _post(client, "/roots", {"series": args.series, "rank": args.rank})
        if args.output == "json":
            _print_json(data)
        elif args.output == "csv":
            _emit_csv([{"index": i, "root": _dumps(r), "coroot": _dumps(c)}
                       for i, (r, c) in enumerate(zip(data["positive_roots"], data["coroots"]))])
        else:
            print(f"type {data['series']}{data['rank']}  "
                  f"h={data['coxeter_number']}  roots={len(data['positive_roots'])}")
            for i, r in enumerate(data["positive_roots"]):
                print(f"  beta[{i}] = {r}")
        return EXIT_OK

    if args.command == "elements":
        data = _post(client, "/elements", {
            "params": _params(args), "max_len": args.max_len,
            "dominant_only": args.dominant_only,
        })
        if args.output == "json":
            _print_json(data)
        elif args.output == "csv":
            _emit_csv([{"word": e["word"], "length": e["length"],
                        "alcove": _dumps(e["alcove"]),
                        "descents": ",".join(e["descents"])}
                       for e in data["elements"]])
        else:
            for e in data["elements"]:
                print(f"{e['length']:3d}  {e['word']:24s} alcove={e['alcove']} "
                      f"R={{{','.join(e['descents'])}}}")
        return EXIT_OK

    if args.command == "descent":
        element = {"word": args.word} if args.word else {"alcove": args.alcove}
        data = _post(client, "/descent", {"params": _params(args), "element": element})
        if args.output == "json":
            _print_json(data)
        else:
            print("{" + ",".join(data["descents"]) + "}")
        return EXIT_OK

    if args.command == "kl":
        data = _post(client, "/kl", {
            "params": _params(args),
            "y": {"word": args.y}, "w": {"word": args.w},
            "variant": args.variant,
        })
        if args.output == "json":
            _print_json(data)
        else:
            print(" ".join(str(c) for c in data["coeffs"]) or "0")
        return EXIT_OK

    if args.command == "char":
        data = _post(client, "/char", {
            "params": _params(args), "chi": args.chi, "times": args.times,
        })
        if args.output == "json":
            _print_json(data)
        else:
            print("weyl:  ", _dumps(data["weyl"]["terms"]))
            print("weight:", _dumps(data["weight"]["terms"]))
            print("dim:   ", data["dim"])
        return EXIT_OK

    if args.command == "translate":
        data = _post(client, "/translate", {
            "params": _params(args), "source": args.source,
            "target": args.target, "chi": args.chi,
        })
        if args.output == "json":
            _print_json(data)
        else:
            print("weyl:  ", _dumps(data["weyl"]["terms"]))
            print("dim:   ", data["dim"])
        return EXIT_OK

    if args.command == "decompose":
        data = _post(client, "/decompose", {
            "params": _params(args), "weight": args.weight,
            "assume_lcf": args.assume_lcf,
        })
        if args.output == "json":
            _print_json(data["report"])
        elif args.output == "csv":
            _emit_csv([{"weight": k, "coeff": v}
                       for k, v in sorted(data["coefficients"].items())])
        else:
            _print_json(data["coefficients"])
        return EXIT_OK

    if args.command == "verify":
        lam = args.lam if args.lam == "auto" else _weight(args.lam)
        data = _post(client, f"/verify/{args.suite}", {
            "params": _params(args),
            "max_len": args.max_len,
            "box_radius": args.box_radius,
            "base": args.base,
            "lam": lam,
            "mu": args.mu,
            "nu": args.nu,
            "assume_lcf": args.assume_lcf,
            "jobs": args.jobs,
        })
        report = data["report"]
        if args.output == "json":
            _print_json(report)
        elif args.output == "csv":
            _emit_csv(_verify_rows(report))
        else:
            n_viol = len(report.get("violations", []))
            skipped = report.get("skipped", 0)
            print(f"suite={args.suite} checked={report.get('checked', 0)} "
                  f"passed={report.get('checked', 0) - n_viol} "
                  f"violations={n_viol} skipped={skipped}")
        return EXIT_OK if data["ok"] else EXIT_COUNTEREXAMPLE

    if args.command == "cache":
        path = args.cache_path or os.environ.get("WEYLKIT_CACHE")
        data = _post(client, "/cache", {
            "params": _params(args), "action": args.action, "path": path,
        })
        if args.output == "json":
            _print_json(data)
        else:
            print(f"cache {data['action']}: {data['entries']} entries"
                  + (f" @ {data['path']}" if data.get("path") else ""))
        return EXIT_OK

    raise CommandError({"code": "usage", "message": f"unknown command {args.command}"})


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
