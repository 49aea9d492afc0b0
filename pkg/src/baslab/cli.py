"""Command-line client for the computational service.

All commands run in-process by default; with --server URL the same request
is posted to a running instance of the HTTP API instead.  Output is either
human-readable text or canonical JSON (sorted keys), and identical
configurations produce byte-identical JSON reports.

Exit codes: 0 success / all checks pass, 1 verification failure or internal
error, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field, fields

from . import service
from .errors import BaslabError, InternalCheckError
from .selftest import SUITES

GLUE_EXAMPLES = ("tildeA", "hatA", "A_free_truncated")

COMMANDS = (
    "roots", "plambda", "witness", "oracle",
    "glue-demo", "glue-homdim", "glue-axioms", "selftest",
)


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation; round-trips through its canonical argument list."""

    command: str
    type: str | None = None
    weight: str | None = None
    point: str | None = None
    factors: str | None = None
    example: str | None = None
    algebra: str | None = None
    modules: tuple = ()
    corrupt_mu: bool = False
    cutoff: int | None = None
    seed: int = 0
    suites: tuple = ()
    format: str = "text"
    server: str | None = None

    def to_args(self) -> list:
        """Canonical argv list reproducing this configuration."""
        out = [self.command]
        if self.type is not None:
            out += ["--type", self.type]
        if self.weight is not None:
            out += ["--weight", self.weight]
        if self.point is not None:
            out += ["--point", self.point]
        if self.factors is not None:
            out += ["--factors", self.factors]
        if self.example is not None:
            out += ["--example", self.example]
        if self.algebra is not None:
            out += ["--algebra", self.algebra]
        for m in self.modules:
            out += ["--module", m]
        if self.corrupt_mu:
            out += ["--corrupt-mu"]
        if self.cutoff is not None:
            out += ["--cutoff", str(self.cutoff)]
        if self.command == "selftest":
            out += ["--seed", str(self.seed)]
            for s in self.suites:
                out += ["--suite", s]
        out += ["--format", self.format]
        if self.server is not None:
            out += ["--server", self.server]
        return out


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="baslab",
        description="Exact computational algebra: Weyl actions, invariant "
        "elements, operator oracles, and category gluing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", "-f", choices=("text", "json"), default="text")
        p.add_argument("--server", default=None,
                       help="POST to a running service instead of computing locally")

    p = sub.add_parser("roots", help="root-system data for a type string")
    p.add_argument("--type", required=True, help='e.g. "A2", "B3", "A1xA1"')
    common(p)

    p = sub.add_parser("plambda", help="expand the invariant element at a weight")
    p.add_argument("--type", required=True)
    p.add_argument("--weight", required=True, help='comma-separated, e.g. "2" or "1,0"')
    common(p)

    p = sub.add_parser("witness", help="certified nonvanishing twist at a point")
    p.add_argument("--type", required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--point", required=True, help='rational coords, e.g. "0" or "1/2,-3"')
    common(p)

    p = sub.add_parser("oracle", help="operator-algebra cross-check on A1^n")
    p.add_argument("--factors", required=True, help='multidegree, e.g. "3" or "2,1"')
    common(p)

    def glue_opts(p, with_modules=False):
        p.add_argument("--example", choices=GLUE_EXAMPLES, default=None)
        p.add_argument("--algebra", default=None, help="quiver spec JSON file")
        if with_modules:
            p.add_argument("--module", dest="modules", action="append", default=[],
                           help="module spec JSON file (repeatable)")
            p.add_argument("--corrupt-mu", action="store_true",
                           help="negative control: perturb the comultiplication")
        p.add_argument("--cutoff", type=int, default=None,
                       help="resolution/path-length cutoff (env BASLAB_CUTOFF)")
        common(p)

    glue = sub.add_parser("glue", help="gluing-data commands (demo, homdim, axioms)")
    glue_sub = glue.add_subparsers(dest="glue_command", required=True)
    for name, with_mods in (("demo", False), ("homdim", False), ("axioms", True)):
        gp = glue_sub.add_parser(name)
        glue_opts(gp, with_modules=with_mods)

    for name, with_mods in (("glue-demo", False), ("glue-homdim", False),
                            ("glue-axioms", True)):
        gp = sub.add_parser(name, help=f"alias of `glue {name.split('-')[1]}`")
        glue_opts(gp, with_modules=with_mods)

    p = sub.add_parser("selftest", help="run the seeded invariant suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--suite", dest="suites", action="append", default=[],
                   choices=sorted(SUITES), help="restrict to a suite (repeatable)")
    common(p)
    return parser


def parse_config(argv) -> RunConfig:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    command = ns.command
    if command == "glue":
        command = f"glue-{ns.glue_command}"
    kwargs = {"command": command, "format": ns.format, "server": ns.server}
    for name in ("type", "weight", "point", "factors", "example", "algebra",
                 "cutoff", "seed"):
        if hasattr(ns, name) and getattr(ns, name) is not None:
            kwargs[name] = getattr(ns, name)
    if getattr(ns, "modules", None):
        kwargs["modules"] = tuple(ns.modules)
    if getattr(ns, "corrupt_mu", False):
        kwargs["corrupt_mu"] = True
    if getattr(ns, "suites", None):
        kwargs["suites"] = tuple(ns.suites)
    return RunConfig(**kwargs)


def _effective_cutoff(cfg: RunConfig) -> int:
    if cfg.cutoff is not None:
        return cfg.cutoff
    env = os.environ.get("BASLAB_CUTOFF")
    return int(env) if env else service.DEFAULT_CUTOFF


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def run_config(cfg: RunConfig) -> tuple:
    """(report dict, exit code 0/1) for a parsed configuration."""
    if cfg.server is not None:
        return _run_remote(cfg)
    cutoff = _effective_cutoff(cfg)
    if cfg.command == "roots":
        report = service.roots_report(cfg.type)
        return report, 0
    if cfg.command == "plambda":
        report = service.plambda_report(cfg.type, cfg.weight)
        ok = report["degree_check"] and report["divisibility_check"]
        return report, 0 if ok else 1
    if cfg.command == "witness":
        report = service.witness_report(cfg.type, cfg.weight, cfg.point)
        return report, 0 if report["value_at_x"] != "0" else 1
    if cfg.command == "oracle":
        report = service.oracle_report(cfg.factors)
        return report, 0 if report["pass"] else 1
    if cfg.command == "glue-demo":
        report = service.glue_demo_report(cfg.example or "tildeA", cutoff)
        return report, 0
    if cfg.command == "glue-homdim":
        spec = _load_json(cfg.algebra) if cfg.algebra else None
        report = service.glue_homdim_report(cfg.example, spec, cutoff)
        return report, 0 if not report["status"].startswith("inconclusive") else 1
    if cfg.command == "glue-axioms":
        spec = _load_json(cfg.algebra) if cfg.algebra else None
        modules = [_load_json(m) for m in cfg.modules] or None
        report = service.glue_axioms_report(cfg.example, spec, modules,
                                            cfg.corrupt_mu, cutoff)
        return report, 0 if report["passed"] else 1
    if cfg.command == "selftest":
        report = service.selftest_report(cfg.seed, list(cfg.suites) or None)
        return report, 0 if report["passed"] else 1
    raise BaslabError(f"unknown command {cfg.command!r}")


_REMOTE_PATHS = {
    "roots": "/v1/roots",
    "plambda": "/v1/plambda",
    "witness": "/v1/witness",
    "oracle": "/v1/oracle",
    "glue-demo": "/v1/glue/demo",
    "glue-homdim": "/v1/glue/homdim",
    "glue-axioms": "/v1/glue/axioms",
    "selftest": "/v1/selftest",
}


def _remote_payload(cfg: RunConfig) -> dict:
    if cfg.command == "roots":
        return {"type": cfg.type}
    if cfg.command == "plambda":
        return {"type": cfg.type, "weight": cfg.weight}
    if cfg.command == "witness":
        return {"type": cfg.type, "weight": cfg.weight, "point": cfg.point}
    if cfg.command == "oracle":
        return {"factors": cfg.factors}
    if cfg.command == "glue-demo":
        return {"example": cfg.example or "tildeA", "cutoff": cfg.cutoff}
    if cfg.command == "glue-homdim":
        return {
            "example": cfg.example,
            "algebra": _load_json(cfg.algebra) if cfg.algebra else None,
            "cutoff": cfg.cutoff,
        }
    if cfg.command == "glue-axioms":
        return {
            "example": cfg.example,
            "algebra": _load_json(cfg.algebra) if cfg.algebra else None,
            "modules": [_load_json(m) for m in cfg.modules] or None,
            "corrupt_mu": cfg.corrupt_mu,
            "cutoff": cfg.cutoff,
        }
    if cfg.command == "selftest":
        return {"seed": cfg.seed, "suites": list(cfg.suites) or None}
    raise BaslabError(f"unknown command {cfg.command!r}")


def _run_remote(cfg: RunConfig) -> tuple:
    import httpx

    url = cfg.server.rstrip("/") + _REMOTE_PATHS[cfg.command]
    resp = httpx.post(url, json=_remote_payload(cfg), timeout=300.0)
    if resp.status_code == 422:
        raise BaslabError(resp.json().get("detail", "request rejected"))
    resp.raise_for_status()
    report = resp.json()
    flag = report.get("pass", report.get("passed"))
    if flag is None:
        code = 0
    else:
        code = 0 if flag else 1
    return report, code


# -- rendering --------------------------------------------------------------------


def _render_text(cfg: RunConfig, report: dict) -> str:
    cmd = cfg.command
    if cmd == "roots":
        lines = [
            f"type {report['type']}  rank {report['rank']}  "
            f"|positive coroots| {report['num_positive_coroots']}  "
            f"|W| {report['weyl_order']}",
            "cartan: " + "; ".join(" ".join(f"{v:2d}" for v in row)
                                   for row in report["cartan"]),
            "positive coroots: " + ", ".join(
                "(" + ",".join(c) + ")" for c in report["positive_coroots"]),
            f"longest element: {report['longest_element_word']}",
        ]
        return "\n".join(lines)
    if cmd == "plambda":
        lines = [report["expanded"]]
        lines.append("factors: " + ", ".join(f["text"] for f in report["factors"]))
        lines.append(
            f"degree {report['degree']}  degree_check "
            f"{report['degree_check']}  divisibility_check {report['divisibility_check']}"
        )
        return "\n".join(lines)
    if cmd == "witness":
        return (
            f"witness word \"{report['witness_word']}\", value {report['value_at_x']}"
            f" (strategy: {report['strategy']})"
        )
    if cmd == "oracle":
        status = "pass" if report["pass"] else "FAIL"
        return (
            f"{status}  lambda={report['lambda']}  scalar={report['scalar']}\n"
            f"formula: {report['formula']}\n"
            f"oracle:  {report['oracle_canonical']}"
        )
    if cmd == "glue-demo":
        lines = [
            f"example {report['example']}: dim {report['dim']}, "
            f"radical dim {report['radical_dim']}, faithful {report['faithful']}",
            "basis: " + ", ".join(report["basis"]),
        ]
        for name, info in report["corners"].items():
            extra = ""
            if info.get("square_zero_generator") is not None:
                extra = f", square-zero generator: {info['square_zero_generator']}"
            lines.append(f"corner at {name}: dim {info['dim']}{extra}")
        lines.append(f"global dimension: {report['global_dimension']}")
        for k, v in report["resolutions"].items():
            lines.append(f"  simple at {k}: projective dimension {v}")
        return "\n".join(lines)
    if cmd == "glue-homdim":
        return report["status"]
    if cmd == "glue-axioms":
        lines = []
        for c in report["checks"]:
            lines.append(f"{'PASS' if c['passed'] else 'FAIL'} {c['check']} [{c['module']}]")
        lines.append("overall: " + ("PASS" if report["passed"] else "FAIL"))
        return "\n".join(lines)
    if cmd == "selftest":
        lines = []
        for name, r in report["results"].items():
            lines.append(f"{'PASS' if r['passed'] else 'FAIL'} {name}: {r['detail']}")
        lines.append("overall: " + ("PASS" if report["passed"] else "FAIL"))
        return "\n".join(lines)
    return json.dumps(report, indent=2, sort_keys=True)


def main(argv=None) -> int:
    try:
        cfg = parse_config(argv if argv is not None else sys.argv[1:])
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report, code = run_config(cfg)
    except InternalCheckError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    except BaslabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cfg.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(_render_text(cfg, report))
    return code


if __name__ == "__main__":
    sys.exit(main())
