"""Command-line interface.

Subcommands: ``enumerate``, ``transform``, ``biject``, ``render``,
``verify``, ``convolve``.  Objects travel as JSON (one object per line
for enumerations); identical invocations produce identical bytes.

Exit codes: 0 success, 1 verification failure, 2 usage or cap errors,
3 vanishing-first-moment errors, 4 domain violations.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import jsonio, render, verify
from .errors import (
    BadLink,
    BlockStraddlesSet,
    Crossing,
    LetterNotInDomain,
    LimitExceeded,
    NotACover,
    NotAPartition,
    NotConnected,
    NotNclS,
    OddGroundSet,
    OrderTooLow,
    SizeMismatch,
    ZeroFirstMoment,
    ZeroT0,
)
from .limits import DEFAULT_LIMITS
from .partitions import enumerate_nc, enumerate_ncl, enumerate_ncls, enumerate_ncs
from .transforms import (
    cumulants_to_moments,
    moments_to_cumulants,
    moments_to_tcoeffs,
    t_convolve,
    tcoeffs_to_moments,
    verify_t_multiplicativity,
)
from .trees import (
    BicolorPlanarTree,
    PlanarTree,
    bicolor_from_ncls,
    connected_from_tree,
    enumerate_bicolor,
    enumerate_planar_trees,
    ncls_from_bicolor,
    tree_from_connected,
)

_DOMAIN_ERRORS = (
    BadLink,
    BlockStraddlesSet,
    Crossing,
    LetterNotInDomain,
    NotACover,
    NotAPartition,
    NotConnected,
    NotNclS,
    OddGroundSet,
    OrderTooLow,
    SizeMismatch,
)

_ENUMERATORS = {
    "nc": ("nc", enumerate_nc),
    "ncl": ("ncl", enumerate_ncl),
    "ncs": ("ncs", enumerate_ncs),
    "ncls": ("ncls", enumerate_ncls),
    "trees": ("trees", enumerate_planar_trees),
    "bicolor": ("bicolor", enumerate_bicolor),
}


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _read_data(raw: str) -> dict:
    if raw == "-":
        raw = sys.stdin.read()
    return json.loads(raw)


def _parse_limit_overrides(args) -> dict[str, int]:
    overrides: dict[str, int] = {}
    env = os.environ.get("NCL_LIMITS", "")
    specs = [s for s in env.split(",") if s.strip()]
    specs += args.limit or []
    for spec in specs:
        kind, _, value = spec.partition("=")
        kind = kind.strip()
        if kind not in DEFAULT_LIMITS or not value.strip().isdigit():
            raise LimitExceeded(f"bad limit spec {spec!r}; use KIND=N")
        overrides[kind] = int(value)
    return overrides


def _resolve_limit(args, kind: str, n: int) -> int | None:
    overrides = _parse_limit_overrides(args)
    if kind in overrides:
        cap = overrides[kind]
        if cap > DEFAULT_LIMITS[kind] and not args.unsafe_limits:
            raise LimitExceeded(
                f"raising the {kind} cap above {DEFAULT_LIMITS[kind]} "
                f"requires --unsafe-limits"
            )
        return cap
    if args.unsafe_limits:
        return n
    return None


def _cmd_enumerate(args) -> int:
    kind, enumerator = _ENUMERATORS[args.kind]
    limit = _resolve_limit(args, kind, args.n)
    objects = enumerator(args.n, limit=limit)
    for obj in objects:
        if args.format == "json":
            print(_dump(obj.to_json_dict()))
        else:
            print(str(obj))
    if args.format == "json":
        print(_dump({"count": len(objects)}))
    else:
        print(f"count {len(objects)}")
    return 0


def _cmd_transform(args) -> int:
    data = _read_data(args.data)
    if args.direction == "m2k":
        out = moments_to_cumulants(jsonio.parse_moments(data))
    elif args.direction == "k2m":
        out = cumulants_to_moments(jsonio.parse_cumulants(data))
    elif args.direction == "m2t":
        out = moments_to_tcoeffs(jsonio.parse_moments(data))
    else:
        out = tcoeffs_to_moments(jsonio.parse_tcoeffs(data))
    print(_dump(out.to_json_dict()))
    return 0


def _cmd_biject(args) -> int:
    data = _read_data(args.data)
    if args.direction == "theta":
        out = tree_from_connected(jsonio.parse_ncl(data))
    elif args.direction == "theta-inv":
        tree = jsonio.parse_tree(data)
        if isinstance(tree, BicolorPlanarTree):
            raise NotConnected("expected a plain planar tree, got a bicolor one")
        out = connected_from_tree(tree)
    elif args.direction == "lambda":
        out = bicolor_from_ncls(jsonio.parse_ncl(data))
    else:  # lambda-inv
        tree = jsonio.parse_tree(data)
        if isinstance(tree, PlanarTree):
            if tree.children:
                raise NotNclS("expected a bicolor tree (colours missing)")
            tree = BicolorPlanarTree()
        out = ncls_from_bicolor(tree)
    print(_dump(out.to_json_dict()))
    return 0


def _cmd_render(args) -> int:
    data = _read_data(args.data)
    if "blocks" in data:
        obj = jsonio.parse_ncl(data)
    elif "children" in data:
        obj = jsonio.parse_tree(data)
    else:
        raise ValueError("expected a partition or tree object")
    print(render.render(obj))
    return 0


def _cmd_verify(args) -> int:
    entries = verify.run_suites(args.suite, order=args.order, seed=args.seed)
    passed = all(e.passed for e in entries)
    if args.format == "json":
        print(
            json.dumps(
                {"pass": passed, "entries": [e.to_json_dict() for e in entries]},
                sort_keys=True,
                indent=2,
            )
        )
    else:
        for e in entries:
            print(e.text_line())
        print(f"{'PASS' if passed else 'FAIL'} {len(entries)} identities")
    return 0 if passed else 1


def _cmd_convolve(args) -> int:
    if args.tx is not None and args.ty is not None:
        tx = jsonio.parse_tcoeffs(_read_data(args.tx))
        ty = jsonio.parse_tcoeffs(_read_data(args.ty))
        print(_dump(t_convolve(tx, ty).to_json_dict()))
        return 0
    if args.mx is not None and args.my is not None:
        mx = jsonio.parse_moments(_read_data(args.mx))
        my = jsonio.parse_moments(_read_data(args.my))
        order = args.order or min(mx.order, my.order, DEFAULT_LIMITS["theorem"])
        limit = _resolve_limit(args, "theorem", order)
        report = verify_t_multiplicativity(mx, my, order, limit=limit)
        print(json.dumps(report.to_json_dict(), sort_keys=True, indent=2))
        return 0 if report.passed else 1
    raise ValueError("convolve needs either --tx/--ty or --mx/--my")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="noncrossing",
        description="Exact non-crossing partition combinatorics and transforms",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=["json", "text"], default="json")
        p.add_argument(
            "--limit",
            action="append",
            metavar="KIND=N",
            help="override an enumeration cap (may repeat)",
        )
        p.add_argument(
            "--unsafe-limits",
            action="store_true",
            help="allow caps above the defaults",
        )

    p = sub.add_parser("enumerate", help="list a combinatorial family")
    p.add_argument("kind", choices=sorted(_ENUMERATORS))
    p.add_argument("n", type=int)
    common(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("transform", help="convert between coefficient sequences")
    p.add_argument("direction", choices=["m2k", "k2m", "m2t", "t2m"])
    p.add_argument("data", help="series JSON, or - for stdin")
    common(p)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("biject", help="apply a tree bijection")
    p.add_argument("direction", choices=["theta", "theta-inv", "lambda", "lambda-inv"])
    p.add_argument("data", help="object JSON, or - for stdin")
    common(p)
    p.set_defaults(func=_cmd_biject)

    p = sub.add_parser("render", help="draw a partition or tree as ASCII")
    p.add_argument("data", help="object JSON, or - for stdin")
    common(p)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument("suite", choices=sorted(verify.SUITES) + ["all"])
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--seed", type=int, default=7)
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("convolve", help="multiply t-series or verify multiplicativity")
    p.add_argument("--tx", help="first t-coefficient series JSON")
    p.add_argument("--ty", help="second t-coefficient series JSON")
    p.add_argument("--mx", help="first moment series JSON")
    p.add_argument("--my", help="second moment series JSON")
    p.add_argument("--order", type=int, default=None)
    common(p)
    p.set_defaults(func=_cmd_convolve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ZeroFirstMoment, ZeroT0) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
