"""Command line front end for the verification catalog.

Commands:
  list          show every catalog entry with its status
  verify        run one entry, optionally at chosen parameters
  verify-all    run a whole suite at default parameters
  expand        print the expansion of a product written in text form
  oracle-check  count constrained partitions and cross-check the series
  positivity    scan the theta-quotient combinations for negative signs

Exit status is 0 when every executed check passes, 1 when any check
fails or stabilization does not converge, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from .identities import catalog, kr_finite
from .qfactory import ProductSpec
from .reflect_limits import StabilizationError, positivity_scan
from .series import first_discrepancy
from . import partition_oracle

DEFAULT_CONFIG = {
    "agree_order": 100,
    "limit_order": 60,
    "kr_limit_order": 80,
    "linear_order": 200,
    "positivity_order": 200,
    "stabilization_ceiling": 600,
}


@dataclass
class VerificationReport:
    id: str
    params: dict
    order: int | None
    status: str                  # pass, fail, or non-convergent
    first_discrepancy: int | None
    elapsed: float
    status_expected: str         # proved or conjectural
    note: str = ""

    def json_dict(self):
        # elapsed is left out so repeated runs serialize identically
        return {
            "id": self.id,
            "params": self.params,
            "order": self.order,
            "status": self.status,
            "first_discrepancy": self.first_discrepancy,
            "status_expected": self.status_expected,
            "note": self.note,
        }

    def line(self):
        bits = [self.status.ljust(4), self.id]
        if self.params:
            bits.append(",".join(f"{k}={v}"
                                 for k, v in sorted(self.params.items())))
        bits.append("order=%s" % ("exact" if self.order is None
                                  else self.order))
        if self.status == "fail":
            bits.append(f"first discrepancy at q^{self.first_discrepancy}")
        if self.note:
            bits.append(f"[{self.note}]")
        bits.append(f"({self.status_expected})")
        bits.append(f"{self.elapsed:.2f}s")
        return "  ".join(bits)


def load_config(path):
    config = dict(DEFAULT_CONFIG)
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"bad config line: {raw.strip()!r}")
            key, value = (s.strip() for s in line.split("=", 1))
            if key not in DEFAULT_CONFIG:
                raise ValueError(f"unknown config key: {key}")
            config[key] = int(value)
    return config


def parse_params(pairs):
    params = {}
    for pair in pairs:
        if "=" not in pair:
            raise ValueError(f"--param expects key=value, got {pair!r}")
        key, value = pair.split("=", 1)
        try:
            params[key] = int(value)
        except ValueError:
            params[key] = value
    return params


def run_entry(entry, params, order, config):
    started = time.perf_counter()
    try:
        check = entry.build(params, order, config["stabilization_ceiling"])
    except StabilizationError as exc:
        return VerificationReport(entry.id, params, order, "non-convergent",
                                  None, time.perf_counter() - started,
                                  entry.status, note=str(exc))
    if check.order is None:
        passed = check.lhs == check.rhs
        where = None
        if not passed:
            top = 0
            for side in (check.lhs, check.rhs):
                if not side.is_zero():
                    top = max(top, side.degree())
            where = first_discrepancy(check.lhs, check.rhs, top)
    else:
        where = first_discrepancy(check.lhs, check.rhs, check.order)
        passed = where is None
    return VerificationReport(entry.id, params, check.order,
                              "pass" if passed else "fail", where,
                              time.perf_counter() - started, entry.status,
                              note=check.note)


def runs_for_entry(entry, given_params, order_flag, config):
    """Yield (params, order) pairs for one entry."""
    order = order_flag
    if order is None and entry.order_key is not None:
        order = config[entry.order_key]
    if given_params is None:
        for defaults in entry.defaults:
            yield dict(defaults), order
        return
    allowed = set()
    for defaults in entry.defaults:
        allowed.update(defaults)
    unknown = set(given_params) - allowed
    if unknown:
        raise ValueError(f"unknown parameter for {entry.id}: "
                         + ", ".join(sorted(unknown)))
    merged = dict(entry.defaults[0])
    merged.update(given_params)
    yield merged, order


def write_json(path, payload):
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def report_sort_key(report):
    return (report.id, sorted(report.params.items()))


def cmd_list(args, config):
    entries = catalog()
    width = max(len(e) for e in entries)
    for eid in sorted(entries):
        entry = entries[eid]
        print(f"{eid.ljust(width)}  {entry.status.ljust(11)}  "
              f"{entry.description}")
    return 0


def cmd_verify(args, config):
    entries = catalog()
    if args.id not in entries:
        print(f"unknown id: {args.id}", file=sys.stderr)
        return 2
    entry = entries[args.id]
    given = parse_params(args.param) if args.param else None
    reports = [run_entry(entry, params, order, config)
               for params, order in runs_for_entry(entry, given,
                                                   args.order, config)]
    reports.sort(key=report_sort_key)
    for report in reports:
        print(report.line())
    if args.json:
        write_json(args.json, {"reports": [r.json_dict() for r in reports]})
    return 0 if all(r.status == "pass" for r in reports) else 1


def cmd_verify_all(args, config):
    entries = catalog()
    reports = []
    for eid in sorted(entries):
        entry = entries[eid]
        if args.suite != "all" and entry.status != args.suite:
            continue
        for params, order in runs_for_entry(entry, None, None, config):
            report = run_entry(entry, params, order, config)
            reports.append(report)
            print(report.line())
    reports.sort(key=report_sort_key)
    counts = {"pass": 0, "fail": 0, "non-convergent": 0}
    for report in reports:
        counts[report.status] += 1
    print(f"ran {len(reports)} checks: {counts['pass']} pass, "
          f"{counts['fail']} fail, {counts['non-convergent']} non-convergent")
    if args.json:
        write_json(args.json, {"reports": [r.json_dict() for r in reports]})
    return 0 if counts["fail"] == 0 and counts["non-convergent"] == 0 else 1


def cmd_expand(args, config):
    spec = ProductSpec.parse(args.spec)
    series = spec.expand(args.order)
    print(spec.text)
    for k in range(series.low, args.order + 1):
        print(f"q^{k}: {series.coefficient(k)}")
    if args.json:
        write_json(args.json, {
            "spec": spec.text,
            "order": args.order,
            "coefficients": [[k, series.coefficient(k)]
                             for k in range(series.low, args.order + 1)],
        })
    return 0


def cmd_oracle_check(args, config):
    if args.profile not in partition_oracle.PROFILES:
        print(f"unknown profile: {args.profile}", file=sys.stderr)
        return 2
    profile = partition_oracle.PROFILES[args.profile]
    count = partition_oracle.count_partitions(profile, args.size,
                                              args.max_part)
    print(f"{args.profile}: {count} partitions of {args.size} "
          f"with parts <= {args.max_part}")
    matched = None
    if args.profile == "gap23":
        series = kr_finite(4, args.max_part, window=args.size)
        coeff = series.coefficient(args.size)
        matched = coeff == count
        print(f"family 4 coefficient of q^{args.size}: {coeff} "
              f"({'match' if matched else 'MISMATCH'})")
    if args.json:
        write_json(args.json, {
            "profile": args.profile,
            "max_part": args.max_part,
            "size": args.size,
            "count": count,
            "series_match": matched,
        })
    return 0 if matched in (None, True) else 1


def cmd_positivity(args, config):
    order = args.order if args.order is not None \
        else config["positivity_order"]
    scan = positivity_scan(order)
    bad = 0
    for (i, c, form), where in sorted(scan.items()):
        label = f"family {i}, class {c} mod 3, form {form}"
        if where is None:
            print(f"{label}: nonnegative through q^{order}")
        else:
            bad += 1
            print(f"{label}: first negative coefficient at q^{where}")
    if args.json:
        write_json(args.json, {
            "order": order,
            "combos": {f"{i}-{c}mod3-{form}": where
                       for (i, c, form), where in scan.items()},
        })
    return 0 if bad == 0 else 1


def _common(parser):
    # the same options are accepted before or after the subcommand;
    # SUPPRESS keeps the subparser from clobbering a value the root
    # parser already set
    parser.add_argument("--json", metavar="PATH",
                        default=argparse.SUPPRESS,
                        help="also write results as JSON")
    parser.add_argument("--config", metavar="PATH",
                        default=argparse.SUPPRESS,
                        help="key=value file overriding default orders")
    return parser


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qreflect",
        description="verify finite and reflected sum-product identities")
    parser.add_argument("--json", metavar="PATH", default=None,
                        help="also write results as JSON")
    parser.add_argument("--config", metavar="PATH", default=None,
                        help="key=value file overriding default orders")
    sub = parser.add_subparsers(dest="command", required=True)

    _common(sub.add_parser("list", help="list catalog entries"))

    p = _common(sub.add_parser("verify", help="run one catalog entry"))
    p.add_argument("id")
    p.add_argument("--param", action="append", default=[],
                   metavar="KEY=VALUE", help="override an entry parameter")
    p.add_argument("--order", type=int,
                   help="override the comparison order")

    p = _common(sub.add_parser("verify-all", help="run a suite of entries"))
    p.add_argument("--suite", choices=("proved", "conjectural", "all"),
                   default="all")

    p = _common(sub.add_parser("expand",
                                help="expand a product given in text form"))
    p.add_argument("spec")
    p.add_argument("--order", type=int, required=True)

    p = _common(sub.add_parser("oracle-check",
                                help="count constrained partitions directly"))
    p.add_argument("profile")
    p.add_argument("--max-part", type=int, required=True)
    p.add_argument("--size", type=int, required=True)

    p = _common(sub.add_parser(
        "positivity",
        help="check signs of the theta-quotient combinations"))
    p.add_argument("--order", type=int)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "list": cmd_list,
        "verify": cmd_verify,
        "verify-all": cmd_verify_all,
        "expand": cmd_expand,
        "oracle-check": cmd_oracle_check,
        "positivity": cmd_positivity,
    }
    try:
        config = load_config(args.config) if args.config else DEFAULT_CONFIG
        return handlers[args.command](args, config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
