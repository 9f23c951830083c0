"""Command-line front end.

Verbs:
  validate-rack  check a rack matrix file / text
  rack-rank      rack rank and per-element ranks of a rack
  make-tsrack    build a (t,s)-rack from a spec and print its matrix
  iso-check      decide isomorphism of two racks
  invariant      compute one invariant of one link
  table          compute an invariant for a list of links, grouped by value

Rack sources are either inline JSON specs like
{"type":"linear","n":4,"t":1,"s":2} or paths to files holding a JSON spec
or a rack-matrix text (first line n, then n rows).  Exit codes: 0 success,
2 parse error, 3 structure validation error, 4 internal error.
"""

import argparse
import concurrent.futures
import hashlib
import json
import os
import sys
import tempfile

from . import __version__
from .errors import ParseError, ToolkitError, ValidationError
from .diagrams import parse_link
from .invariants import (
    additive_enhanced,
    counting_invariant,
    recover_counting_from_additive,
    recover_counting_from_s,
    s_enhanced,
    writhe_enhanced,
)
from .modules import TSRack, tsrack_from_spec, tsrack_iso_check
from .polynomials import order_compare
from .racks import find_isomorphism, rack_from_text, rack_rank

CACHE_ENV = "TSRACKS_CACHE_DIR"
KINDS = ("count", "writhe", "additive", "s-enh")


class _RackSource:
    def __init__(self, text):
        self.text = text.strip()
        self.tsrack = None
        self.matrix_rack = None
        body = self.text
        if os.path.exists(body) and not body.startswith("{"):
            with open(body) as fh:
                body = fh.read().strip()
        if body.startswith("{"):
            try:
                spec = json.loads(body)
            except json.JSONDecodeError as exc:
                raise ParseError("bad rack spec JSON: %s" % exc) from exc
            self.tsrack = tsrack_from_spec(spec)
            self.spec = self.tsrack.spec if self.tsrack.spec else spec
        else:
            self.matrix_rack = rack_from_text(body)
            self.spec = {"type": "matrix", "matrix":
                         [list(r) for r in self.matrix_rack.op_matrix]}

    @property
    def rack(self):
        return self.tsrack if self.tsrack is not None else self.matrix_rack

    def finite(self):
        if self.matrix_rack is not None:
            return self.matrix_rack
        return self.tsrack.to_finite_rack()

    def spec_hash(self):
        return hashlib.sha256(
            json.dumps(self.spec, sort_keys=True).encode()).hexdigest()


def _link_source(text):
    text = text.strip()
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read().strip()
    return text


def _compute_record(source, link_spec, kind, split_fibers=True):
    diagram = parse_link(link_spec)
    record = {
        "invariant": kind,
        "rack_spec": source.spec,
        "rack_spec_hash": source.spec_hash(),
        "link_spec": link_spec,
        "version": __version__,
        "polynomial": None,
        "polynomial_text": None,
        "multiset": None,
    }
    if kind == "count":
        record["counting_value"] = counting_invariant(diagram, source.rack)
        return record
    if kind == "writhe":
        poly = writhe_enhanced(diagram, source.rack)
        record["polynomial"] = poly.to_record()
        record["polynomial_text"] = str(poly)
        record["counting_value"] = sum(c for _, _, c in poly.terms())
        return record
    if source.tsrack is None:
        raise ValidationError(
            "invariant kind %r needs a (t,s)-rack spec, not a bare matrix"
            % kind)
    if kind == "additive":
        poly, multiset = additive_enhanced(diagram, source.tsrack)
        record["counting_value"] = recover_counting_from_additive(poly)
    elif kind == "s-enh":
        poly, multiset = s_enhanced(diagram, source.tsrack,
                                    split_fibers=split_fibers)
        record["counting_value"] = recover_counting_from_s(poly)
    else:
        raise ValidationError("unknown invariant kind %r" % kind)
    record["polynomial"] = poly.to_record()
    record["polynomial_text"] = str(poly)
    record["multiset"] = multiset.to_record()
    return record


# -- result cache ----------------------------------------------------------


def _cache_dir(args):
    return args.cache_dir or os.environ.get(CACHE_ENV)


def _cache_key(record_inputs):
    return hashlib.sha256(
        json.dumps(record_inputs, sort_keys=True).encode()).hexdigest()


def cache_lookup(cache_dir, key):
    path = os.path.join(cache_dir, key + ".json")
    if not os.path.exists(path):
        return None
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError):
        print("warning: ignoring corrupt cache entry %s" % path,
              file=sys.stderr)
        return None


def cache_store(cache_dir, key, record):
    os.makedirs(cache_dir, exist_ok=True)
    path = os.path.join(cache_dir, key + ".json")
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(record, fh, sort_keys=True)
        os.replace(tmp, path)
    except OSError:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _cached_record(args, source, link_spec, kind):
    cache_dir = _cache_dir(args)
    key = None
    if cache_dir:
        key = _cache_key({
            "rack": source.spec, "link": link_spec, "kind": kind,
            "version": __version__,
        })
        hit = cache_lookup(cache_dir, key)
        if hit is not None:
            return hit
    record = _compute_record(source, link_spec, kind)
    if cache_dir:
        cache_store(cache_dir, key, record)
    return record


# -- output ----------------------------------------------------------------


def _emit_record(record, fmt):
    if fmt == "json-like":
        print(json.dumps(record, sort_keys=True))
        return
    print("invariant: %s" % record["invariant"])
    print("rack: %s" % json.dumps(record["rack_spec"], sort_keys=True))
    print("link: %s" % record["link_spec"])
    if record.get("polynomial_text") is not None:
        print("value: %s" % record["polynomial_text"])
    if record.get("multiset") is not None:
        entries = ", ".join(
            "%s x%d" % (entry, count) for entry, count in record["multiset"])
        print("multiset: %s" % entries)
    print("counting: %d" % record["counting_value"])


# -- verbs -------------------------------------------------------------------


def cmd_validate_rack(args):
    source = _RackSource(args.rack)
    rack = source.finite()
    n, _ = rack_rank(rack)
    print("valid rack on %d elements, rack rank %d" % (rack.n, n))
    return 0


def cmd_rack_rank(args):
    source = _RackSource(args.rack)
    rack = source.finite()
    n, per = rack_rank(rack)
    print("rack rank: %d" % n)
    print("per-element: %s" % " ".join(str(v) for v in per))
    return 0


def cmd_make_tsrack(args):
    source = _RackSource(args.rack)
    if source.tsrack is None:
        raise ValidationError("make-tsrack needs a (t,s)-rack spec")
    x = source.tsrack
    rack = x.to_finite_rack()
    print("order: %d" % x.order)
    print("rack rank: %d" % x.rack_rank())
    print("alexander quandle: %s" % ("yes" if x.is_alexander() else "no"))
    print("elements (lexicographic):")
    for i, v in enumerate(x.carrier, start=1):
        print("  x_%d = %s" % (i, list(v)))
    print("rack matrix:")
    print(rack.to_text(), end="")
    return 0


def cmd_iso_check(args):
    a = _RackSource(args.rack)
    b = _RackSource(args.rack2)
    if a.tsrack is not None and b.tsrack is not None:
        cert = tsrack_iso_check(a.tsrack, b.tsrack)
        if cert is None:
            print("not isomorphic")
            return 0
        print("isomorphic")
        print("submodule isomorphism h on sX:")
        for k in sorted(cert.h):
            print("  %s -> %s" % (list(k), list(cert.h[k])))
        print("coset representatives A: %s"
              % [list(v) for v in cert.coset_reps_a])
        print("coset representatives B: %s"
              % [list(v) for v in cert.coset_reps_b])
        print("orbit bijection g:")
        for k in sorted(cert.g):
            print("  %s -> %s" % (list(k), list(cert.g[k])))
        print("assembled rack isomorphism phi:")
        for k in sorted(cert.phi):
            print("  %s -> %s" % (list(k), list(cert.phi[k])))
        return 0
    f = find_isomorphism(a.finite(), b.finite())
    if f is None:
        print("not isomorphic")
    else:
        print("isomorphic")
        print("witness: %s" % json.dumps(f, sort_keys=True))
    return 0


def cmd_invariant(args):
    source = _RackSource(args.rack)
    link_spec = _link_source(args.link)
    record = _cached_record(args, source, link_spec, args.kind)
    _emit_record(record, args.format)
    return 0


def cmd_table(args):
    source = _RackSource(args.rack)
    with open(args.links) as fh:
        lines = [ln.strip() for ln in fh]
    jobs = []
    for ln in lines:
        if not ln or ln.startswith("#"):
            continue
        name, _, spec = ln.partition(" ")
        jobs.append((name, spec.strip()))

    def run(job):
        name, spec = job
        try:
            return name, _cached_record(args, source, spec, args.kind), None
        except ToolkitError as exc:
            return name, None, str(exc)

    groups = {}
    failures = []
    with concurrent.futures.ThreadPoolExecutor(max_workers=4) as pool:
        for name, record, error in pool.map(run, jobs):
            if error is not None:
                failures.append((name, error))
                continue
            value = record.get("polynomial_text")
            if value is None:
                value = str(record["counting_value"])
            groups.setdefault(value, []).append(name)

    rows = sorted(groups.items(), key=lambda kv: sorted(kv[1]))
    width = max((len(v) for v, _ in rows), default=0)
    for value, names in rows:
        print("%-*s | %s" % (width, value, ", ".join(sorted(names))))
    if args.strict_order is not None and len(rows) > 1:
        print()
        print("ordering obstructions (%s reading):"
              % ("strict" if args.strict_order else "weak"))
        from .polynomials import parse_u_polynomial

        for i, (va, na) in enumerate(rows):
            for vb, nb in rows[i + 1:]:
                try:
                    pa, pb = parse_u_polynomial(va), parse_u_polynomial(vb)
                except ValueError:
                    continue
                rel = order_compare(pa, pb, strict=args.strict_order)
                print("  {%s} vs {%s}: %s"
                      % (", ".join(sorted(na)), ", ".join(sorted(nb)), rel))
    for name, error in failures:
        print("failed: %s: %s" % (name, error), file=sys.stderr)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tsracks",
        description="finite racks, (t,s)-racks and link invariants")
    parser.add_argument("--cache-dir", default=None,
                        help="result cache directory (or $%s)" % CACHE_ENV)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate-rack", help="check a rack matrix")
    p.add_argument("--rack", required=True)
    p.set_defaults(func=cmd_validate_rack)

    p = sub.add_parser("rack-rank", help="rack rank of a rack")
    p.add_argument("--rack", required=True)
    p.set_defaults(func=cmd_rack_rank)

    p = sub.add_parser("make-tsrack", help="build and print a (t,s)-rack")
    p.add_argument("--rack", required=True)
    p.set_defaults(func=cmd_make_tsrack)

    p = sub.add_parser("iso-check", help="decide rack isomorphism")
    p.add_argument("--rack", required=True)
    p.add_argument("--rack2", required=True)
    p.set_defaults(func=cmd_iso_check)

    p = sub.add_parser("invariant", help="compute one invariant")
    p.add_argument("--rack", required=True)
    p.add_argument("--link", required=True)
    p.add_argument("--kind", choices=KINDS, default="count")
    p.add_argument("--format", choices=("table", "json-like"),
                   default="table")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("table", help="tabulate an invariant over links")
    p.add_argument("--rack", required=True)
    p.add_argument("--links", required=True,
                   help="file with one 'name spec' per line")
    p.add_argument("--kind", choices=KINDS, default="additive")
    p.add_argument("--format", choices=("table", "json-like"),
                   default="table")
    p.add_argument("--strict-order", action="store_true", default=None,
                   help="report ordering obstructions between rows using "
                        "the strict coefficientwise reading")
    p.add_argument("--weak-order", dest="strict_order", action="store_false",
                   help="report ordering obstructions using the weak "
                        "(>= everywhere, > somewhere) reading")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 2
    except ValidationError as exc:
        print("validation error: %s" % exc, file=sys.stderr)
        return 3
    except (AssertionError, ToolkitError) as exc:
        print("internal error: %s" % exc, file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
