"""Command-line front end.

Exit codes: 0 decision made, 1 ``--expect`` mismatch or failed verification,
2 invalid input (including resource caps), 3 the two deciders disagreed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .affine import (
    FunctionSystem,
    RelationCertificate,
    decide_free,
    normalize_offsets,
    orbit_density,
    prime_fast_path,
    verify_relation,
)
from .collision import (
    CollisionWitness,
    count_expansions,
    decide_unique,
    verify_collision_witness,
)
from .config import load_config
from .counting import b_sequence, cascade, fourier_probe
from .cutset import (
    CutCertificate,
    UncutPath,
    has_cut_set,
    verify_cut_certificate,
    verify_uncut_path,
)
from .digitset import DigitSystem, composite_family, normalize, validate
from .errors import DeciderDisagreement, InputError
from .polynomial import cyclotomic, digit_polynomial
from .sweeps import agreement_sweep

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2, 3

# b(k) <= 1 is spot-checked on [0, n^j) for the largest j with n^j <= this
SPOT_CHECK_CELLS = 3**8


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _certificate_from_json(obj):
    kind = obj.get("type")
    if kind == "cutset":
        return CutCertificate.from_json(obj)
    if kind == "uncut_path":
        return UncutPath.from_json(obj)
    if kind == "collision":
        return CollisionWitness.from_json(obj)
    if kind == "relation":
        return RelationCertificate.from_json(obj)
    raise InputError(f"unknown certificate type {kind!r}")


def _spot_level(base):
    j = 0
    while base ** (j + 1) <= SPOT_CHECK_CELLS:
        j += 1
    return j


# -- uniqueness documents ---------------------------------------------------


def unique_checks(doc):
    """Cross-checks for a uniqueness document, recomputed from the document alone."""
    ds = DigitSystem.from_json(doc["system"])
    unique = doc["decision"] == "unique"
    checks = []
    carry = decide_unique(ds)
    checks.append(("carry_automaton_agrees", carry.unique == unique))
    certs = [doc["certificate"]] + doc.get("supporting_certificates", [])
    for obj in certs:
        if obj is None:
            continue
        cert = _certificate_from_json(obj)
        if isinstance(cert, CutCertificate):
            checks.append(("cut_certificate_verified", unique and verify_cut_certificate(ds, cert)))
        elif isinstance(cert, UncutPath):
            checks.append(("uncut_path_verified", not unique and verify_uncut_path(ds, cert)))
        elif isinstance(cert, CollisionWitness):
            ok = not unique and verify_collision_witness(ds, cert)
            checks.append(("collision_witness_verified", ok))
            checks.append(("witness_counted_twice", count_expansions(ds, cert.number) >= 2))
    if ds.size == ds.base:
        checks.append(("cutset_agrees", has_cut_set(ds).unique == unique))
    if unique:
        j = _spot_level(ds.base)
        spot = all(v <= 1 for v in b_sequence(ds, j).values)
        checks.append((f"b_at_most_one_below_{ds.base}^{j}", spot))
    return [{"name": name, "passed": bool(ok)} for name, ok in checks]


def unique_document(ds, normalized=None):
    doc = {
        "tool_version": __version__,
        "command": "unique",
        "input": ds.to_json() if normalized is None else normalized[0].to_json(),
    }
    if normalized is not None:
        doc["normalization"] = normalized[1].to_json()
    doc["system"] = ds.to_json()
    carry = decide_unique(ds)
    supporting = []
    certificate = None
    if ds.size == ds.base:
        cut = has_cut_set(ds)
        if cut.unique != carry.unique:
            raise DeciderDisagreement(
                f"{ds}: cut set says unique={cut.unique}, carry automaton says unique={carry.unique}"
            )
        if cut.unique:
            certificate = cut.certificate.to_json()
        else:
            supporting.append(cut.uncut_path.to_json())
    if not carry.unique:
        certificate = carry.witness.to_json()
    doc["decision"] = "unique" if carry.unique else "not_unique"
    doc["certificate"] = certificate
    doc["supporting_certificates"] = supporting
    doc["cross_checks"] = unique_checks(doc)
    return doc


# -- freeness documents -----------------------------------------------------


def free_checks(doc):
    fs = FunctionSystem.from_json(doc["input"])
    free = doc["decision"] == "free"
    core = normalize_offsets(fs).core
    checks = [("carry_automaton_agrees", decide_unique(core).unique == free)]
    obj = doc["certificate"]
    if obj is not None:
        cert = _certificate_from_json(obj)
        if isinstance(cert, RelationCertificate):
            checks.append(("relation_verified", not free and verify_relation(fs, cert)))
        elif isinstance(cert, CutCertificate):
            checks.append(("cut_certificate_verified", free and verify_cut_certificate(core, cert)))
    elif not free:
        checks.append(("relation_verified", False))
    if len(fs.maps) == fs.slope:
        try:
            checks.append(("prime_fast_path_agrees", prime_fast_path(fs) == free))
        except InputError:
            pass
    return [{"name": name, "passed": bool(ok)} for name, ok in checks]


def free_document(fs, config):
    decision = decide_free(fs, config)
    if len(fs.maps) == fs.slope:
        try:
            fast = prime_fast_path(fs)
        except InputError:
            fast = None
        if fast is not None and fast != decision.free:
            raise DeciderDisagreement(f"prime fast path says free={fast}, decide_free says {decision.free}")
    cert = decision.certificate or decision.cut_certificate
    doc = {
        "tool_version": __version__,
        "command": "free",
        "input": fs.to_json(),
        "normalization": decision.normalization.to_json(),
        "decision": "free" if decision.free else "not_free",
        "certificate": None if cert is None else cert.to_json(),
    }
    doc["cross_checks"] = free_checks(doc)
    return doc


def verify_document(doc):
    """Recompute cross-checks; True iff they are all true and match the stored ones."""
    if doc.get("command") == "unique":
        fresh = unique_checks(doc)
    elif doc.get("command") == "free":
        fresh = free_checks(doc)
    else:
        raise InputError(f"unknown document command {doc.get('command')!r}")
    return fresh, fresh == doc.get("cross_checks") and all(c["passed"] for c in fresh)


# -- output helpers ---------------------------------------------------------


def _csv_text(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(x) if isinstance(x, float) else str(x) for x in row])
    return buf.getvalue()


def _emit_table(args, header, rows, payload):
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            fh.write(_csv_text(header, rows))
    if args.json:
        sys.stdout.write(dumps(payload))
    elif not args.csv:
        sys.stdout.write(_csv_text(header, rows))


def _emit_doc(args, doc):
    text = dumps(doc)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)


def _digit_system(args):
    ds = validate(args.base, args.digits)
    if getattr(args, "normalize", False):
        rec = normalize(ds)
        return rec.core, (ds, rec)
    return ds, None


# -- commands ---------------------------------------------------------------


def cmd_unique(args, config):
    ds, normalized = _digit_system(args)
    if not ds.has_zero():
        raise InputError("digits must include 0 (or pass --normalize)")
    doc = unique_document(ds, normalized)
    _emit_doc(args, doc)
    if args.expect and args.expect.replace("-", "_") != doc["decision"]:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_free(args, config):
    fs = FunctionSystem.of(args.slope, args.offsets)
    doc = free_document(fs, config)
    _emit_doc(args, doc)
    if args.expect and args.expect.replace("-", "_") != doc["decision"]:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args, config):
    with open(args.document) as fh:
        doc = json.load(fh)
    fresh, ok = verify_document(doc)
    sys.stdout.write(dumps({"cross_checks": fresh, "verified": ok}))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_bseq(args, config):
    ds, _ = _digit_system(args)
    bs = b_sequence(ds, args.level, config)
    payload = {"system": ds.to_json(), "level": bs.level, "values": list(bs.values)}
    _emit_table(args, ["k", "b"], bs.rows(), payload)
    return EXIT_OK


def cmd_cascade(args, config):
    ds, _ = _digit_system(args)
    cf = cascade(ds, args.level, config)
    payload = {"system": ds.to_json(), "level": cf.level, "heights": list(cf.heights)}
    _emit_table(args, ["left_endpoint", "height"], cf.rows(), payload)
    return EXIT_OK


def cmd_fourier(args, config):
    ds = validate(args.base, args.digits)
    ms = [args.m] if args.m_max is None else list(range(args.m if args.m is not None else 1, args.m_max + 1))
    if ms == [None]:
        raise InputError("give --m or --m-max")
    estimates = [fourier_probe(ds, m, args.depth) for m in ms]
    payload = {
        "system": ds.to_json(),
        "depth": args.depth,
        "vanish_tol": config.vanish_tol,
        "visible_tol": config.visible_tol,
        "estimates": [
            {"m": e.frequency, "re": e.value.real, "im": e.value.imag, "abs": abs(e.value),
             "vanishes": abs(e.value) < config.vanish_tol}
            for e in estimates
        ],
    }
    if args.m_max is None and not args.csv:
        args.json = True
    _emit_table(args, ["m", "re", "im", "abs"], [e.row() for e in estimates], payload)
    return EXIT_OK


def cmd_density(args, config):
    fs = FunctionSystem.of(args.slope, args.offsets, args.seeds)
    report = orbit_density(fs, args.limit)
    payload = {"input": fs.to_json(), **report.to_json()}
    if not args.csv:
        args.json = True
    _emit_table(args, ["T", "density", "density_float"], report.rows(), payload)
    return EXIT_OK


def cmd_composite(args, config):
    sys.stdout.write(dumps(composite_family(args.n1, args.n2).to_json()))
    return EXIT_OK


def cmd_poly(args, config):
    if args.cyclotomic is not None:
        if args.cyclotomic < 1:
            raise InputError("cyclotomic order must be >= 1")
        out = {"cyclotomic": args.cyclotomic, "coefficients": cyclotomic(args.cyclotomic).to_json()}
    else:
        if args.base is None or args.digits is None:
            raise InputError("give --base and --digits, or --cyclotomic")
        ds = validate(args.base, args.digits)
        out = {"system": ds.to_json(), "coefficients": digit_polynomial(ds).to_json()}
    sys.stdout.write(dumps(out))
    return EXIT_OK


def cmd_sweep(args, config):
    res = agreement_sweep(args.bases, args.max_digit, jobs=args.jobs)
    sys.stdout.write(dumps({"bases": args.bases, "max_digit": args.max_digit, **res.to_json()}))
    return EXIT_DISAGREE if res.disagreements else EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="uniqexp", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--config", help="JSON file overriding resource caps and tolerances")
    sub = p.add_subparsers(dest="command", required=True)

    def digits_args(sp, normalize_flag=True):
        sp.add_argument("--base", type=int, required=True)
        sp.add_argument("--digits", type=int_list, required=True)
        if normalize_flag:
            sp.add_argument("--normalize", action="store_true",
                            help="shift the smallest digit to 0 and divide out the gcd first")

    def table_args(sp):
        sp.add_argument("--csv", metavar="PATH", help="write CSV to PATH")
        sp.add_argument("--json", action="store_true", help="print JSON to stdout")

    sp = sub.add_parser("unique", help="decide uniqueness of expansions")
    digits_args(sp)
    sp.add_argument("--expect", choices=["unique", "not-unique"])
    sp.add_argument("--out", metavar="PATH", help="also write the decision document here")
    sp.add_argument("--json", action="store_true", help="JSON output (the default)")
    sp.set_defaults(func=cmd_unique)

    sp = sub.add_parser("free", help="decide freeness of x -> slope*x + offset maps")
    sp.add_argument("--slope", type=int, required=True)
    sp.add_argument("--offsets", type=int_list, required=True)
    sp.add_argument("--expect", choices=["free", "not-free"])
    sp.add_argument("--out", metavar="PATH", help="also write the decision document here")
    sp.add_argument("--json", action="store_true", help="JSON output (the default)")
    sp.set_defaults(func=cmd_free)

    sp = sub.add_parser("verify", help="re-check a decision document")
    sp.add_argument("document")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bseq", help="expansion counts b(0..n^level - 1)")
    digits_args(sp)
    sp.add_argument("--level", type=int, required=True)
    table_args(sp)
    sp.set_defaults(func=cmd_bseq)

    sp = sub.add_parser("cascade", help="cascade step function at a level")
    digits_args(sp)
    sp.add_argument("--level", type=int, required=True)
    table_args(sp)
    sp.set_defaults(func=cmd_cascade)

    sp = sub.add_parser("fourier", help="Fourier probe of the refinable measure")
    digits_args(sp, normalize_flag=False)
    sp.add_argument("--m", type=int, help="frequency (start of range with --m-max)")
    sp.add_argument("--m-max", type=int, help="sweep m..m-max")
    sp.add_argument("--depth", type=int, default=40)
    table_args(sp)
    sp.set_defaults(func=cmd_fourier)

    sp = sub.add_parser("density", help="truncated density of an orbit set")
    sp.add_argument("--slope", type=int, required=True)
    sp.add_argument("--offsets", type=int_list, required=True)
    sp.add_argument("--seeds", type=int_list, default=[0])
    sp.add_argument("--limit", type=int, required=True, help="window [0, LIMIT]")
    table_args(sp)
    sp.set_defaults(func=cmd_density)

    sp = sub.add_parser("composite", help="composite-base digit family")
    sp.add_argument("--n1", type=int, required=True)
    sp.add_argument("--n2", type=int, required=True)
    sp.set_defaults(func=cmd_composite)

    sp = sub.add_parser("poly", help="dump a digit or cyclotomic polynomial")
    sp.add_argument("--base", type=int)
    sp.add_argument("--digits", type=int_list)
    sp.add_argument("--cyclotomic", type=int)
    sp.set_defaults(func=cmd_poly)

    sp = sub.add_parser("sweep", help="cut set vs carry automaton on all n-digit systems")
    sp.add_argument("--bases", type=int_list, default=[2, 3, 4, 5])
    sp.add_argument("--max-digit", type=int, default=20)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_sweep)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        return args.func(args, config)
    except DeciderDisagreement as exc:
        print(f"internal error: deciders disagree: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except (InputError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
