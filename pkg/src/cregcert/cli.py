"""Command-line entry point.

Subcommands: construct, analyze, certify, classify, enumerate-designs,
aut.  Exit codes: 0 when every certificate passes, 1 when a certificate
fails, 2 for usage or I/O errors.  Reports are deterministic given the
same inputs and configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .certs import SCHEMA, fraction_str
from .classify import (
    SUPPORTED,
    build_report,
    certify_theorem,
    classify,
    report_json,
)
from .codes import Code, CodeFormatError
from .designs import enumerate_designs, t_design_lambda
from .hadamard import code_of, paley_hadamard_12
from .regularity import certify_completely_regular, certify_completely_transitive
from .spectral import certify_uniformly_packed, external_distance, macwilliams_transform
from .symmetry import (
    DEFAULT_ELEMENT_BUDGET,
    GroupHandle,
    ResourceBudgetError,
    code_automorphism_group,
    format_automorphism,
    parse_automorphism,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_code(path: str) -> Code:
    with open(path, "r", encoding="utf-8") as fh:
        return Code.from_text(fh.read())


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="output file (default: standard output)")
    parser.add_argument("--report", help="write a JSON report to this path")
    parser.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker budget; results are identical for any value",
    )
    parser.add_argument(
        "--element-budget",
        type=int,
        default=DEFAULT_ELEMENT_BUDGET,
        help="maximum enumerated group elements before aborting",
    )


def _validate_common(args) -> None:
    if args.threads < 1:
        raise ValueError("--threads must be at least 1")
    if args.element_budget < 1:
        raise ValueError("--element-budget must be at least 1")


def cmd_construct(args) -> int:
    if args.target == "hadamard12":
        _write_output(paley_hadamard_12().to_text(), args.out)
        return EXIT_OK
    code = code_of(paley_hadamard_12())
    if args.target == "code11":
        code = code.puncture(1)
    header = (
        f"# ({code.length},{code.size},{code.min_distance}) "
        f"{'Hadamard 12 code' if args.target == 'code12' else 'punctured Hadamard 12 code'}\n"
    )
    _write_output(header + code.to_text(), args.out)
    return EXIT_OK


def _analysis_payload(code: Code) -> dict:
    dist = code.distance_distribution
    packed = certify_uniformly_packed(code)
    payload = {
        "schema": SCHEMA,
        "kind": "analysis",
        "length": code.length,
        "size": code.size,
        "min_distance": code.min_distance if code.size >= 2 else None,
        "covering_radius": code.covering_radius,
        "distance_distribution": [fraction_str(v) for v in dist],
        "macwilliams_transform": [
            fraction_str(v) for v in macwilliams_transform(dist)
        ],
        "external_distance": external_distance(code),
        "uniformly_packed": packed.satisfied,
        "packing_weights": [fraction_str(v) for v in packed.lambdas]
        if packed.lambdas
        else None,
        "packing_note": packed.note,
        "antipodal": code.is_antipodal(),
        "cell_sizes": list(code.distance_partition().cell_sizes()),
        "weight_classes": {},
    }
    if code.size >= 2:
        t = code.min_distance // 2
        for k in range(code.length + 1):
            wc = code.weight_class(k)
            if wc and 0 < k and t <= k:
                payload["weight_classes"][str(k)] = {
                    "size": len(wc),
                    "strength": t,
                    "index": t_design_lambda(wc, code.length, t),
                }
        if all(w.bit_count() % 2 == 0 for w in code.words):
            # consistency note for even-weight codes: twice the external
            # distance less two against the minimum distance
            payload["even_weight_consistency"] = {
                "two_s_minus_two": 2 * payload["external_distance"] - 2,
                "min_distance": code.min_distance,
            }
    return payload


def cmd_analyze(args) -> int:
    code = _load_code(args.codefile)
    payload = _analysis_payload(code)
    lines = [
        f"length {payload['length']}, {payload['size']} codewords",
        f"minimum distance: {payload['min_distance']}",
        f"covering radius:  {payload['covering_radius']}",
        f"external distance: {payload['external_distance']}",
        f"antipodal: {payload['antipodal']}",
        f"uniformly packed (wide sense): {payload['uniformly_packed']}",
        f"distance distribution: {payload['distance_distribution']}",
        f"transform: {payload['macwilliams_transform']}",
        f"cell sizes: {payload['cell_sizes']}",
    ]
    for k, info in payload["weight_classes"].items():
        lines.append(
            f"weight-{k} class: {info['size']} words, "
            f"{info['strength']}-design index {info['index']}"
        )
    _write_output("\n".join(lines) + "\n", args.out)
    if args.report:
        _write_output(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.report)
    return EXIT_OK


def cmd_certify(args) -> int:
    code = _load_code(args.codefile)
    if args.which == "creg":
        result = certify_completely_regular(code)
        cert = result.to_certificate(code)
        lines = [f"completely regular: {cert.verdict}"]
        if result.completely_regular:
            lines.append(f"covering radius: {result.covering_radius}")
            lines.append("intersection table (cells x radii):")
            for i, row in enumerate(result.intersection_table):
                lines.append(f"  cell {i}: {list(row)}")
        else:
            lines.append(f"counterexample: {cert.witness}")
        certs = [cert]
    elif args.which == "ct":
        if args.generators:
            with open(args.generators, "r", encoding="utf-8") as fh:
                gens = tuple(
                    parse_automorphism(ln)
                    for ln in fh.read().splitlines()
                    if ln.strip()
                )
            group = GroupHandle(code.length, gens)
        else:
            group = code_automorphism_group(code, args.element_budget)
        cert = certify_completely_transitive(code, group)
        lines = [
            f"completely transitive: {cert.verdict}",
            f"orbit sizes: {cert.witness.get('orbit_sizes')}",
            f"cell sizes:  {cert.witness.get('cell_sizes')}",
        ]
        certs = [cert]
    else:  # theorem
        pairs = {(12, 6), (11, 5)}
        key = (code.length, code.min_distance)
        if key not in pairs:
            raise ValueError(f"theorem certification supports {sorted(pairs)}")
        certs = certify_theorem(*key, element_budget=args.element_budget)
        lines = [f"{c.anchor}: {c.verdict}" for c in certs]
    _write_output("\n".join(lines) + "\n", args.out)
    if args.report:
        payload = {
            "schema": SCHEMA,
            "kind": f"certify-{args.which}",
            "steps": [c.to_dict() for c in certs],
        }
        _write_output(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.report)
    return EXIT_OK if all(c.passed for c in certs) else EXIT_FAIL


def cmd_classify(args) -> int:
    if (args.length, args.min_distance) not in SUPPORTED:
        raise ValueError(
            f"classification supports {sorted(SUPPORTED)}, "
            f"got ({args.length}, {args.min_distance})"
        )
    started = time.monotonic()
    run = classify(args.length, args.min_distance, args.size_bound)
    theorem = (
        certify_theorem(args.length, args.min_distance, args.element_budget)
        if run.passed
        else []
    )
    runtime = round(time.monotonic() - started, 3)
    report = build_report(run, theorem, runtime_seconds=runtime)
    lines = [f"{c['anchor']}: {c['verdict']}" for c in report["steps"]]
    lines.append(f"verdict: {report['verdict']}")
    if run.sigma:
        lines.append(f"sigma: {list(run.sigma)}")
    _write_output("\n".join(lines) + "\n", args.out)
    if args.report:
        _write_output(report_json(report), args.report)
    ok = run.passed and all(c.passed for c in theorem)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_enumerate_designs(args) -> int:
    classes = enumerate_designs(args.t, args.m, args.k, args.lam)
    lines = [f"{len(classes)} isomorphism class(es)"]
    out_text = []
    for d in classes:
        out_text.append(d.to_text())
        lines.extend("  " + " ".join(map(str, pts)) for pts in d.block_point_lists())
    _write_output("\n".join(lines) + "\n", None)
    if args.out:
        _write_output("".join(out_text), args.out)
    return EXIT_OK


def cmd_aut(args) -> int:
    code = _load_code(args.codefile)
    group = code_automorphism_group(code, args.element_budget)
    lines = [
        f"order: {group.order}",
        f"generators: {len(group.generators)}",
    ]
    _write_output("\n".join(lines) + "\n", None)
    gen_text = "".join(format_automorphism(g) + "\n" for g in group.generators)
    if args.out:
        _write_output(gen_text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cregcert",
        description=(
            "construct, analyze, and certify the completely regular codes "
            "of lengths 12 and 11"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="write the reference matrix or codes")
    p.add_argument("target", choices=["hadamard12", "code12", "code11"])
    _add_common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="parameters and transforms of a code file")
    p.add_argument("codefile")
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("certify", help="run a certifier against a code file")
    p.add_argument("codefile")
    p.add_argument("which", choices=["creg", "ct", "theorem"])
    p.add_argument("--generators", help="generator file for the ct certifier")
    _add_common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("classify", help="replay the uniqueness classification")
    p.add_argument("length", type=int)
    p.add_argument("min_distance", type=int)
    p.add_argument("--size-bound", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate-designs", help="isomorph-free design enumeration")
    p.add_argument("t", type=int)
    p.add_argument("m", type=int)
    p.add_argument("k", type=int)
    p.add_argument("lam", type=int, metavar="lambda")
    _add_common(p)
    p.set_defaults(func=cmd_enumerate_designs)

    p = sub.add_parser("aut", help="automorphism group of a code file")
    p.add_argument("codefile")
    _add_common(p)
    p.set_defaults(func=cmd_aut)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate_common(args)
        return args.func(args)
    except CodeFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError, ResourceBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
