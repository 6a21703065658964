"""Command-line front end.

Commands: analyze, dual, macwilliams, cyclic-check, skew-check,
skew-construct, gray, table1, search-phi.  Input codes, automorphisms and
expansion maps are JSON files (see the module docstrings for the wire
formats).  Reports go to stdout as text, or as JSON with --json.

Exit codes: 0 success/verified, 1 verification mismatch, 2 input error,
3 enumeration guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from .automorphisms import AutomorphismSpec
from .codes import (
    LinearCode,
    decompose,
    euclidean_dual,
    hamming_distance,
    hermitian_dual,
    is_hermitian_self_dual,
    is_self_dual,
    lee_distance,
)
from .cyclic import (
    SkewConstructionError,
    SkewShiftSpec,
    algorithm1_construct,
    is_quasi_cyclic,
    phi_image_code,
    psi_image_check,
    is_quasi_skew_cyclic,
    sigma_d,
    skew_shift,
)
from .gray import PhiSpec, psi_rows, psi_vec
from .ring import GuardExceeded, RingSpec, units
from .weights import (
    cwe,
    hamming_we,
    macwilliams_hamming,
    swe,
    verify_cwe_macwilliams,
    verify_swe_macwilliams,
)


# ---------------------------------------------------------------------------
# input / output plumbing
# ---------------------------------------------------------------------------

def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    except OSError as exc:
        raise ValueError(f"{path}: {exc.strerror}") from exc


def _load_code(path: str, guard: int | None) -> LinearCode:
    obj = _load_json(path)
    for key in ("m", "k", "n", "generators"):
        if key not in obj:
            raise ValueError(f"{path}: missing required key {key!r}")
    return LinearCode.from_json(obj, guard=guard)


def _load_theta(path: str, k: int) -> AutomorphismSpec:
    return AutomorphismSpec.from_json(k, _load_json(path))


def _fixture(name: str) -> dict:
    return json.loads(
        resources.files("ringcodes.fixtures").joinpath(name).read_text()
    )


def _word_str(w) -> str:
    return "(" + " ".join(repr(a) for a in w) + ")"


def _render(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(value, dict):
        for key, val in value.items():
            if isinstance(val, (dict, list)) and val and not _is_flat(val):
                lines.append(f"{pad}{key}:")
                lines.extend(_render(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_flat_str(val)}")
    elif isinstance(value, list):
        for val in value:
            if isinstance(val, (dict, list)) and val and not _is_flat(val):
                lines.append(f"{pad}-")
                lines.extend(_render(val, indent + 1))
            else:
                lines.append(f"{pad}- {_flat_str(val)}")
    else:
        lines.append(f"{pad}{_flat_str(value)}")
    return lines


def _is_flat(value) -> bool:
    if isinstance(value, list):
        return all(not isinstance(v, (dict, list)) for v in value)
    return False


def _flat_str(value) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(str(v) for v in value) + "]"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=False))
    else:
        print("\n".join(_render(report)))


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_analyze(args) -> int:
    C = _load_code(args.code, args.guard)
    report: dict = {
        "ring": repr(C.ring),
        "n": C.n,
        "size": len(C),
    }
    if C.generators:
        report["generators"] = [_word_str(g) for g in C.generators]
        report["generator_rows"] = [
            [list(r) for r in psi_rows(g)] for g in C.generators
        ]
    try:
        report["d_hamming"] = hamming_distance(C)
        report["d_lee"] = lee_distance(C)
    except ValueError as exc:
        report["d_hamming"] = report["d_lee"] = None
        report["distance_error"] = str(exc)
    comps = decompose(C)
    report["components"] = [
        {
            "size": len(comp),
            "d_hamming": hamming_distance(comp) if len(comp) > 1 else None,
            "words": [_word_str(w) for w in comp.words] if len(comp) <= 8 else None,
        }
        for comp in comps
    ]
    report["euclidean_self_dual"] = is_self_dual(C, guard=args.guard)
    report["hermitian_self_dual"] = is_hermitian_self_dual(C, guard=args.guard)
    _emit(report, args.json)
    return 0


def cmd_dual(args) -> int:
    C = _load_code(args.code, args.guard)
    D = (hermitian_dual if args.hermitian else euclidean_dual)(C, guard=args.guard)
    kind = "hermitian" if args.hermitian else "euclidean"
    report = {
        "kind": kind,
        "size": len(C),
        "dual_size": len(D),
        "product_law": len(C) * len(D) == C.ring.cardinality() ** C.n,
        "self_dual": C == D,
    }
    if len(D) <= 64:
        report["dual_words"] = [_word_str(w) for w in D.words]
    if args.json:
        report["dual"] = D.to_json()
    _emit(report, args.json)
    return 0


def cmd_macwilliams(args) -> int:
    C = _load_code(args.code, args.guard)
    report: dict = {"form": args.form, "size": len(C)}
    if args.form == "hamming":
        W = hamming_we(C)
        transformed = macwilliams_hamming(W, len(C), C.ring.cardinality())
        dual_we = hamming_we(euclidean_dual(C, guard=args.guard))
        verdict = transformed == dual_we
        report.update(
            {
                "code_we": list(W.counts),
                "transformed": list(transformed.counts),
                "dual_we": list(dual_we.counts),
            }
        )
    elif args.form == "cwe":
        verdict = verify_cwe_macwilliams(C, guard=args.guard)
        report["code_cwe"] = cwe(C).to_json()
        report["dual_cwe"] = cwe(euclidean_dual(C, guard=args.guard)).to_json()
    else:
        G = _group(C.ring, args.group)
        verdict = verify_swe_macwilliams(C, G, guard=args.guard)
        sw = swe(C, G)
        report["group"] = args.group
        report["class_reps"] = [repr(r) for r in sw.reps]
        report["code_swe"] = sw.to_json()["counts"]
    report["verdict"] = verdict
    _emit(report, args.json)
    return 0 if verdict else 1


def _group(ring: RingSpec, name: str):
    if name == "trivial":
        return [ring.one()]
    if name == "units":
        return units(ring)
    raise ValueError(f"unknown unit subgroup {name!r}")


def cmd_cyclic_check(args) -> int:
    C = _load_code(args.code, args.guard)
    verdict = is_quasi_cyclic(C, args.d)
    report = {
        "check": "quasi-cyclic",
        "inputs": {"code": args.code, "d": args.d},
        "verdict": verdict,
    }
    if not verdict:
        witness = next(w for w in C.words if sigma_d(w, args.d) not in C.wordset)
        report["witness"] = _word_str(witness)
        report["witness_shifted"] = _word_str(sigma_d(witness, args.d))
    _emit(report, args.json)
    return 0 if verdict else 1


def cmd_skew_check(args) -> int:
    C = _load_code(args.code, args.guard)
    theta = _load_theta(args.theta, C.ring.k)
    spec = SkewShiftSpec(n=C.n, d=args.d, theta=theta)
    direct = is_quasi_skew_cyclic(C, spec)
    via_image = psi_image_check(C, spec)
    if direct != via_image:
        raise RuntimeError(
            f"skew checks disagree (direct={direct}, image={via_image}); this is a bug"
        )
    report = {
        "check": "quasi-skew-cyclic",
        "inputs": {"code": args.code, "d": args.d, "theta": theta.to_json()},
        "verdict": direct,
        "splitting_image_check": via_image,
    }
    if not direct:
        witness = next(
            w for w in C.words if skew_shift(spec, w) not in C.wordset
        )
        report["witness"] = _word_str(witness)
        report["witness_shifted"] = _word_str(skew_shift(spec, witness))
    _emit(report, args.json)
    return 0 if direct else 1


def cmd_skew_construct(args) -> int:
    obj = _load_json(args.components)
    m = obj["m"]
    comps = [
        LinearCode.from_json({"m": m, "k": 0, "n": obj["n"], "generators": gens},
                             guard=args.guard)
        for gens in obj["components"]
    ]
    size = len(comps)
    if size & (size - 1):
        raise ValueError(f"number of components must be a power of two, got {size}")
    ring = RingSpec(m, size.bit_length() - 1)
    theta = _load_theta(args.theta, ring.k)
    try:
        C = algorithm1_construct(ring, obj["n"], args.d, theta, comps, guard=args.guard)
    except SkewConstructionError as exc:
        _emit({"certified": False, "violations": exc.violations}, args.json)
        return 1
    report = {
        "certified": True,
        "ring": repr(ring),
        "n": C.n,
        "size": len(C),
        "code": C.to_json(),
    }
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(report, fh, indent=2)
        print(f"wrote {args.out}")
    else:
        _emit(report, args.json)
    return 0


def cmd_gray(args) -> int:
    C = _load_code(args.code, args.guard)
    layout = args.layout.replace("-", "_")
    report: dict = {"map": args.map, "ring": repr(C.ring)}
    if args.map == "psi":
        targets = C.generators if C.generators else C.words
        report["layout"] = layout
        report["images"] = [
            {
                "word": _word_str(w),
                "rows": [list(r) for r in psi_rows(w)],
                "flat": list(psi_vec(w, layout)),
            }
            for w in targets
        ]
    else:
        spec = PhiSpec.from_json(C.ring.m, C.ring.k, _load_json(args.phi))
        image = phi_image_code(C, spec)
        report["phi"] = spec.to_json()
        report["image_length"] = image.n
        report["image_size"] = len(image)
        try:
            report["image_d_lee"] = lee_distance(image)
        except ValueError as exc:
            report["image_d_lee"] = None
            report["distance_error"] = str(exc)
        if len(image) <= 64:
            report["image_words"] = [_word_str(w) for w in image.words]
    _emit(report, args.json)
    return 0


def cmd_table1(args) -> int:
    fixture = _fixture("table1.json")
    rows = []
    failures = []
    for i, row in enumerate(fixture["rows"], start=1):
        C = LinearCode.from_json(row["code"], guard=args.guard)
        spec = PhiSpec.from_json(C.ring.m, C.ring.k, row["phi"])
        image = phi_image_code(C, spec)
        got = (lee_distance(image), len(image))
        expected = (row["d_lee"], row["size"])
        rows.append(
            {
                "row": i,
                "n": row["image_length"],
                "code": _word_str(C.generators[0]),
                "d_lee": got[0],
                "size": got[1],
                "expected": list(expected),
                "match": got == expected,
            }
        )
        if got != expected:
            failures.append(f"row {i}: got {got}, expected {expected}")
    report = {"rows": rows, "all_match": not failures}
    if failures:
        report["failures"] = failures
    _emit(report, args.json)
    return 0 if not failures else 1


def cmd_search_phi(args) -> int:
    C = _load_code(args.code, args.guard)
    if C.ring.k < 1:
        raise ValueError("the code must live at level >= 1 to expand")
    low = RingSpec(C.ring.m, C.ring.k - 1)
    pool = list(low.elements(args.guard))
    if args.coeff_range is not None:
        pool = pool[: args.coeff_range]
    if len(C) == 1:
        _emit({"skipped": "zero code (no Lee distance)"}, args.json)
        return 0
    from itertools import product as iproduct

    candidates = []
    width = args.l - 1
    total = len(pool) ** (2 * width)
    if args.guard is not None and total > args.guard:
        raise GuardExceeded(f"search space has {total} candidates (cap {args.guard})")
    for beta in iproduct(pool, repeat=width):
        for beta_prime in iproduct(pool, repeat=width):
            if not beta_prime[-1].is_unit():
                continue
            spec = PhiSpec(level=C.ring.k, beta=beta, beta_prime=beta_prime)
            image = phi_image_code(C, spec)
            candidates.append(
                (lee_distance(image), len(image), spec.to_json())
            )
    candidates.sort(key=lambda t: (-t[0], -t[1], json.dumps(t[2])))
    report = {
        "searched": len(candidates),
        "best": [
            {"d_lee": d, "size": s, "phi": spec}
            for d, s, spec in candidates[: args.top]
        ],
    }
    _emit(report, args.json)
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    # global flags live on a shared parent so they parse on either side of
    # the subcommand; SUPPRESS keeps the subparser from clobbering a value
    # given before it, real defaults are filled in by main()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--guard", type=int, default=argparse.SUPPRESS,
                        help="enumeration cap (default 2^24)")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--layout", choices=["interleaved", "component-major"],
                        default=argparse.SUPPRESS,
                        help="coordinate ordering for splitting images")

    parser = argparse.ArgumentParser(
        prog="ringcodes",
        description="Linear codes over Z_m[v1..vk] with idempotent generators",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name: str, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("analyze", help="size, distances, components, self-duality")
    p.add_argument("code", help="code JSON file")
    p.set_defaults(func=cmd_analyze)

    p = add_parser("dual", help="exhaustive-scan dual")
    p.add_argument("code")
    p.add_argument("--hermitian", action="store_true")
    p.set_defaults(func=cmd_dual)

    p = add_parser("macwilliams", help="verify a MacWilliams identity")
    p.add_argument("code")
    p.add_argument("--form", choices=["hamming", "cwe", "swe"], default="hamming")
    p.add_argument("--group", choices=["trivial", "units"], default="units",
                   help="unit subgroup for the symmetrized form")
    p.set_defaults(func=cmd_macwilliams)

    p = add_parser("cyclic-check", help="quasi-cyclic invariance")
    p.add_argument("code")
    p.add_argument("-d", type=int, default=1, help="index (number of blocks)")
    p.set_defaults(func=cmd_cyclic_check)

    p = add_parser("skew-check", help="quasi-skew-cyclic invariance")
    p.add_argument("code")
    p.add_argument("-d", type=int, default=1)
    p.add_argument("--theta", required=True, help="automorphism JSON file")
    p.set_defaults(func=cmd_skew_check)

    p = add_parser("skew-construct",
                       help="compose component codes into a certified skew-cyclic code")
    p.add_argument("--components", required=True,
                   help='JSON: {"m":2, "n":2, "components":[[gen,...],...]}')
    p.add_argument("--theta", required=True)
    p.add_argument("-d", type=int, default=1)
    p.add_argument("-o", "--out", help="output file for the certified code")
    p.set_defaults(func=cmd_skew_construct)

    p = add_parser("gray", help="apply a Gray map")
    p.add_argument("code")
    p.add_argument("--map", choices=["psi", "phi"], default="psi")
    p.add_argument("--phi", help="expansion spec JSON file (for --map phi)")
    p.set_defaults(func=cmd_gray)

    p = add_parser("table1", help="recompute the Z4 construction table")
    p.set_defaults(func=cmd_table1)

    p = add_parser("search-phi", help="search expansion coefficients")
    p.add_argument("--code", required=True)
    p.add_argument("-l", type=int, required=True, help="expansion length")
    p.add_argument("--coeff-range", type=int, default=None,
                   help="restrict coefficients to the first N ring elements")
    p.add_argument("--top", type=int, default=10)
    p.set_defaults(func=cmd_search_phi)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    args.guard = getattr(args, "guard", None)
    args.json = getattr(args, "json", False)
    args.layout = getattr(args, "layout", "component-major")
    try:
        return args.func(args)
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
