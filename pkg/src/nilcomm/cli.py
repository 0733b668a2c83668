"""``nilcomm`` command line interface.

Subcommands: ``tensor``, ``scan``, ``pfaffian``, ``classify``, ``branch`` and
``sweep``.  Every subcommand accepts ``--json`` (one canonical JSON document
on stdout), ``--ceiling`` (dimension ceiling, also read from the
``NILCOMM_DIM_CEILING`` environment variable) and ``--output PATH``.

Exit status: 0 on success, 1 on usage errors (bad flags or unparseable
literals), 2 on domain errors (non-dominant weight, ceiling exceeded, ...).
"""
from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass, field

from .classifier import (
    TripleSpec,
    branch_so_odd_to_even,
    classify_triple,
    restrict_u2n_to_spn,
    restriction,
    stratum,
)
from .errors import DomainError, NilcommError, NotationError
from .metaplectic import default_scan_bound, dimension_report, multiplicity_free_scan
from .nilpotent import (
    CenterElement,
    b_lambda_matrix,
    case_algebra,
    pfaffian,
    stabilizer_dimension,
)
from .serialize import canonical_dumps, decomposition_to_json, parse_decomposition, rational
from .sweeps import preset_names, run_preset
from .tensor import okada_row_tensor, tensor_klimyk
from .weights import AlgebraType, dimension_ceiling, parse_weight

__all__ = ["main", "run", "build_parser", "RunConfig", "UsageError"]

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2


class UsageError(Exception):
    code = "USAGE"


@dataclass
class RunConfig:
    """Parsed invocation: the subcommand, its options and the output mode."""

    command: str
    options: dict = field(default_factory=dict)
    json: bool = False
    ceiling: int | None = None
    output: str | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one canonical JSON document")
    common.add_argument("--ceiling", type=_positive_int, help="dimension ceiling (default: $NILCOMM_DIM_CEILING or 10^6)")
    common.add_argument("--output", metavar="PATH", help="write the result to PATH instead of stdout")

    parser = _Parser(prog="nilcomm", description="Exact tensor, scan and Pfaffian computations for commutative triples.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("tensor", parents=[common], help="decompose a tensor product")
    p.add_argument("--algebra", required=True, help="algebra tag such as C2, D3, B3, A2")
    p.add_argument("--left", required=True, help="weight literal, e.g. [2,1,0]")
    p.add_argument("--right", required=True, help="weight literal; one-row (s,0,...) for --method okada")
    p.add_argument("--method", choices=("klimyk", "okada"), default="klimyk")

    p = sub.add_parser("scan", parents=[common], help="multiplicity-freeness scan of a metaplectic spectrum")
    p.add_argument("--algebra", required=True, help="C<n> or D3")
    p.add_argument("--tau", required=True, help='restricted module, e.g. "[(1,1,1)]" or "[(2,1,0), 2*(1,0,0)]"')
    p.add_argument("--max-j", type=_nonneg_int, help="scan bound J (default: max(12, 2*spread+2))")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--dimension-report", action="store_true", help="add dim (j) vs dim P_j comparison")

    p = sub.add_parser("pfaffian", parents=[common], help="Pfaffian of B_X for a case algebra")
    p.add_argument("--case", required=True, choices=("A", "B", "C", "a", "b", "c"))
    p.add_argument("--n", type=_positive_int)
    p.add_argument("--center", help="centre element (default: the generic stratum representative)")

    p = sub.add_parser("classify", parents=[common], help="decide commutativity of a triple")
    p.add_argument("--case", required=True, choices=("A", "B", "C", "a", "b", "c"))
    p.add_argument("--n", type=_positive_int)
    p.add_argument("--tau", help='A: u(2n) weight; B: "(r, [eta])"; C: so(7) weight')
    p.add_argument("--tau-so6", help="case C: so(6) decomposition supplied directly")
    p.add_argument("--max-j", type=_nonneg_int)
    p.add_argument("--workers", type=_positive_int, default=1)

    p = sub.add_parser("branch", parents=[common], help="restrict a module to a subalgebra")
    p.add_argument("--from", dest="source", required=True, help="B<m> or A<2n>")
    p.add_argument("--to", dest="target", required=True, help="D<m> or C<n>")
    p.add_argument("--weight", required=True)

    p = sub.add_parser("sweep", parents=[common], help="run a named acceptance sweep")
    numbers = [str(k) for k in range(1, len(preset_names()))]
    p.add_argument("preset", choices=preset_names() + numbers, help="preset name, its number, or 'all'")
    return parser


def _config_from_args(ns: argparse.Namespace) -> RunConfig:
    opts = {k: v for k, v in vars(ns).items() if k not in ("command", "json", "ceiling", "output")}
    return RunConfig(ns.command, opts, ns.json, ns.ceiling, ns.output)


# -- subcommand bodies --------------------------------------------------------
# each returns (json_document, text)


def _cmd_tensor(o: dict, ceiling: int):
    alg = AlgebraType.parse(o["algebra"])
    left = parse_weight(alg, o["left"])
    right = parse_weight(alg, o["right"])
    if o["method"] == "okada":
        c = right.coords2
        if any(c[1:]) or c[0] % 2:
            raise DomainError(f"--method okada needs a one-row integral right factor, got {right}")
        d = okada_row_tensor(left, c[0] // 2)
    else:
        d = tensor_klimyk(left, right, ceiling=ceiling)
    doc = {"method": o["method"], "left": left.notation(), "right": right.notation(), "result": decomposition_to_json(d)}
    return doc, str(d)


def _scan_text(verdict) -> str:
    head = f"{verdict.kind} (J={verdict.scanned_j})"
    if verdict.certificate is not None:
        cert = verdict.certificate
        occ = ", ".join(f"j={j} x{m}" for j, m in cert.occurrences)
        head += f": {cert.sigma} at {occ}"
    if verdict.flags:
        head += " [" + ", ".join(verdict.flags) + "]"
    return head


def _cmd_scan(o: dict, ceiling: int):
    alg = AlgebraType.parse(o["algebra"])
    tau = parse_decomposition(alg, o["tau"])
    J = o["max_j"] if o["max_j"] is not None else default_scan_bound(tau)
    verdict = multiplicity_free_scan(alg, tau, J, workers=o["workers"], ceiling=ceiling)
    doc = verdict.to_json()
    text = _scan_text(verdict)
    if o["dimension_report"]:
        rows = dimension_report(alg, J)
        doc["dimensionReport"] = rows
        text += "\n" + "\n".join(
            f"j={r['j']}: dim={r['weylDimension']} polynomial={r['polynomialDimension']}" for r in rows
        )
    return doc, text


def _cmd_pfaffian(o: dict, ceiling: int):
    alg = case_algebra(o["case"], o["n"])
    X = alg.generic_center() if o["center"] is None else CenterElement.parse(alg, o["center"])
    pf = pfaffian(b_lambda_matrix(alg, X))
    dim = stabilizer_dimension(alg, X)
    doc = {
        "case": alg.tag,
        "n": alg.n,
        "center": str(X),
        "pfaffian": rational(pf),
        "squareIntegrable": pf != 0,
        "stabilizerDimension": dim,
    }
    text = f"{rational(pf)}\nsquare integrable: {'yes' if pf else 'no'}\nstabilizer dimension: {dim}"
    return doc, text


_CASE_B_TAU = re.compile(r"^\s*\(\s*([+-]?\d+)\s*,\s*([\[(].*[\])])\s*\)\s*$")


def _spec_from_options(o: dict) -> TripleSpec:
    case = o["case"].upper()
    if case == "C":
        if o["n"] is not None:
            raise UsageError("case C takes no --n")
        if (o["tau"] is None) == (o["tau_so6"] is None):
            raise UsageError("case C needs exactly one of --tau (so(7) weight) or --tau-so6")
        if o["tau_so6"] is not None:
            return TripleSpec("C", parse_decomposition(AlgebraType("D", 3), o["tau_so6"]))
        return TripleSpec("C", parse_weight(AlgebraType("B", 3), o["tau"]))
    if o["n"] is None:
        raise UsageError(f"case {case} needs --n")
    if o["tau"] is None or o["tau_so6"] is not None:
        raise UsageError(f"case {case} needs --tau (and no --tau-so6)")
    if case == "A":
        return TripleSpec("A", parse_weight(AlgebraType("A", 2 * o["n"]), o["tau"]), n=o["n"])
    m = _CASE_B_TAU.match(o["tau"])
    if not m:
        raise NotationError(f'case B tau must look like "(r, [eta])", got {o["tau"]!r}')
    eta = parse_weight(AlgebraType("C", o["n"]), m.group(2))
    return TripleSpec("B", (int(m.group(1)), eta), n=o["n"])


def _cmd_classify(o: dict, ceiling: int):
    spec = _spec_from_options(o)
    verdict = classify_triple(spec, J=o["max_j"], workers=o["workers"], ceiling=ceiling)
    restricted = restriction(spec, ceiling=ceiling)
    doc = verdict.to_json()
    doc["case"] = spec.case
    doc["n"] = spec.n
    doc["restriction"] = decomposition_to_json(restricted)
    doc["stratum"] = stratum(spec.case, spec.n).to_json()
    text = _scan_text(verdict) + f"\nrestriction: {restricted}"
    return doc, text


def _cmd_branch(o: dict, ceiling: int):
    src = AlgebraType.parse(o["source"])
    dst = AlgebraType.parse(o["target"])
    w = parse_weight(src, o["weight"])
    if src.family == "B" and dst == AlgebraType("D", src.rank):
        d = branch_so_odd_to_even(w)
    elif src.family == "A" and src.rank % 2 == 0 and dst == AlgebraType("C", src.rank // 2):
        d = restrict_u2n_to_spn(w, dst.rank, ceiling=ceiling)
    else:
        raise DomainError(f"no branching rule from {src} to {dst}; supported: B<m> -> D<m>, A<2n> -> C<n>")
    doc = {"from": str(src), "to": str(dst), "weight": w.notation(), "result": decomposition_to_json(d)}
    return doc, str(d)


def _cmd_sweep(o: dict, ceiling: int):
    results = run_preset(o["preset"])
    doc = {"preset": o["preset"], "passed": all(r.passed for r in results), "results": [r.to_json() for r in results]}
    lines = []
    for r in results:
        lines.append(r.summary())
        lines += [f"  - {f}" for f in r.failures]
    return doc, "\n".join(lines)


_COMMANDS = {
    "tensor": _cmd_tensor,
    "scan": _cmd_scan,
    "pfaffian": _cmd_pfaffian,
    "classify": _cmd_classify,
    "branch": _cmd_branch,
    "sweep": _cmd_sweep,
}


def _emit(text: str, config_output: str | None, stream) -> None:
    if config_output:
        with open(config_output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        stream.write(text + "\n")


def run(config: RunConfig, stdout=None, stderr=None) -> int:
    """Execute a parsed configuration and return the exit status."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        handler = _COMMANDS.get(config.command)
        if handler is None:
            raise UsageError("a subcommand is required: " + ", ".join(_COMMANDS))
        ceiling = dimension_ceiling(config.ceiling)
        doc, text = handler(config.options, ceiling)
    except (UsageError, NotationError) as exc:
        return _fail(config.json, exc, EXIT_USAGE, stdout, stderr)
    except DomainError as exc:
        return _fail(config.json, exc, EXIT_DOMAIN, stdout, stderr)
    except NilcommError as exc:
        return _fail(config.json, exc, EXIT_DOMAIN, stdout, stderr)
    _emit(canonical_dumps(doc) if config.json else text, config.output, stdout)
    return EXIT_OK


def _fail(as_json: bool, exc: Exception, status: int, stdout, stderr) -> int:
    code = getattr(exc, "code", "ERROR")
    if as_json:
        stdout.write(canonical_dumps({"error": {"code": code, "message": str(exc)}}) + "\n")
    else:
        stderr.write(f"nilcomm: error [{code}]: {exc}\n")
    return status


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except UsageError as exc:
        if "--json" not in argv:
            parser.print_usage(sys.stderr)
        return _fail("--json" in argv, exc, EXIT_USAGE, sys.stdout, sys.stderr)
    return run(_config_from_args(ns))


if __name__ == "__main__":
    sys.exit(main())
