"""Command-line interface: parse input files, run the pipeline, emit reports.

Input is a JSON document describing exactly one of: an explicit generator
matrix over a field tower, a uniform q-matroid, or an MRD Gabidulin
construction from anchor elements.  Output is a deterministic report in
JSON (default), aligned text, or CSV (spectra matrices only).

Exit codes: 0 success, 1 verification failure, 2 input error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import __version__, oracle
from .errors import InputError, ResourceLimitError, StructuralError
from .fields import prime_field
from .lattice import build_cycle_lattice, virtual_betti_table
from .linalg import DEFAULT_SUBSPACE_CAP, enumerate_subspaces, gaussian_binomial
from .qmatroid import GabidulinCode, uniform_qmatroid
from .spectra import (
    cross_checked_weights,
    higher_spectra,
    mrd_closed_form,
    uniform_betti_table,
    uniform_h_sequence,
    weight_distribution,
    weight_poly_mobius,
    weight_polys_betti,
)


class Model:
    """A parsed input: the q-matroid plus, when present, the code behind it."""

    def __init__(self, kind, matroid, Q, code=None, params=None):
        self.kind = kind
        self.matroid = matroid
        self.Q = Q
        self.code = code
        self.params = params or {}


def _require(cond, message):
    if not cond:
        raise InputError(message)


def _as_int_list(value, name):
    _require(isinstance(value, list) and all(isinstance(x, int) for x in value),
             f"{name} must be a list of integers")
    return value


def parse_spec(doc: dict) -> Model:
    _require(isinstance(doc, dict), "input document must be a JSON object")
    forms = [key for key in ("generator", "uniform", "mrd_gabidulin") if key in doc]
    _require(len(forms) == 1,
             "exactly one of generator/uniform/mrd_gabidulin must be present")
    form = forms[0]
    if form == "uniform":
        u = doc["uniform"]
        _require(isinstance(u, dict), "uniform must be an object")
        for key in ("q", "k", "n"):
            _require(isinstance(u.get(key), int), f"uniform.{key} must be an integer")
        q, k, n = u["q"], u["k"], u["n"]
        m = u.get("m", n)
        _require(isinstance(m, int) and m >= n, "uniform.m must be an integer >= n")
        M = uniform_qmatroid(k, n, q)
        return Model("uniform", M, q**m,
                     params={"q": q, "k": k, "n": n, "m": m})
    fields = doc if form == "generator" else doc["mrd_gabidulin"]
    _require(isinstance(fields, dict), f"{form} description must be an object")
    _require(isinstance(fields.get("p"), int), "p must be an integer")
    tower = prime_field(fields["p"])
    for step in fields.get("q_extensions", []):
        tower = tower.extend(_as_int_list(step, "q_extensions entry"))
    q_level = tower.top_level
    tower = tower.extend(_as_int_list(fields.get("m_extension"), "m_extension"))
    code_level = tower.top_level
    _require(isinstance(fields.get("n"), int), "n must be an integer")
    n = fields["n"]
    if form == "generator":
        gen = doc["generator"]
        _require(isinstance(gen, list) and gen, "generator must be a nonempty list")
        for row in gen:
            _as_int_list(row, "generator row")
            _require(len(row) == n, "generator row length must equal n")
        code = GabidulinCode(tower, q_level, code_level, gen)
    else:
        _require(isinstance(fields.get("k"), int), "mrd_gabidulin.k must be an integer")
        anchors = _as_int_list(fields.get("anchors"), "mrd_gabidulin.anchors")
        _require(len(anchors) == n, "mrd_gabidulin needs n anchors")
        code = GabidulinCode.mrd(tower, q_level, code_level, anchors, fields["k"])
    return Model(form, code.qmatroid(), code.Q, code=code,
                 params={"q": code.q, "m": code.m, "n": code.n, "k": code.k})


def parse_spec_source(raw: bytes) -> tuple[Model, str]:
    digest = hashlib.sha256(raw).hexdigest()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON input: {exc}") from None
    return parse_spec(doc), digest


def analyze_model(model: Model, r: int, cap: int | None):
    M = model.matroid
    lattice = build_cycle_lattice(M, cap=cap)
    table = virtual_betti_table(lattice)
    polys = weight_polys_betti(table)
    weights = cross_checked_weights(M, table, polys, cap=cap)
    Qtilde = model.Q**r
    spectrum = weight_distribution(polys, Qtilde)
    higher = higher_spectra(polys, model.Q, table.k)
    return {
        "k": table.k,
        "lattice_size": len(lattice),
        "betti": table.to_records(),
        "phi": [
            {"l": l, "j": j, "value": table.phi(l, j)}
            for l in range(table.k + 1)
            for j in range(table.n + 1)
            if table.phi(l, j)
        ],
        "weights": list(weights),
        "polynomials": [list(P.coeffs) for P in polys],
        "spectrum": {"r": r, "Qtilde": Qtilde, "A": spectrum},
        "higher": higher,
    }


def build_report(model: Model, digest: str, body: dict) -> dict:
    return {
        "version": __version__,
        "input_sha256": digest,
        "kind": model.kind,
        "parameters": model.params,
        **body,
    }


# -- rendering ---------------------------------------------------------


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


def _text_lines(report: dict):
    yield f"rankspectra {report['version']}  input sha256 {report['input_sha256']}"
    yield f"kind: {report['kind']}  parameters: {report['parameters']}"
    if "weights" in report:
        yield "generalized weights: " + " ".join(map(str, report["weights"]))
    if "betti" in report:
        yield "betti table (l, i, dim j, classical [j], value):"
        for rec in report["betti"]:
            yield (f"  l={rec['l']} i={rec['i']} j={rec['j_dim']} "
                   f"[{rec['j_classical']}] {rec['value']}")
    if "polynomials" in report:
        yield "weight polynomials (s: coefficients, low degree first):"
        for s, coeffs in enumerate(report["polynomials"]):
            yield f"  s={s}: {coeffs}"
    if "spectrum" in report:
        sp = report["spectrum"]
        yield (f"spectrum at Qtilde={sp['Qtilde']} (r={sp['r']}): "
               + " ".join(map(str, sp["A"])))
    if "higher" in report:
        yield "higher spectra (row i, column w):"
        for i, row in enumerate(report["higher"]):
            yield f"  i={i}: " + " ".join(map(str, row))
    if "checks" in report:
        for check in report["checks"]:
            status = "pass" if check["status"] == "pass" else "FAIL"
            yield f"{status}  {check['check']}"


def render_text(report: dict) -> str:
    return "\n".join(_text_lines(report)) + "\n"


def render_csv(report: dict) -> str:
    lines = []
    if "spectrum" in report:
        lines.append("s,A")
        for s, a in enumerate(report["spectrum"]["A"]):
            lines.append(f"{s},{a}")
    if "higher" in report:
        if lines:
            lines.append("")
        n = len(report["higher"][0]) - 1
        lines.append("i," + ",".join(f"w{w}" for w in range(n + 1)))
        for i, row in enumerate(report["higher"]):
            lines.append(f"{i}," + ",".join(map(str, row)))
    if not lines:
        raise InputError("csv format applies only to spectrum data")
    return "\n".join(lines) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return render_json(report)
    if fmt == "text":
        return render_text(report)
    if fmt == "csv":
        return render_csv(report)
    raise InputError(f"unknown format: {fmt}")


# -- verification ------------------------------------------------------


def run_verification(model: Model, level: str, cap: int | None,
                     cap_codewords: int, threads: int):
    M = model.matroid
    checks = []

    def record(name, fn):
        try:
            witness = fn()
            checks.append({"check": name, "status": "pass"}
                          | ({"witness": witness} if witness else {}))
        except (StructuralError, ResourceLimitError) as exc:
            checks.append({"check": name, "status": "fail", "witness": str(exc)})

    axioms = M.verify_axioms(cap=cap)
    checks.append({"check": "q-matroid axioms", "status":
                   "pass" if axioms["ok"] else "fail"}
                  | ({} if axioms["ok"] else {"witness": axioms["violation"]}))

    lattice = build_cycle_lattice(M, cap=cap)
    table = virtual_betti_table(lattice)
    polys = weight_polys_betti(table)
    checks.append({"check": "cycle lattice Jordan-Dedekind", "status": "pass"})

    def poly_identity():
        for s in range(M.n + 1):
            if weight_poly_mobius(M, s, cap=cap) != polys[s]:
                raise StructuralError(f"polynomial identity fails at s={s}")

    record("betti/moebius polynomial identity", poly_identity)
    record("generalized-weight agreement",
           lambda: {"weights": list(cross_checked_weights(M, table, polys, cap=cap))})

    def conservation():
        k = table.k
        for power in (1, 2, 3):
            total = sum(P(model.Q**power) for P in polys)
            if total != model.Q ** (power * k):
                raise StructuralError(
                    f"spectrum total {total} != Qtilde^k at power {power}")

    record("spectrum mass conservation", conservation)

    if level == "full":
        record("classical lattice isomorphism",
               lambda: verify_iso_summary(M, cap))
        record("inclusion-exclusion polynomials (s <= 2)",
               lambda: check_inclusion_exclusion(M, polys, cap))
        if model.code is not None:
            record("brute-force spectrum",
                   lambda: check_brute_spectrum(model, polys, cap_codewords, threads))
            higher = higher_spectra(polys, model.Q, table.k)
            record("brute-force higher spectra (i <= 2)",
                   lambda: check_brute_higher(model, higher, cap))
    return checks


def verify_iso_summary(M, cap):
    report = oracle.verify_lattice_isomorphism(M, cap=cap)
    return {"flats": report["flats"], "cycles": report["cycles"]}


def check_inclusion_exclusion(M, polys, cap):
    for s in range(min(2, M.n) + 1):
        total = [0] * (M.full_rank + 1)
        for U in enumerate_subspaces(M.gf, M.n, s, cap=cap):
            for e, c in enumerate(oracle.inclusion_exclusion_poly(M, U).coeffs):
                total[e] += c
        while total and total[-1] == 0:
            total.pop()
        if tuple(total) != polys[s].coeffs:
            raise StructuralError(
                f"inclusion-exclusion sum {total} != polynomial at s={s}")


def check_brute_spectrum(model, polys, cap_codewords, threads):
    out = {}
    for r in (1, 2):
        if model.Q ** (r * model.code.k) > cap_codewords:
            continue
        brute = oracle.brute_spectrum(model.code, r, cap=cap_codewords,
                                      threads=threads)
        expected = weight_distribution(polys, model.Q**r)
        if brute != expected:
            raise StructuralError(
                f"brute spectrum {brute} != evaluation {expected} at r={r}")
        out[f"r={r}"] = brute
    return out


def check_brute_higher(model, higher, cap):
    for i in range(min(2, model.code.k) + 1):
        brute = oracle.brute_higher(model.code, i, cap=cap)
        if brute != higher[i]:
            raise StructuralError(
                f"brute higher spectra {brute} != pipeline {higher[i]} at i={i}")


# -- entry points ------------------------------------------------------


def _add_common(parser):
    parser.add_argument("--format", choices=("json", "text", "csv"), default="json")
    parser.add_argument("--r", type=int, default=1,
                        help="extension degree for the evaluation point Q^r")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--cap-codewords", type=int,
                        default=oracle.DEFAULT_CODEWORD_CAP)
    parser.add_argument("--cap-subspaces", "--max-subspaces", type=int,
                        dest="cap_subspaces", default=DEFAULT_SUBSPACE_CAP)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rankspectra",
        description="Rank-metric weight spectra via the lattice of q-cycles",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("analyze", "betti", "weights", "spectrum", "higher"):
        p = sub.add_parser(name)
        p.add_argument("file")
        _add_common(p)
    p = sub.add_parser("verify")
    p.add_argument("file")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    _add_common(p)
    p = sub.add_parser("mrd")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p)
    return parser


_SECTION_KEYS = {
    "betti": ("k", "lattice_size", "betti", "phi"),
    "weights": ("k", "weights"),
    "spectrum": ("k", "polynomials", "spectrum"),
    "higher": ("k", "higher"),
}


def run(args) -> tuple[str, int]:
    if args.command == "mrd":
        return run_mrd(args)
    with open(args.file, "rb") as fh:
        raw = fh.read()
    model, digest = parse_spec_source(raw)
    if args.command == "verify":
        checks = run_verification(model, args.level, args.cap_subspaces,
                                  args.cap_codewords, args.threads)
        report = build_report(model, digest, {"level": args.level, "checks": checks})
        failed = any(c["status"] != "pass" for c in checks)
        return render(report, args.format), 1 if failed else 0
    body = analyze_model(model, args.r, args.cap_subspaces)
    if args.command != "analyze":
        body = {key: body[key] for key in _SECTION_KEYS[args.command]}
    return render(build_report(model, digest, body), args.format), 0


def run_mrd(args) -> tuple[str, int]:
    q, m, n, k = args.q, args.m, args.n, args.k
    closed = mrd_closed_form(n, k, q, m)
    M = uniform_qmatroid(k, n, q)
    table = virtual_betti_table(build_cycle_lattice(M, cap=args.cap_subspaces))
    polys = weight_polys_betti(table)
    pipeline = weight_distribution(polys, (q**m) ** args.r)
    agree = args.r == 1 and closed == pipeline
    params = {"q": q, "m": m, "n": n, "k": k}
    digest = hashlib.sha256(
        json.dumps(params, sort_keys=True).encode()).hexdigest()
    report = build_report(Model("mrd", M, q**m, params=params), digest, {
        "closed_form": closed,
        "spectrum": {"r": args.r, "Qtilde": (q**m) ** args.r, "A": pipeline},
        "agreement": agree,
        "h_sequences": {str(l): uniform_h_sequence(n, k, q, l)
                        for l in range(k + 1)},
        "betti": uniform_betti_table(n, k, q).to_records(),
        "gaussian_nk": gaussian_binomial(n, k, q),
    })
    if args.r == 1 and not agree:
        raise StructuralError("closed-form and pipeline spectra disagree")
    return render(report, args.format), 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        output, status = run(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return 3
    except StructuralError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(output)
    return status


def console_main():  # pragma: no cover - thin wrapper
    raise SystemExit(main())
