"""Running commands on a problem and serializing the resulting documents."""
from __future__ import annotations

import json
from importlib import resources
from typing import Dict, List, Optional

from .bigraded import BigradedReport, build_report, sigma_piece_length
from .depth import DEFAULT_TRIALS, depth_gr, failures, gr_presentation, verify_theorems
from .errors import InvariantViolation, UnsupportedInputError
from .filtration import DEFAULT_R_MAX, PairContext, generate_minimal_reduction
from .hilbert import hilbert_h0, hilbert_polynomials, sally_length
from .local_length import local_length, monomial_length_oracle
from .problem import ProblemSpec, format_problem, parse_problem

COMMANDS = ("invariants", "depth", "verify", "hilbert", "oracle")


# --------------------------------------------------------------------------
# corpus


def corpus_names() -> List[str]:
    files = resources.files("blowup") / "corpus"
    return sorted(p.name[: -len(".problem")] for p in files.iterdir() if p.name.endswith(".problem"))


def corpus_text(name: str) -> str:
    return (resources.files("blowup") / "corpus" / f"{name}.problem").read_text(encoding="utf-8")


def corpus_problem(name: str) -> ProblemSpec:
    return parse_problem(corpus_text(name), name=name)


# --------------------------------------------------------------------------
# pipeline


def build_context(spec: ProblemSpec, seed: int = 0, r_max: Optional[int] = None) -> PairContext:
    r_max = DEFAULT_R_MAX if r_max is None else r_max
    if spec.auto:
        return generate_minimal_reduction(spec.ideal_I(), seed, r_max)
    return PairContext.from_pair(spec.ideal_I(), spec.ideal_J(), r_max, seed)


def _pair_doc(ctx: PairContext) -> dict:
    return {
        "field": str(ctx.ring.field),
        "vars": list(ctx.ring.variables),
        "I": [str(g) for g in ctx.I.gens],
        "J": [str(g) for g in ctx.J.gens],
        "d": ctx.d,
        "r": ctx.r,
        "seed": ctx.rng_seed,
    }


def _presentation_doc(ctx: PairContext, pres) -> dict:
    pieces = [pres.piece_dimension(n) for n in range(ctx.r + 3)]
    h0 = [hilbert_h0(ctx, n) for n in range(ctx.r + 3)]
    if pieces != h0:
        raise InvariantViolation(f"graded pieces {pieces} of the presentation differ from h0 {h0}")
    return {"variables": list(pres.ambient.variables), "relations": len(pres.relations.gens), "piece_dimensions": pieces}


def run_command(
    command: str,
    spec: ProblemSpec,
    seed: Optional[int] = None,
    p_max: Optional[int] = None,
    r_max: Optional[int] = None,
    trials: int = DEFAULT_TRIALS,
) -> dict:
    """Document for one command; ``status`` is PASS or FAIL."""
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}")
    seed = spec.seed if seed is None else seed
    seed = 0 if seed is None else seed
    p_max = spec.pmax if p_max is None else p_max
    r_max = spec.rmax if r_max is None else r_max
    if command == "oracle" and (spec.auto or not spec.ideal_I().is_monomial() or not spec.ideal_J().is_monomial()):
        raise UnsupportedInputError("the oracle command needs monomial I and J")
    ctx = build_context(spec, seed, r_max)
    doc: Dict[str, object] = {"command": command, "pair": _pair_doc(ctx), "status": "PASS"}
    if command in ("invariants", "verify"):
        report = build_report(ctx, p_max)
        doc["report"] = report.to_dict()
    if command in ("depth", "verify"):
        pres = gr_presentation(ctx.I)
        doc["presentation"] = _presentation_doc(ctx, pres)
        depth = depth_gr(pres, trials, seed)
        doc["depth"] = depth.to_dict()
    if command == "verify":
        verdicts = verify_theorems(report, depth)
        doc["verdicts"] = [{"name": v.name, "status": v.status, "detail": v.detail} for v in verdicts]
        if failures(verdicts):
            doc["status"] = "FAIL"
            doc["hint"] = "a failed depth bound may be a probabilistic under-report; rerun with more --trials"
    if command == "hilbert":
        doc["tables"] = _hilbert_tables(ctx)
    if command == "oracle":
        doc["oracle"] = _oracle_table(ctx)
        if not all(row["match"] for row in doc["oracle"]):
            doc["status"] = "FAIL"
    return doc


def _hilbert_tables(ctx: PairContext) -> dict:
    h0, p0, h1, p1 = hilbert_polynomials(ctx)
    stop = h0.stop
    tables = {
        "hilbert_h0": {"values": list(h0.values), "coefficients": list(p0.coefficients), "postulation": p0.postulation},
        "hilbert_h1": {"values": list(h1.values), "coefficients": list(p1.coefficients), "postulation": p1.postulation},
        "sally": {"start": 1, "values": [sally_length(ctx, n) for n in range(1, stop)]},
    }
    for p in range(ctx.r):
        tables[f"sigma_diagonal({p})"] = {"values": [sigma_piece_length(ctx, p, i) for i in range(stop)]}
    return tables


def _oracle_table(ctx: PairContext) -> List[dict]:
    rows = []

    def add(name, A, B):
        tool = local_length(A, B, check=False)
        oracle = monomial_length_oracle(A, B)
        rows.append({"quantity": name, "local_length": tool.value, "oracle": oracle,
                     "match": tool.stabilized and tool.value == oracle})

    add("length(R/J)", ctx.mixed(0, 0), ctx.J)
    for n in range(ctx.r + 3):
        add(f"h0({n})", ctx.I_power(n), ctx.I_power(n + 1))
    for p in range(ctx.r + 1):
        add(f"Lambda_{p}", ctx.I_power(p + 1), ctx.mixed(1, p))
        for i in range(1, 4):
            add(f"sigma({p},{i})", ctx.mixed(i, p + 1), ctx.mixed(i + 1, p))
    for n in range(1, ctx.r + 2):
        add(f"sally({n})", ctx.I_power(n + 1), ctx.mixed(n, 1))
    return rows


# --------------------------------------------------------------------------
# output


def emit_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _table(headers: List[str], rows: List[List[object]]) -> List[str]:
    cells = [headers] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[k]) for row in cells) for k in range(len(headers))]
    return ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]


def emit_text(doc: dict) -> str:
    pair = doc["pair"]
    out = [
        f"{doc['command']}: {doc['status']}",
        f"field {pair['field']}, vars {', '.join(pair['vars'])}, d = {pair['d']}, r = {pair['r']}",
        f"I = ({', '.join(pair['I'])})",
        f"J = ({', '.join(pair['J'])})",
    ]
    if "report" in doc:
        rep = doc["report"]
        out.append("")
        out.append("e = (" + ", ".join(map(str, rep["e_coeffs"])) + ")   s = (" + ", ".join(map(str, rep["s_coeffs"])) + ")")
        out += _table(
            ["p", "Lambda_p", "Delta_p", "e0_sigma_p", "delta_p", "sigma(p, 0..)"],
            [[row["p"], row["lambda_p"], row["delta_cap_p"], row["e0_sigma_p"], row["delta_p"],
              " ".join(map(str, row["sigma"][:8])) + (" ..." if len(row["sigma"]) > 8 else "")]
             for row in rep["rows"]],
        )
        out.append(f"Lambda = {rep['Lambda']}, Delta = {rep['Delta']}, delta = {rep['delta']}, delta_bar = {rep['delta_bar']}")
        out.append(f"identities checked: {len(rep['identities'])}")
    if "depth" in doc:
        dep = doc["depth"]
        out.append("")
        out.append(f"depth(gr) = {dep['depth']} of d = {dep['d']}{' (Cohen-Macaulay)' if dep['is_cm'] else ''}, "
                   f"depth(Rees) {dep['rees_depth']}")
        for form in dep["regular_sequence"]:
            out.append(f"  regular: {form}")
    if "verdicts" in doc:
        out.append("")
        for v in doc["verdicts"]:
            out.append(f"{v['status']:>14}  {v['name']}   [{v['detail']}]")
        if "hint" in doc:
            out.append(doc["hint"])
    if "tables" in doc:
        for name, table in doc["tables"].items():
            out.append("")
            out.append(f"{name}: {' '.join(map(str, table['values']))}")
            if "coefficients" in table:
                out.append(f"  coefficients {table['coefficients']}, postulation {table['postulation']}")
    if "oracle" in doc:
        out.append("")
        out += _table(["quantity", "local_length", "oracle", "match"],
                      [[r["quantity"], r["local_length"], r["oracle"], r["match"]] for r in doc["oracle"]])
    return "\n".join(out) + "\n"


def emit_report(doc: dict, fmt: str = "text") -> str:
    if fmt == "json":
        return emit_json(doc)
    if fmt == "text":
        return emit_text(doc)
    raise ValueError(f"unknown format {fmt!r}")


def report_from_document(doc: dict) -> BigradedReport:
    return BigradedReport.from_dict(doc["report"])


__all__ = [
    "COMMANDS", "build_context", "corpus_names", "corpus_problem", "corpus_text",
    "emit_json", "emit_report", "emit_text", "format_problem", "report_from_document", "run_command",
]
