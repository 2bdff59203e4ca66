"""Report assembly: runs every construction and verification for a weight
vector and emits a deterministic document (JSON, text or LaTeX).

Rationals are serialized as "p" or "p/q" strings, monomials as
{"coeff": ..., "x_exp": ..., "theta_exp": ...} objects, matrices as dense
row-major arrays of term lists.  Identical input produces byte-identical
output; wall-clock data is therefore never part of the document (the CLI can
print timings to stderr instead).
"""

from __future__ import annotations

import json
import time

from ._rat import fmt_rat, parse_rat
from .amodel import build_amodel, verify_amodel
from .bmodel import build_bmodel, jacobi_product, verify_bmodel
from .combinatorics import (build_weight_data, enumerate_weight_tuples,
                            spectrum_data, verify_combinatorics)
from .limits import build_limit, cup_table_sectors, jordan_analysis, verify_limits
from .mirror import quantum_power_product, verify_mirror, verify_product_mirror
from .puiseux import PMatrix, Puiseux
from .unfolding import build_unfolding, log_structure_checks, verify_unfolded_flatness


def element_terms(e: Puiseux, var: str):
    """Serialize an element of the one-variable ring as a list of monomials."""
    out = []
    for (s, xp), coeff in e.sorted_terms():
        if xp and (len(xp) > 1 or xp[0][0] != var):
            raise ValueError("entry involves variables other than %r" % var)
        x_exp = xp[0][1] if xp else 0
        out.append({"coeff": fmt_rat(coeff), "x_exp": fmt_rat(x_exp),
                    "theta_exp": s})
    return out


def parse_element(terms, var: str) -> Puiseux:
    out = Puiseux.zero()
    for t in terms:
        out = out + Puiseux.term(parse_rat(t["coeff"]), theta=t["theta_exp"],
                                 **{var: parse_rat(t["x_exp"])})
    return out


def matrix_doc(M: PMatrix, var: str):
    return {"var": var, "size": M.n,
            "entries": [[element_terms(e, var) for e in row]
                        for row in M.rows]}


def parse_matrix(doc) -> PMatrix:
    var = doc["var"]
    return PMatrix([[parse_element(cell, var) for cell in row]
                    for row in doc["entries"]])


def product_table_doc(table, var: str):
    """A multiplication table whose cells are (coefficient element, index)."""
    rows = []
    for row in table:
        cells = []
        for cell in row:
            if cell is None:
                cells.append(None)
            else:
                coeff, idx = cell
                if not isinstance(coeff, Puiseux):
                    coeff = Puiseux.const(coeff)
                cells.append({"coeff": element_terms(coeff, var),
                              "index": idx})
        rows.append(cells)
    return rows


def run_checks(weights):
    """Build every package for one weight vector and run the full suite.

    Returns (packages, verdicts) where verdicts maps stable check names to
    :class:`CheckReport` values.
    """
    wd = build_weight_data(weights)
    sd = spectrum_data(wd)
    ap = build_amodel(wd, sd)
    bp = build_bmodel(wd, sd)
    lp = build_limit(wd, sd)
    up = build_unfolding(wd, sd, lp)

    reports = []
    reports.extend(verify_combinatorics(wd, sd))
    reports.extend(verify_amodel(ap))
    reports.extend(verify_bmodel(bp))
    reports.extend(verify_mirror(ap, bp))
    reports.append(verify_product_mirror(ap, bp))
    reports.extend(verify_limits(lp, bp))
    reports.extend(verify_unfolded_flatness(up, lp))
    reports.extend(log_structure_checks(ap, bp, lp))

    verdicts = {}
    for r in reports:
        if r.name in verdicts:
            raise ValueError("duplicate check name %r" % r.name)
        verdicts[r.name] = r
    packages = {"wd": wd, "sd": sd, "amodel": ap, "bmodel": bp,
                "limit": lp, "unfolding": up}
    return packages, verdicts


def quantum_table(wd):
    return tuple(tuple(quantum_power_product(wd, i, j) for j in range(wd.mu))
                 for i in range(wd.mu))


def jacobi_table(wd, sd):
    return tuple(tuple(jacobi_product(wd, sd, i, j) for j in range(wd.mu))
                 for i in range(wd.mu))


def build_document(weights, packages, verdicts, check_filter=None):
    wd = packages["wd"]
    sd = packages["sd"]
    ap = packages["amodel"]
    bp = packages["bmodel"]
    lp = packages["limit"]
    up = packages["unfolding"]

    if check_filter:
        selected = {name: r for name, r in verdicts.items()
                    if any(name.startswith(p) for p in check_filter)}
        if not selected:
            raise ValueError("no checks match the filter %r; available "
                             "prefixes include %s"
                             % (",".join(check_filter),
                                ", ".join(sorted({n.split(".")[0]
                                                  for n in verdicts}))))
    else:
        selected = dict(verdicts)

    doc = {
        "weights": list(wd.weights),
        "mu": wd.mu,
        "n": wd.n,
        "sectors": [
            {"f": fmt_rat(s.f), "members": list(s.members),
             "multiplicity": s.d, "weight_product": s.m}
            for s in wd.sectors
        ],
        "spectrum": {
            "steps": [list(a) for a in sd.steps],
            "min_indices": list(sd.mins),
            "c": [fmt_rat(v) for v in sd.c],
            "alpha": [fmt_rat(v) for v in sd.alpha],
            "repeats": list(sd.repeats),
            "scales": [fmt_rat(v) for v in sd.scales],
            "subdiagonal": [fmt_rat(v) for v in sd.subdiag],
        },
        "degrees": [fmt_rat(v) for v in ap.degrees],
        "basis": {"sectors": list(wd.basis_labels()),
                  "jordan_blocks": jordan_analysis(sd)},
        "matrices": {
            "quantum_sectors": matrix_doc(ap.mult_sectors, "q"),
            "quantum_powers": matrix_doc(ap.mult_powers, "q"),
            "residue_infinity": matrix_doc(ap.res_inf, "q"),
            "residue_base": matrix_doc(ap.res_base, "q"),
            "pairing_sectors": matrix_doc(ap.pairing_sectors_theta, "q"),
            "pairing_powers": matrix_doc(ap.pairing_powers, "q"),
            "polar_canonical": matrix_doc(bp.res_zero, "x"),
            "polar_flat": matrix_doc(bp.res_zero_flat, "x"),
            "polar_orbifold": matrix_doc(bp.res_zero_orb, "x"),
            "pairing_canonical": matrix_doc(bp.pairing, "x"),
            "pairing_orbifold": matrix_doc(bp.pairing_orb, "x"),
            "polar_limit": matrix_doc(lp.res_zero, "x"),
            "pairing_limit": matrix_doc(lp.pairing, "x"),
        },
        "unfolding": {
            "higgs": [matrix_doc(m, "x") for m in up.higgs],
            "euler": [element_terms(e, "x%d" % i)
                      for i, e in enumerate(up.euler)],
            "potential": {"%d,%d,%d" % key: fmt_rat(v)
                          for key, v in sorted(up.potential.items())},
        },
        "products": {
            "quantum_powers": product_table_doc(quantum_table(wd), "q"),
            "jacobi": product_table_doc(jacobi_table(wd, sd), "x"),
            "cup_limit": product_table_doc(lp.cup.table, "x"),
            "cup_sectors": product_table_doc(
                cup_table_sectors(wd, sd, lp.cup), "x"),
        },
        "verdicts": {
            name: {"ok": r.ok, "failures": list(r.failures)}
            for name, r in sorted(selected.items())
        },
        "all_ok": all(r.ok for r in selected.values()),
    }
    return doc


def run_report(weights, check_filter=None):
    packages, verdicts = run_checks(weights)
    return build_document(weights, packages, verdicts, check_filter)


def run_sweep(mu_max: int):
    """Run the full verification on every weight vector with mu <= mu_max."""
    results = []
    timings = {}
    for weights in enumerate_weight_tuples(mu_max):
        start = time.perf_counter()
        _packages, verdicts = run_checks(weights)
        timings[weights] = time.perf_counter() - start
        failures = {name: list(r.failures)
                    for name, r in sorted(verdicts.items()) if not r.ok}
        results.append({
            "weights": list(weights),
            "ok": not failures,
            "checks": len(verdicts),
            "failures": failures,
        })
    doc = {
        "mu_max": mu_max,
        "count": len(results),
        "results": results,
        "all_ok": all(r["ok"] for r in results),
    }
    return doc, timings


def render_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def render_text(doc) -> str:
    lines = []
    if "results" in doc:
        lines.append("sweep up to mu = %d: %d weight vectors" %
                     (doc["mu_max"], doc["count"]))
        for r in doc["results"]:
            tag = "PASS" if r["ok"] else "FAIL"
            lines.append("[%s] (%s): %d checks" %
                         (tag, ",".join(str(w) for w in r["weights"]),
                          r["checks"]))
            for name, fails in r["failures"].items():
                lines.append("    %s: %s" % (name, "; ".join(fails[:3])))
        lines.append("overall: %s" % ("PASS" if doc["all_ok"] else "FAIL"))
        return "\n".join(lines) + "\n"

    lines.append("weights (%s): mu = %d, n = %d" %
                 (",".join(str(w) for w in doc["weights"]), doc["mu"],
                  doc["n"]))
    lines.append("c     = (%s)" % ", ".join(doc["spectrum"]["c"]))
    lines.append("alpha = (%s)" % ", ".join(doc["spectrum"]["alpha"]))
    lines.append("degrees = (%s)" % ", ".join(doc["degrees"]))
    lines.append("jordan blocks = %s" % doc["basis"]["jordan_blocks"])
    for name, verdict in doc["verdicts"].items():
        tag = "PASS" if verdict["ok"] else "FAIL"
        lines.append("[%s] %s" % (tag, name))
        for f in verdict["failures"][:5]:
            lines.append("    %s" % f)
    lines.append("overall: %s" % ("PASS" if doc["all_ok"] else "FAIL"))
    return "\n".join(lines) + "\n"


def _terms_latex(terms, var: str) -> str:
    if not terms:
        return "0"
    bits = []
    for t in terms:
        coeff = t["coeff"]
        body = ""
        if t["x_exp"] != "0":
            body += var if t["x_exp"] == "1" else "%s^{%s}" % (var, t["x_exp"])
        if t["theta_exp"]:
            body += r"\theta" if t["theta_exp"] == 1 else \
                r"\theta^{%d}" % t["theta_exp"]
        if "/" in coeff and body:
            num, den = coeff.split("/")
            sign = ""
            if num.startswith("-"):
                sign, num = "-", num[1:]
            bits.append(r"%s\frac{%s}{%s}%s" % (sign, num, den, body))
        elif body:
            prefix = {"1": "", "-1": "-"}.get(coeff, coeff)
            bits.append(prefix + body)
        else:
            bits.append(coeff if "/" not in coeff else
                        r"\frac{%s}{%s}" % tuple(coeff.split("/")))
    return "+".join(bits).replace("+-", "-")


def _matrix_latex(doc) -> str:
    rows = []
    for row in doc["entries"]:
        rows.append(" & ".join(_terms_latex(cell, doc["var"]) for cell in row))
    return "\\begin{pmatrix}\n" + " \\\\\n".join(rows) + "\n\\end{pmatrix}"


def render_latex(doc) -> str:
    if "results" in doc:
        raise ValueError("latex output is for single weight vectors")
    lines = ["%% weights (%s)" % ",".join(str(w) for w in doc["weights"])]
    for key in ["quantum_sectors", "quantum_powers", "polar_canonical",
                "polar_flat", "polar_orbifold", "pairing_canonical",
                "pairing_limit"]:
        lines.append(r"\paragraph{%s}" % key.replace("_", " "))
        lines.append(r"\[" + _matrix_latex(doc["matrices"][key]) + r"\]")
    labels = doc["basis"]["sectors"]
    lines.append(r"\paragraph{cup product (sector classes)}")
    lines.append(r"\begin{tabular}{c|%s}" % ("c" * len(labels)))
    lines.append(" & " + " & ".join("$%s$" % l for l in labels) + r" \\ \hline")
    table = doc["products"]["cup_sectors"]
    for i, row in enumerate(table):
        cells = []
        for cell in row:
            if cell is None:
                cells.append("$0$")
            else:
                coeff = _terms_latex(cell["coeff"], "x")
                target = labels[cell["index"]]
                cells.append("$%s$" % (target if coeff == "1"
                                       else "%s\\,%s" % (coeff, target)))
        lines.append("$%s$ & %s \\\\" % (labels[i], " & ".join(cells)))
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def render(doc, fmt: str) -> str:
    if fmt == "json":
        return render_json(doc)
    if fmt == "text":
        return render_text(doc)
    if fmt == "latex":
        return render_latex(doc)
    raise ValueError("unknown format %r" % fmt)
