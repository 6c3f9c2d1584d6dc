"""Command-line interface: ``groverian analyze | verify | random``.

State files hold one JSON object (or one object per line) with exactly one
of the keys ``amplitudes``, ``acin``, ``wlike`` or ``two_qubit``::

    {"amplitudes": [[re, im], ... 8 pairs ...]}   basis index 4qA + 2qB + qC
    {"acin": {"lambda": [l0, l1, l2, l3, l4], "phi": 0.3}}
    {"wlike": {"a": 0.5, "b": 0.5, "c": 0.5, "q": 0.5}}
    {"two_qubit": [[re, im], ... 4 pairs ...]}

Exit codes: 0 success, 1 verification suite failed, 2 invalid input,
3 optimizer did not converge (the report is still written).
"""

import argparse
import inspect
import json
import math
import sys

import numpy as np

from . import analytic as an
from .canonical import (AcinForm, WLikeParams, acin_decompose, random_acin, random_wlike,
                        schmidt2)
from .errors import GroverianError, NotConverged, NotNormalized, ParseError
from .invariants import check_relations, invariants_from_acin, two_qubit_invariant
from .numeric import OptimizerConfig, pmax_numeric_2site
from .states import (NORM_TOL, RENORM_TOL, as_state2, as_state3, bell_state, from_acin, from_wlike,
                     ghz_state, random_state, w_state)
from .suites import SUITES, run_suite

STATE_KINDS = ("amplitudes", "acin", "wlike", "two_qubit")
RANDOM_CHOICES = ("haar3", "haar2", "acin-uniform", "wlike-uniform", "ghz", "w", "bell")
_DEFAULTS = OptimizerConfig()


# ------------------------------------------------------------------ JSON output


def _num(x):
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if not math.isfinite(x):
        return "null"
    return format(x, ".17g")


def dumps(obj):
    """Compact JSON with every float written to 17 significant digits."""
    if obj is None:
        return "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    return _num(obj)


def _pairs(amp):
    return [[float(z.real), float(z.imag)] for z in np.asarray(amp).ravel()]


# ------------------------------------------------------------------ state files


def _complex(pairs, n, key):
    try:
        arr = np.array(pairs, dtype=float)
    except (TypeError, ValueError):
        raise ParseError(f"{key}: expected {n} [re, im] pairs") from None
    if arr.shape != (n, 2):
        raise ParseError(f"{key}: expected {n} [re, im] pairs, got shape {arr.shape}")
    return arr[:, 0] + 1j * arr[:, 1]


def _unit(vals, what):
    v = np.asarray(vals, dtype=float)
    nrm = float(np.linalg.norm(v))
    if abs(nrm - 1.0) > RENORM_TOL:
        raise NotNormalized(f"{what}: norm {nrm!r} deviates from 1 by more than {RENORM_TOL}")
    return v if abs(nrm - 1.0) <= NORM_TOL else v / nrm


def parse_state(doc):
    """Validate one state-file object; returns ``(kind, payload)``.

    ``payload`` is an amplitude vector, an AcinForm or a WLikeParams.
    """
    if not isinstance(doc, dict):
        raise ParseError("state file entry must be a JSON object")
    keys = [k for k in doc if k in STATE_KINDS]
    extra = [k for k in doc if k not in STATE_KINDS]
    if len(keys) != 1 or extra:
        raise ParseError(f"entry must have exactly one of {STATE_KINDS}, got keys {sorted(doc)}")
    kind = keys[0]
    body = doc[kind]
    if kind == "amplitudes":
        return kind, as_state3(_complex(body, 8, kind))
    if kind == "two_qubit":
        return kind, as_state2(_complex(body, 4, kind))
    if kind == "acin":
        if not isinstance(body, dict) or set(body) - {"lambda", "phi"} or "lambda" not in body:
            raise ParseError('acin: expected {"lambda": [5 reals], "phi": real}')
        lam = np.asarray(body["lambda"], dtype=float)
        if lam.shape != (5,):
            raise ParseError("acin: lambda needs five reals")
        return kind, AcinForm(tuple(_unit(lam, "acin lambda")), float(body.get("phi", 0.0)))
    if not isinstance(body, dict) or set(body) != {"a", "b", "c", "q"}:
        raise ParseError('wlike: expected {"a", "b", "c", "q"}')
    v = _unit([body[k] for k in "abcq"], "wlike coefficients")
    return kind, WLikeParams(*map(float, v))


def state_doc(kind, payload):
    """Inverse of :func:`parse_state`."""
    if kind in ("amplitudes", "two_qubit"):
        return {kind: _pairs(payload)}
    if kind == "acin":
        return {"acin": {"lambda": list(payload.lam), "phi": payload.phi}}
    return {"wlike": dict(zip("abcq", payload.astuple()))}


def read_states(path):
    """Parse a single JSON document or JSON-lines; returns a list of raw objects."""
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    try:
        return [json.loads(text)]
    except json.JSONDecodeError:
        pass
    docs = []
    for i, line in enumerate(text.splitlines(), 1):
        if line.strip():
            try:
                docs.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise ParseError(f"line {i}: {exc}") from None
    if not docs:
        raise ParseError(f"{path} holds no states")
    return docs


# ------------------------------------------------------------------ analyze


def _analytic_block(res):
    if isinstance(res, an.Unavailable):
        return {"available": False, "value": None, "formula_id": None, "lambda_value": None,
                "jform_value": None, "candidates": [], "note": f"unavailable: {res.reason}"}
    return {"available": True, "value": res.value, "formula_id": res.formula_id,
            "lambda_value": res.lambda_value, "jform_value": res.jform_value,
            "candidates": [list(c) for c in res.candidates], "note": None}


def analyze(kind, payload, cfg=None, tol=1e-8):
    """Full report for one parsed state. Every report has the same keys."""
    cfg = cfg or OptimizerConfig()
    two = None
    if kind == "two_qubit":
        sf = schmidt2(payload)
        jq = two_qubit_invariant(payload)
        two = {"schmidt": [sf.lambda0, sf.lambda1], "J": jq, "pmax": an.pmax_two_qubit(jq)}
        # a two-qubit state with a spectator qubit in |0> has the same P_max
        psi = np.kron(payload, [1.0, 0.0])
    elif kind == "acin":
        psi = from_acin(payload)
    elif kind == "wlike":
        psi = from_wlike(payload)
    else:
        psi = payload

    if kind == "acin":
        form, conjugated = payload, False
    else:
        dec = acin_decompose(psi)
        form, conjugated = dec.form, dec.conjugated
    J = invariants_from_acin(form)
    label = an.classify(form)
    num = pmax_numeric_2site(psi, cfg)

    res = an.pmax_analytic(form)
    family = label
    if kind == "wlike" and isinstance(res, an.Unavailable):
        family = "WLIKE"
        try:
            res = an.pmax_wlike(payload, oracle=num.value)
        except GroverianError as exc:
            res = an.Unavailable("WLIKE", reason=str(exc))
    if kind == "two_qubit" and isinstance(res, an.Unavailable):
        res = an.AnalyticPmax(two["pmax"], "two_qubit", label, two["pmax"])
    analytic = _analytic_block(res)

    pmax = analytic["value"] if analytic["available"] else num.value
    rel = check_relations(J, family, tol) if family != "GENERIC" else {"residuals": {}, "passed": True}
    return {
        "input": state_doc(kind, payload) | {"kind": kind},
        "amplitudes": _pairs(psi),
        "canonical": {"lambda": list(form.lam), "phi": form.phi, "conjugated": conjugated},
        "invariants": dict(zip(("J1", "J2", "J3", "J4", "J5"), J.astuple())),
        "type": label,
        "analytic": analytic,
        "numeric": {"value": num.value, "converged": bool(num.converged),
                    "multiplier_residual": num.multiplier_residual,
                    "restarts": num.restarts, "iterations": num.iterations},
        "pmax": pmax,
        "G": math.sqrt(max(1.0 - pmax, 0.0)),
        "relations": {"family": family, "residuals": rel["residuals"], "passed": rel["passed"]},
        "two_qubit": two,
    }


def _text(report, indent=""):
    lines = []
    width = max(len(k) for k in report)
    for k, v in report.items():
        if isinstance(v, dict) and v:
            lines.append(f"{indent}{k}:")
            lines.append(_text(v, indent + "  "))
        else:
            lines.append(f"{indent}{k:<{width}}  {dumps(v) if not isinstance(v, str) else v}")
    return "\n".join(lines)


def cmd_analyze(args, out):
    cfg = OptimizerConfig(restarts=args.restarts, seed=args.seed)
    reports = [analyze(*parse_state(doc), cfg=cfg, tol=args.tol) for doc in read_states(args.input)]
    if args.format == "text":
        out.write("\n\n".join(_text(r) for r in reports) + "\n")
    else:
        out.write("\n".join(dumps(r) for r in reports) + "\n")
    bad = [i for i, r in enumerate(reports) if not r["numeric"]["converged"]]
    if bad:
        raise NotConverged(f"optimizer did not converge for entries {bad}")
    return 0


# ------------------------------------------------------------------ verify / random


def cmd_verify(args, out):
    cfg = OptimizerConfig(restarts=args.restarts, seed=args.seed)
    kwargs = {"cfg": cfg} if "cfg" in inspect.signature(SUITES[args.suite]).parameters else {}
    summary = run_suite(args.suite, n=args.n, seed=args.seed, tol=args.tol, **kwargs)
    out.write(dumps(summary) + "\n")
    return 0 if summary["passed"] else 1


def random_docs(kind, n, seed):
    """``n`` state-file objects; entry ``i`` is drawn from seed ``seed + i``."""
    special = {"ghz": ("amplitudes", ghz_state), "w": ("amplitudes", w_state),
               "bell": ("two_qubit", bell_state)}
    docs = []
    for i in range(n):
        s = seed + i
        if kind in special:
            k, fn = special[kind]
            docs.append(state_doc(k, fn()))
        elif kind == "acin-uniform":
            docs.append(state_doc("acin", random_acin(np.random.default_rng(s))))
        elif kind == "wlike-uniform":
            docs.append(state_doc("wlike", random_wlike(np.random.default_rng(s))))
        else:
            docs.append(state_doc("two_qubit" if kind == "haar2" else "amplitudes", random_state(s, kind)))
    return docs


def cmd_random(args, out):
    text = "".join(dumps(d) + "\n" for d in random_docs(args.kind, args.n, args.seed))
    if args.out in (None, "-"):
        out.write(text)
    else:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            sys.stderr.write(f"error: IoError: cannot write {args.out}: {exc}\n")
            return 2
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="groverian",
        description="Maximal product-state overlap and Groverian entanglement of two- and three-qubit states.",
        epilog="Exit codes: 0 ok, 1 suite failed, 2 invalid input, 3 not converged.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, n_default):
        sp.add_argument("--seed", type=int, default=_DEFAULTS.seed)
        sp.add_argument("--restarts", type=int, default=_DEFAULTS.restarts)
        sp.add_argument("--tol", type=float, default=None)
        sp.add_argument("--n", type=int, default=n_default)

    a = sub.add_parser("analyze", help="report P_max, G and invariants of states in a file")
    a.add_argument("--input", required=True, help="state file (JSON or JSON-lines); '-' for stdin")
    a.add_argument("--format", choices=("json", "text"), default="json")
    common(a, None)
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="run a seeded verification suite")
    v.add_argument("--suite", required=True, choices=sorted(SUITES))
    common(v, None)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("random", help="write reproducible random state files")
    r.add_argument("kind", choices=RANDOM_CHOICES)
    r.add_argument("--out", default=None, help="output path; stdout if omitted")
    common(r, 1)
    r.set_defaults(func=cmd_random)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.command == "analyze" and args.tol is None:
        args.tol = 1e-8
    try:
        return args.func(args, out)
    except NotConverged as exc:
        sys.stderr.write(f"error: NotConverged: {exc}\n")
        return 3
    except GroverianError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
