"""Command-line front end.

::

    dahaskein normal-form --kappa 2 "T1 x1"
    dahaskein reduce      --kappa 2 "x1*x2^-1"      [--bound 2]
    dahaskein pair        --kappa 2 x1 x2
    dahaskein macdonald   --kappa 2 0,1
    dahaskein verify      --kappa 2 --suite all --degree 2

``--json`` switches to structured output, which always carries
``"schema": 1``.  Exit codes: 0 ok, 1 a verify identity failed, 2 error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import re
import sys
from dataclasses import dataclass, field

from .braidcompile import WITNESS_KINDS, eval_class, parse_braid, relation_witness
from .errors import DahaError, KappaMismatchError, ParseError
from .laurent import PolyElement, rotate
from .macdonald import mac_poly, orthogonality_check
from .pairing import pair, unitarity_check
from .parsing import parse_poly
from .polyrep import op_g, op_T, op_T_inv, op_X, op_Y
from .qreduce import oracle_reduce, reduce_class, reduce_monomial
from .scalar import HBAR, ONE, c_pow, s_pow

__all__ = ["CliRequest", "CliReport", "run", "main", "SUBCOMMANDS", "SUITES"]

SCHEMA = 1
SUBCOMMANDS = ("normal-form", "reduce", "pair", "macdonald", "verify")
SUITES = ("operators", "quotient", "pairing", "compiler", "macdonald", "all")
EXIT = {"ok": 0, "fail": 1, "error": 2}


@dataclass(frozen=True)
class CliRequest:
    subcommand: str
    kappa: int
    expressions: tuple = ()
    json: bool = False
    bound: int | None = None
    degree: int = 1
    suite: str = "all"

    def validate(self) -> None:
        if self.subcommand not in SUBCOMMANDS:
            raise ValueError(f"unknown subcommand {self.subcommand!r}")
        if self.kappa < 1:
            raise ValueError("--kappa must be at least 1")
        if self.bound is not None and self.bound < 1:
            raise ValueError("--bound must be at least 1")
        if self.degree < 0:
            raise ValueError("--degree must be nonnegative")
        if self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES)}")


@dataclass
class CliReport:
    status: str
    payload: dict = field(default_factory=dict)
    diagnostics: list = field(default_factory=list)
    text: list = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT[self.status]

    def render(self, as_json: bool) -> str:
        if as_json:
            body = {"schema": SCHEMA, "status": self.status}
            body.update(self.payload)
            if self.diagnostics:
                body["diagnostics"] = list(self.diagnostics)
            return json.dumps(body, indent=2, ensure_ascii=False) + "\n"
        return "".join(line + "\n" for line in self.text)


# --------------------------------------------------------------------------
# subcommands

def _need(req: CliRequest, n: int | None = None) -> list:
    exprs = list(req.expressions)
    if n is not None and len(exprs) != n:
        raise ValueError(f"{req.subcommand} takes exactly {n} expression(s), got {len(exprs)}")
    if not exprs:
        raise ValueError(f"{req.subcommand} needs at least one expression")
    return exprs


def _normal_form(req: CliRequest) -> CliReport:
    results, text = [], []
    for expr in _need(req):
        nf = eval_class(parse_braid(expr, req.kappa))
        results.append({"word": expr, **nf.to_json()})
        text.append(str(nf.element))
    return CliReport("ok", {"kappa": req.kappa, "results": results}, text=text)


def _reduce(req: CliRequest) -> CliReport:
    results, text = [], []
    for expr in _need(req):
        f = parse_poly(expr, req.kappa)
        entry = {"input": str(f)}
        if req.bound is not None:
            value = oracle_reduce(f, req.bound)
            entry.update(value=str(value), provenance="oracle", bound=req.bound)
        else:
            value = reduce_class(f)
            entry.update(value=str(value), provenance="recursive")
            if f.is_monomial():
                (a,) = f.support()
                entry["trace"] = list(reduce_monomial(a).trace)
        results.append(entry)
        text.append(str(value))
    return CliReport("ok", {"kappa": req.kappa, "results": results}, text=text)


def _pair(req: CliRequest) -> CliReport:
    lhs, rhs = (parse_poly(e, req.kappa) for e in _need(req, 2))
    value = pair(lhs, rhs)
    payload = {"value": str(value), "kappa": req.kappa, "lhs": str(lhs), "rhs": str(rhs)}
    return CliReport("ok", payload, text=[str(value)])


_COMPOSITION = re.compile(r"^\s*[\[(]?\s*(-?\d+(?:\s*[,\s]\s*-?\d+)*)\s*[\])]?\s*$")


def _parse_composition(text: str, kappa: int) -> tuple:
    m = _COMPOSITION.match(text)
    if not m:
        raise ParseError("composition must be a list of integers such as 1,0,-1", 0, text)
    a = tuple(int(x) for x in re.split(r"[,\s]+", m.group(1)))
    if len(a) != kappa:
        raise KappaMismatchError(f"composition {text!r} has {len(a)} entries, kappa is {kappa}")
    return a


def _macdonald(req: CliRequest) -> CliReport:
    results, text = [], []
    for expr in _need(req):
        data = mac_poly(_parse_composition(expr, req.kappa))
        results.append(data.to_json())
        label = ",".join(str(x) for x in data.composition)
        text.append(f"E({label}) = {data.polynomial}")
        text.append("eigenvalues: " + ", ".join(str(y) for y in data.eigenvalues))
    payload = results[0] if len(results) == 1 else {"results": results}
    return CliReport("ok", {"kappa": req.kappa, **payload}, text=text)


# --------------------------------------------------------------------------
# verify

def _window(kappa: int, d: int) -> list:
    return list(itertools.product(range(-d, d + 1), repeat=kappa))


def _operator_checks(kappa: int, d: int) -> dict:
    mons = [(a, PolyElement.monomial(a)) for a in _window(kappa, d)]
    one = PolyElement.one(kappa)
    checks: dict = {name: [] for name in (
        "hecke-quadratic", "braid", "locality", "lift", "g-conjugation",
        "y-commute", "cyclic-vector", "inverses",
    )}
    for a, f in mons:
        for i in range(1, kappa):
            checks["hecke-quadratic"].append(
                (f"T{i} X^{a}", lambda i=i, f=f: op_T(i, op_T(i, f)) == op_T(i, f).scale(HBAR) + f)
            )
            checks["lift"].append(
                (f"T{i} x{i} T{i} X^{a}", lambda i=i, f=f: op_T(i, op_X(i, op_T(i, f))) == op_X(i + 1, f))
            )
            checks["inverses"].append((f"T{i} X^{a}", lambda i=i, f=f: op_T_inv(i, op_T(i, f)) == f))
            for j in range(1, kappa):
                if j == i + 1:
                    checks["braid"].append((
                        f"T{i}T{j}T{i} X^{a}",
                        lambda i=i, j=j, f=f: op_T(i, op_T(j, op_T(i, f))) == op_T(j, op_T(i, op_T(j, f))),
                    ))
                elif j > i + 1:
                    checks["braid"].append(
                        (f"T{i}T{j} X^{a}", lambda i=i, j=j, f=f: op_T(i, op_T(j, f)) == op_T(j, op_T(i, f)))
                    )
            for j in range(1, kappa + 1):
                if j not in (i, i + 1):
                    checks["locality"].append(
                        (f"T{i} x{j} X^{a}", lambda i=i, j=j, f=f: op_T(i, op_X(j, f)) == op_X(j, op_T(i, f)))
                    )
        for b, h in mons:
            checks["g-conjugation"].append((
                f"X^{a} on X^{b}",
                lambda a=a, f=f, h=h: op_g(f * op_g(h, "forward"), "inverse")
                == (PolyElement.monomial(rotate(a), c_pow(-2 * a[0])) * h),
            ))
        for i in range(1, kappa + 1):
            checks["inverses"].append((f"Y{i} X^{a}", lambda i=i, f=f: op_Y(i, op_Y(i, f), -1) == f))
            for j in range(i + 1, kappa + 1):
                checks["y-commute"].append(
                    (f"Y{i}Y{j} X^{a}", lambda i=i, j=j, f=f: op_Y(i, op_Y(j, f)) == op_Y(j, op_Y(i, f)))
                )
        checks["inverses"].append((f"g X^{a}", lambda f=f: op_g(op_g(f, "forward"), "inverse") == f))
    for i in range(1, kappa):
        checks["cyclic-vector"].append((f"T{i} 1", lambda i=i: op_T(i, one) == one.scale(s_pow(1))))
    for i in range(1, kappa + 1):
        checks["cyclic-vector"].append(
            (f"Y{i} 1", lambda i=i: op_Y(i, one) == one.scale(s_pow(kappa + 1 - 2 * i)))
        )
    return checks


def _quotient_checks(kappa: int, d: int, bound: int | None) -> dict:
    box = _window(kappa, d)
    bound = bound or max(d, 1)
    checks: dict = {"total-degree-kill": [], "rotation": [], "r1-kernel": [], "oracle": []}
    for a in box:
        f = PolyElement.monomial(a)
        if sum(a):
            checks["total-degree-kill"].append((f"X^{a}", lambda a=a: reduce_monomial(a).lam.is_zero()))
        else:
            checks["oracle"].append(
                (f"X^{a}", lambda a=a, f=f: reduce_monomial(a).lam == oracle_reduce(f, bound))
            )
        checks["rotation"].append((
            f"X^{a}",
            lambda a=a: reduce_monomial(a).lam == c_pow(-2 * a[0]) * reduce_monomial(rotate(a)).lam,
        ))
        for i in range(1, kappa):
            checks["r1-kernel"].append(
                (f"T{i} X^{a}", lambda i=i, f=f: reduce_class(op_T(i, f) - f.scale(s_pow(1))).is_zero())
            )
    return checks


def _pairing_checks(kappa: int, d: int) -> dict:
    mons = [PolyElement.monomial(a) for a in _window(kappa, d)]
    one = PolyElement.one(kappa)
    checks: dict = {"normalization": [("<1,1>", lambda: pair(one, one).value == ONE)], "unitarity": []}
    gens = [("T", i) for i in range(1, kappa)] + [("X", i) for i in range(1, kappa + 1)]
    gens += [("Y", i) for i in range(1, kappa + 1)] + [("G", None)]
    for kind, i in gens:
        name = "g" if kind == "G" else f"{kind}{i}"
        for f in mons:
            for h in mons:
                checks["unitarity"].append((
                    f"{name}: X^{f.support()[0]}, X^{h.support()[0]}",
                    lambda kind=kind, i=i, f=f, h=h: unitarity_check(kind, i, f, h),
                ))
    return checks


def _compiler_checks(kappa: int) -> dict:
    checks: dict = {kind: [] for kind in WITNESS_KINDS}
    for i in range(1, kappa):
        checks["A1"].append((f"i={i}", lambda i=i: relation_witness("A1", i, kappa)))
        checks["corner-typo-check"].append((f"i={i}", lambda i=i: relation_witness("corner-typo-check", i, kappa)))
    for i in range(1, kappa + 1):
        checks["A2"].append((f"i={i}", lambda i=i: relation_witness("A2", i, kappa)))
    checks["marked-point"].append(("g^kappa", lambda: relation_witness("marked-point", None, kappa)))
    return checks


def _macdonald_checks(kappa: int, d: int) -> dict:
    comps = [a for a in _window(kappa, d) if abs(sum(a)) <= 1]
    checks: dict = {"eigenvector": [], "orthogonality": []}

    def eigen(a):
        data = mac_poly(a)
        return all(
            op_Y(i, data.polynomial) == data.polynomial.scale(y) for i, y in enumerate(data.eigenvalues, start=1)
        )

    for a in comps:
        checks["eigenvector"].append((f"E{a}", lambda a=a: eigen(a)))
    for a in comps:
        for b in comps:
            if sum(a) == sum(b):
                checks["orthogonality"].append((f"E{a}, E{b}", lambda a=a, b=b: orthogonality_check(a, b)))
    return checks


def _verify(req: CliRequest) -> CliReport:
    k, d = req.kappa, req.degree
    suites = SUITES[:-1] if req.suite == "all" else (req.suite,)
    builders = {
        "operators": lambda: _operator_checks(k, d),
        "quotient": lambda: _quotient_checks(k, d, req.bound),
        "pairing": lambda: _pairing_checks(k, d),
        "compiler": lambda: _compiler_checks(k),
        "macdonald": lambda: _macdonald_checks(k, d),
    }
    identities, text, diagnostics = [], [], []
    for suite in suites:
        for name, cases in builders[suite]().items():
            failures = []
            for label, check in cases:
                try:
                    ok = check()
                except DahaError as exc:
                    ok = False
                    label = f"{label} ({exc})"
                if not ok:
                    failures.append(label)
            passed = len(cases) - len(failures)
            identities.append(
                {"suite": suite, "name": name, "passed": passed, "total": len(cases), "failures": failures}
            )
            mark = "PASS" if not failures else "FAIL"
            text.append(f"{mark} {suite}/{name}: {passed}/{len(cases)}")
            diagnostics += [f"{suite}/{name}: {x}" for x in failures]
    status = "fail" if diagnostics else "ok"
    text += [f"  failed {x}" for x in diagnostics]
    payload = {"kappa": k, "suite": req.suite, "degree": d, "identities": identities}
    return CliReport(status, payload, diagnostics, text)


_DISPATCH = {
    "normal-form": _normal_form,
    "reduce": _reduce,
    "pair": _pair,
    "macdonald": _macdonald,
    "verify": _verify,
}


def run(request: CliRequest) -> CliReport:
    """Execute a request; every library or input error becomes an error report."""
    try:
        request.validate()
        return _DISPATCH[request.subcommand](request)
    except (DahaError, ValueError, ArithmeticError) as exc:
        return CliReport("error", {"kappa": request.kappa}, [f"{type(exc).__name__}: {exc}"])


# --------------------------------------------------------------------------
# argument parsing

def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--kappa", type=int, required=True, help="number of strands")
    common.add_argument("--json", action="store_true", help="structured output")
    parser = argparse.ArgumentParser(prog="dahaskein", description="Exact DAHA / torus braid skein computations.")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    p = sub.add_parser("normal-form", parents=[common], help="normal form of braid words")
    p.add_argument("expressions", nargs="+", metavar="WORD")
    p = sub.add_parser("reduce", parents=[common], help="reduce polynomials in the quotient")
    p.add_argument("expressions", nargs="+", metavar="POLY")
    p.add_argument("--bound", type=int, help="use the brute-force oracle on [-bound, bound]^kappa")
    p = sub.add_parser("pair", parents=[common], help="bilinear form of two polynomials")
    p.add_argument("expressions", nargs=2, metavar="POLY")
    p = sub.add_parser("macdonald", parents=[common], help="nonsymmetric Macdonald polynomials")
    p.add_argument("expressions", nargs="+", metavar="COMPOSITION")
    p = sub.add_parser("verify", parents=[common], help="run identity suites")
    p.add_argument("--suite", default="all", choices=SUITES)
    p.add_argument("--degree", type=int, default=1, help="exponent window [-degree, degree]")
    p.add_argument("--bound", type=int, help="oracle box radius for the quotient suite")
    return parser


def main(argv: list | None = None) -> int:
    ns = _parser().parse_args(argv)
    request = CliRequest(
        subcommand=ns.subcommand,
        kappa=ns.kappa,
        expressions=tuple(getattr(ns, "expressions", ())),
        json=ns.json,
        bound=getattr(ns, "bound", None),
        degree=getattr(ns, "degree", 1),
        suite=getattr(ns, "suite", "all"),
    )
    report = run(request)
    sys.stdout.write(report.render(request.json))
    if report.status == "error" and not request.json:
        for line in report.diagnostics:
            print(f"error: {line}", file=sys.stderr)
    return report.exit_code
