"""One function per verb: run the library operation and build its document."""

from __future__ import annotations

import argparse
from pathlib import Path
from typing import Any, Callable, Dict, List

from hck.chow.constraints import ConstraintReport, check_chow_constraints
from hck.chow.invariants import (
    chow2_expr,
    chow_dim,
    chow_euler,
    chow_euler_rec,
    chow_known_expr,
    kollar_bound,
)
from hck.cli.render import Document, render_template, table
from hck.cli.sweep import SWEEP_HEADERS, sweep
from hck.epoly.epoly import EPoly
from hck.epoly.localization import hodge_vanishing_violations, odd_betti_violations
from hck.series.sym_powers import sym_powers
from hck.toric.chow_lattice import chow_lattice
from hck.toric.euler_chow import euler_chow_series
from hck.toric.fan import load_fan
from hck.utils.errors import CheckFailure
from hck.variety.expr import VarietyExpr, evaluate
from hck.variety.parser import parse


def _index_data(args: argparse.Namespace, names: str) -> Dict[str, int]:
    return {name: getattr(args, name) for name in names}


def run_epoly(args: argparse.Namespace) -> Document:
    """
    Evaluate an expression and report one quantity of its E-polynomial.

    Args:
        args: Parsed arguments of the ``epoly`` verb.

    Returns:
        The document.
    """
    expr = parse(args.expr)
    a = evaluate(expr)
    data: Dict[str, Any] = {"expr": str(expr)}
    rows: List[List[Any]] = []

    if args.poincare:
        poincare = a.poincare()
        value: Any = str(poincare)
        data["poincare"] = poincare.to_terms()
        rows.append(["poincare", value])
    elif args.euler:
        value = a.euler_char()
        data["euler"] = value
        rows.append(["euler", value])
    elif args.hodge is not None:
        p, q = args.hodge
        value = a.coefficient(p, q)
        data["hodge"] = {"p": p, "q": q, "value": value}
        rows.append([f"h^{{{p},{q}}}", value])
    else:
        value = str(a)
        data["epoly"] = a.to_terms()
        rows.append(["epoly", value])

    extras: Dict[str, Any] = {"parity": None, "fixed_dim": None}
    if args.parity:
        even, odd = a.parity_sums()
        extras["parity"] = (even, odd)
        data["parity"] = {"even": even, "odd": odd}
        rows += [["b_even", even], ["b_odd", odd]]
    if args.fixed_dim is not None:
        hodge = hodge_vanishing_violations(a, args.fixed_dim)
        betti = odd_betti_violations(a, args.fixed_dim)
        extras.update(
            fixed_dim=args.fixed_dim, hodge_violations=hodge, betti_violations=betti
        )
        data["violations"] = {
            "fixed_dim": args.fixed_dim,
            "hodge": [list(entry) for entry in hodge],
            "odd_betti": [list(entry) for entry in betti],
        }
        rows.append(["violations", len(hodge) + len(betti)])

    text = f"{value}\n"
    if args.parity or args.fixed_dim is not None:
        text += render_template("epoly_extras.jinja", extras)
    return Document(text, data, ["quantity", "value"], rows)


def run_poincare(args: argparse.Namespace) -> Document:
    """
    Report the virtual Poincare polynomial of an expression.

    Args:
        args: Parsed arguments of the ``poincare`` verb.

    Returns:
        The document.
    """
    expr = parse(args.expr)
    poincare = evaluate(expr).poincare()
    data = {"expr": str(expr), "poincare": poincare.to_terms()}
    return Document(str(poincare), data, ["poincare"], [[str(poincare)]])


def run_betti(args: argparse.Namespace) -> Document:
    """
    Report every virtual Betti number of an expression.

    Args:
        args: Parsed arguments of the ``betti`` verb.

    Returns:
        The document.
    """
    expr = parse(args.expr)
    rows = [[k, beta] for k, beta in evaluate(expr).betti_numbers()]
    data = {
        "expr": str(expr),
        "betti": [{"k": k, "betti": beta} for k, beta in rows],
    }
    headers = ["k", "betti"]
    return Document(table(headers, rows), data, headers, rows)


def run_chow_euler(args: argparse.Namespace) -> Document:
    """
    Report the Euler characteristic of a Chow variety.

    Args:
        args: Parsed arguments of the ``chow-euler`` verb.

    Returns:
        The document.

    Raises:
        CheckFailure: if the recursion disagrees with the closed form.
    """
    chi = chow_euler(args.p, args.d, args.n)
    data: Dict[str, Any] = {**_index_data(args, "pdn"), "chi": chi}
    headers = ["p", "d", "n", "chi"]
    row: List[Any] = [args.p, args.d, args.n, chi]
    text = f"{chi}\n"
    if args.check_recursion:
        rec = chow_euler_rec(args.p, args.d, args.n)
        if rec != chi:
            raise CheckFailure("recursion disagrees with the closed form", chi, rec)
        data["recursion"] = "agree"
        headers.append("recursion")
        row.append("agree")
        text += "recursion: agree\n"
    return Document(text, data, headers, [row])


def run_chow_dim(args: argparse.Namespace) -> Document:
    """
    Report the dimension of a Chow variety.

    Args:
        args: Parsed arguments of the ``chow-dim`` verb.

    Returns:
        The document.
    """
    dim = chow_dim(args.p, args.d, args.n)
    data = {**_index_data(args, "pdn"), "dim": dim}
    return Document(
        str(dim), data, ["p", "d", "n", "dim"], [[args.p, args.d, args.n, dim]]
    )


def run_chow_bound(args: argparse.Namespace) -> Document:
    """
    Report the bound on the number of components of a Chow variety.

    Args:
        args: Parsed arguments of the ``chow-bound`` verb.

    Returns:
        The document.
    """
    bound = kollar_bound(args.p, args.d, args.n)
    data = {**_index_data(args, "pdn"), "kollar_bound": bound}
    return Document(
        str(bound),
        data,
        ["p", "d", "n", "kollar_bound"],
        [[args.p, args.d, args.n, bound]],
    )


def _constraints_text(report: ConstraintReport) -> str:
    return render_template(
        "constraints.jinja",
        {"index": report.index, "passed": report.passed, "checks": report.checks},
    )


def _variety_document(
    title: str, expr: VarietyExpr, p: int, d: int, n: int, check: bool
) -> Document:
    a = evaluate(expr)
    poincare = a.poincare()
    data: Dict[str, Any] = {
        "p": p,
        "d": d,
        "n": n,
        "expr": str(expr),
        "epoly": a.to_terms(),
        "poincare": poincare.to_terms(),
        "euler": a.euler_char(),
    }
    rows: List[List[Any]] = [
        ["expr", str(expr)],
        ["epoly", str(a)],
        ["poincare", str(poincare)],
        ["euler", a.euler_char()],
    ]
    text = render_template(
        "variety.jinja",
        {"title": title, "epoly": a, "poincare": poincare, "euler": a.euler_char()},
    )
    if check:
        report = check_chow_constraints(a, p, d, n)
        if not report.passed:
            raise CheckFailure(
                f"{report.index} violates the Chow constraints",
                "all pass",
                ", ".join(check.name for check in report.failures()),
            )
        data["constraints"] = report.to_dict()
        rows.append(["constraints", "pass"])
        text += _constraints_text(report)
    return Document(text, data, ["quantity", "value"], rows)


def run_chow2(args: argparse.Namespace) -> Document:
    """
    Report the E-polynomial of C_{p,2}(P^n).

    Args:
        args: Parsed arguments of the ``chow2`` verb.

    Returns:
        The document.
    """
    expr = chow2_expr(args.p, args.n)
    title = f"C_{{{args.p},2}}(P^{args.n}) = {expr}"
    return _variety_document(title, expr, args.p, 2, args.n, args.check_constraints)


def run_chow_hodge(args: argparse.Namespace) -> Document:
    """
    Report the E-polynomial of a Chow variety with a known closed form.

    Args:
        args: Parsed arguments of the ``chow-hodge`` verb.

    Returns:
        The document.
    """
    expr = chow_known_expr(args.p, args.d, args.n)
    title = f"C_{{{args.p},{args.d}}}(P^{args.n}) = {expr}"
    return _variety_document(
        title, expr, args.p, args.d, args.n, args.check_constraints
    )


def run_sym(args: argparse.Namespace) -> Document:
    """
    Report the E-polynomials of the symmetric powers of an expression.

    Args:
        args: Parsed arguments of the ``sym`` verb.

    Returns:
        The document.
    """
    expr = parse(args.expr)
    powers = sym_powers(evaluate(expr), args.dmax)
    entries: List[EPoly] = [powers.entry(d) for d in range(args.dmax + 1)]
    rows = [[d, str(e), str(e.poincare())] for d, e in enumerate(entries)]
    data = {
        "expr": str(expr),
        "powers": [
            {"d": d, "epoly": e.to_terms(), "poincare": e.poincare().to_terms()}
            for d, e in enumerate(entries)
        ],
    }
    headers = ["d", "epoly", "poincare"]
    return Document(table(headers, rows), data, headers, rows)


def run_toric(args: argparse.Namespace) -> Document:
    """
    Report the Euler-Chow series of a toric variety given by a fan file.

    Args:
        args: Parsed arguments of the ``toric`` verb.

    Returns:
        The document.
    """
    fan = load_fan(args.fan)
    lattice = chow_lattice(fan, args.p)
    series = euler_chow_series(
        fan, args.p, args.bound, args.degree_functional, lattice=lattice
    )
    headers = [f"c{i}" for i in range(series.basis_rank)] + ["chi"]
    rows = [list(cls) + [chi] for cls, chi in series.entries()]
    text = render_template(
        "toric.jinja",
        {
            "p": args.p,
            "fan_name": Path(args.fan).name,
            "rank": lattice.rank,
            "classes": zip(lattice.generators, lattice.class_coords),
            "functional": series.functional,
            "bound": series.bound,
            "table": table(headers, rows),
        },
    )
    return Document(text, series.to_list(), headers, rows)


def run_sweep(args: argparse.Namespace) -> Document:
    """
    Tabulate Chow invariants over ranges of (p, d, n).

    Args:
        args: Parsed arguments of the ``sweep`` verb.

    Returns:
        The document.
    """
    rows = sweep(
        args.p, args.d, args.n, jobs=args.jobs, check_recursion=args.check_recursion
    )
    headers = SWEEP_HEADERS + ["constraints_ok"]
    if args.check_recursion:
        headers.append("recursion_ok")
    text_rows = [list(row.to_dict().values()) for row in rows]
    return Document(
        table(headers, text_rows),
        [row.to_dict() for row in rows],
        list(SWEEP_HEADERS),
        [row.values() for row in rows],
    )


COMMANDS: Dict[str, Callable[[argparse.Namespace], Document]] = {
    "epoly": run_epoly,
    "poincare": run_poincare,
    "betti": run_betti,
    "chow-euler": run_chow_euler,
    "chow-dim": run_chow_dim,
    "chow-bound": run_chow_bound,
    "chow2": run_chow2,
    "chow-hodge": run_chow_hodge,
    "sym": run_sym,
    "toric": run_toric,
    "sweep": run_sweep,
}
