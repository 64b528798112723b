"""Command-line front end.

Every subcommand reads JSON problem files, emits one JSON document on
stdout (format_version pinned for downstream scripts), and keeps all
diagnostics on stderr.  Exit codes: 0 success or true verdict, 1 false
verdict or suite failures, 2 parse/usage errors, 3 unsupported-input
verdicts (non-split semisimple part, box too small, unfactored ratios).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import gln as gln_model
from . import torus as torus_model
from .gln import NonSplitError
from .oracles import FuzzConfig
from .polytope import WeightSet
from .rationals import UnfactoredError, format_rational
from .serialize import (
    FORMAT_VERSION,
    ProblemFormatError,
    barycentric_to_json,
    cocharacter_to_json,
    load_gln_cocharacter,
    load_gln_decomposition,
    load_gln_matrix,
    load_gln_pair,
    load_torus_decomposition,
    load_torus_problem,
    matrix_to_json,
    read_json,
    vector_to_json,
)
from .suites import run_suite
from .torus import BoxTooSmallError

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _payload(command: str, **fields) -> dict:
    out = {"format_version": FORMAT_VERSION, "command": command}
    out.update(fields)
    return out


def _parse_cochar(text: str, rank: int):
    try:
        lam = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ProblemFormatError(f"malformed cocharacter {text!r}") from exc
    if len(lam) != rank:
        raise ProblemFormatError(f"cocharacter {text!r} has rank {len(lam)}, expected {rank}")
    return lam


def _poly_to_json(p):
    return [format_rational(c) for c in p]


def _cmd_limit(args) -> int:
    if args.model == "torus":
        if args.cochar is None:
            raise ProblemFormatError("the torus model needs --cochar")
        rep, v = load_torus_problem(read_json(args.file))
        lam = _parse_cochar(args.cochar, rep.rank)
        val = torus_model.limit(lam, v)
        _emit(
            _payload(
                "limit",
                model="torus",
                cocharacter=list(lam),
                exists=val is not None,
                limit=vector_to_json(val) if val is not None else None,
            )
        )
    else:
        if args.cochar_file is None:
            raise ProblemFormatError("the matrix model needs --cochar-file")
        x = load_gln_matrix(read_json(args.file))
        lam = load_gln_cocharacter(read_json(args.cochar_file))
        val = gln_model.limit_conj(lam, x)
        _emit(
            _payload(
                "limit",
                model="gln",
                cocharacter=cocharacter_to_json(lam),
                exists=val is not None,
                limit=matrix_to_json(val) if val is not None else None,
            )
        )
    return EXIT_OK if val is not None else EXIT_FALSE


def _cmd_semisimple(args) -> int:
    if args.model == "torus":
        rep, v = load_torus_problem(read_json(args.file))
        res = torus_model.is_semisimple(v)
        if res.semisimple:
            bary = res.barycentric
            if bary:
                assert sum(bary.values()) == 1
                assert all(
                    sum(c * chi[k] for chi, c in bary.items()) == 0
                    for k in range(rep.rank)
                )
            _emit(
                _payload(
                    "semisimple",
                    model="torus",
                    semisimple=True,
                    barycentric=barycentric_to_json(bary),
                    cocharacter=None,
                )
            )
            return EXIT_OK
        lam = res.cocharacter
        lim = torus_model.limit(lam, v)
        assert lim is not None and lim != v
        _emit(
            _payload(
                "semisimple",
                model="torus",
                semisimple=False,
                barycentric=None,
                cocharacter=list(lam),
            )
        )
        return EXIT_FALSE
    x = load_gln_matrix(read_json(args.file))
    verdict = gln_model.is_semisimple_matrix(x)
    _emit(
        _payload(
            "semisimple",
            model="gln",
            semisimple=verdict,
            minimal_polynomial=_poly_to_json(gln_model.minpoly(x)),
        )
    )
    return EXIT_OK if verdict else EXIT_FALSE


def _cmd_nilpotent(args) -> int:
    rep, v = load_torus_problem(read_json(args.file))
    fixed_pts = tuple(_parse_cochar(t, rep.rank) for t in args.fixed or [])
    fixed = WeightSet(rep.rank, tuple(dict.fromkeys(fixed_pts)))
    verdict, lam = torus_model.is_nilpotent(v, fixed)
    _emit(
        _payload(
            "nilpotent",
            nilpotent=verdict,
            cocharacter=list(lam) if lam is not None else None,
            fixed=[list(p) for p in fixed.points],
        )
    )
    return EXIT_OK if verdict else EXIT_FALSE


def _cmd_jkv(args) -> int:
    if args.model == "torus":
        rep, v = load_torus_problem(read_json(args.file))
        dec = torus_model.jkv_decompose(rep, v)
        assert dec.report.ok
        _emit(
            _payload(
                "jkv",
                model="torus",
                s=vector_to_json(dec.s),
                n=vector_to_json(dec.n),
                cocharacter=list(dec.cocharacter),
                clauses=dec.report.clauses,
            )
        )
        return EXIT_OK
    x = load_gln_matrix(read_json(args.file))
    cert = gln_model.jkv_gln(x)
    assert cert.ok
    _emit(
        _payload(
            "jkv",
            model="gln",
            s=matrix_to_json(cert.s),
            n=matrix_to_json(cert.n),
            cocharacter=cocharacter_to_json(cert.cocharacter),
            polynomial=_poly_to_json(cert.polynomial),
            clauses=cert.clauses,
        )
    )
    return EXIT_OK


def _cmd_certify_jkv(args) -> int:
    if args.model == "torus":
        rep, gamma = load_torus_problem(read_json(args.file))
        s, n, lam = load_torus_decomposition(read_json(args.decomposition), rep)
        report = torus_model.jkv_certify(rep, gamma, s, n, lam)
        _emit(
            _payload(
                "certify-jkv",
                model="torus",
                valid=report.ok,
                clauses=report.clauses,
            )
        )
        return EXIT_OK if report.ok else EXIT_FALSE
    x = load_gln_matrix(read_json(args.file))
    s, n, lam = load_gln_decomposition(read_json(args.decomposition))
    from .ratlinalg import is_zero_mat, qmul, qsub, qzeros

    size = len(x)
    if lam.n != size or len(s) != size or len(n) != size:
        raise ProblemFormatError("decomposition sizes do not match the problem")
    y = qmul(qmul(lam.g_inv, s), lam.g)
    e = lam.exponents
    clauses = {
        "sum": qsub(x, s) == n,
        "s_semisimple": gln_model.is_semisimple_matrix(s),
        "n_nilpotent": is_zero_mat(gln_model.mat_power(n, size)),
        "commutes": all(
            y[i][j] == 0 for i in range(size) for j in range(size) if e[i] != e[j]
        ),
        "limit": gln_model.limit_conj(lam, x) == s,
        "n_limit_zero": gln_model.limit_conj(lam, n) == qzeros(size, size),
    }
    ok = all(clauses.values())
    _emit(_payload("certify-jkv", model="gln", valid=ok, clauses=clauses))
    return EXIT_OK if ok else EXIT_FALSE


def _cmd_lambda_min(args) -> int:
    rep, v = load_torus_problem(read_json(args.file))
    dim, wits = torus_model.lambda_min(rep, v, args.box)
    _emit(
        _payload(
            "lambda-min",
            box=args.box,
            min_fixed_dim=dim,
            witnesses=[list(w) for w in wits],
        )
    )
    return EXIT_OK


def _cmd_orbit_eq(args) -> int:
    rep, v = load_torus_problem(read_json(args.file))
    rep2, v2 = load_torus_problem(read_json(args.file2))
    if rep != rep2:
        raise ProblemFormatError("the two problem files must share the same module")
    g = torus_model.same_orbit(rep, v, v2)
    if g is None:
        _emit(_payload("orbit-eq", same_orbit=False, witness=None))
        return EXIT_FALSE
    assert torus_model.act(rep, g, v) == v2
    _emit(
        _payload(
            "orbit-eq",
            same_orbit=True,
            witness={
                "torus": [format_rational(a) for a in g.torus],
                "finite_index": g.finite_index,
            },
        )
    )
    return EXIT_OK


def _cmd_compose_mu(args) -> int:
    rep, _ = load_torus_problem(read_json(args.file))
    lam0 = _parse_cochar(args.lambda0, rep.rank)
    lam = _parse_cochar(args.lam, rep.rank)
    n, mu = torus_model.compose_cocharacters(rep, lam0, lam)
    _emit(_payload("compose-mu", n=n, mu=list(mu)))
    return EXIT_OK


def _cmd_bruhat(args) -> int:
    g = load_gln_matrix(read_json(args.file))
    from .ratlinalg import qmul

    p, w, u = gln_model.bruhat(g)
    assert qmul(qmul(p, w), u) == g
    _emit(
        _payload(
            "bruhat",
            p=matrix_to_json(p),
            w=matrix_to_json(w),
            u=matrix_to_json(u),
        )
    )
    return EXIT_OK


def _cmd_jordan_chevalley(args) -> int:
    x = load_gln_matrix(read_json(args.file))
    from .ratlinalg import qmul, qsub

    s, n, p = gln_model.jordan_chevalley(x)
    assert qsub(x, s) == n and qmul(s, n) == qmul(n, s)
    assert gln_model.eval_poly_matrix(p, x) == s
    _emit(
        _payload(
            "jordan-chevalley",
            s=matrix_to_json(s),
            n=matrix_to_json(n),
            polynomial=_poly_to_json(p),
        )
    )
    return EXIT_OK


def _cmd_conjugacy(args) -> int:
    x, y = load_gln_pair(read_json(args.file))
    from .ratlinalg import qinverse, qmul

    g = gln_model.rational_conjugacy(x, y)
    if g is None:
        _emit(_payload("conjugacy", conjugate=False, witness=None))
        return EXIT_FALSE
    assert qmul(qmul(g, x), qinverse(g)) == y
    _emit(_payload("conjugacy", conjugate=True, witness=matrix_to_json(g)))
    return EXIT_OK


def _cmd_survey(args) -> int:
    rep, v = load_torus_problem(read_json(args.file))
    survey = torus_model.limit_survey(rep, v, args.box)
    entries = [
        {
            "cocharacter": list(e.cocharacter),
            "exists": e.exists,
            "limit": vector_to_json(e.value) if e.value is not None else None,
            "semisimple": e.semisimple,
        }
        for e in survey.entries
    ]
    _emit(_payload("survey", box=args.box, entries=entries))
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        config = FuzzConfig(seed=args.seed, count=args.count, box=args.box)
        report = run_suite(args.suite, config)
    except KeyError as exc:
        sys.stderr.write(f"error: {exc.args[0]}\n")
        return EXIT_USAGE
    sys.stderr.write(f"suite {report.suite}: {report.wall_time:.2f}s\n")
    _emit(
        _payload(
            "verify",
            suite=report.suite,
            seed=report.seed,
            count=report.count,
            instances=report.instances,
            failures=[
                {"index": f.index, "clause": f.clause, "input": f.payload}
                for f in report.failures
            ],
            passed=report.passed,
        )
    )
    return EXIT_OK if report.passed else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jkvkit",
        description="Exact cocharacter limits, Jordan-Kac-Vinberg decompositions, "
        "and rational orbit-equivalence certificates.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        return p

    p = add("limit", _cmd_limit, help="limit of a vector along a cocharacter")
    p.add_argument("model", choices=["torus", "gln"])
    p.add_argument("--file", required=True, help="problem file")
    p.add_argument("--cochar", help="integer cocharacter, e.g. '1,0' (torus)")
    p.add_argument("--cochar-file", help="cocharacter file (gln)")

    p = add("semisimple", _cmd_semisimple, help="closed-orbit certificate")
    p.add_argument("model", choices=["torus", "gln"])
    p.add_argument("--file", required=True)

    p = add("nilpotent", _cmd_nilpotent, help="nilpotency relative to fixed weights")
    p.add_argument("model", choices=["torus"])
    p.add_argument("--file", required=True)
    p.add_argument("--fixed", action="append", help="weight to fix, e.g. '1,0'; repeatable")

    p = add("jkv", _cmd_jkv, help="Jordan-Kac-Vinberg decomposition with certificate")
    p.add_argument("model", choices=["torus", "gln"])
    p.add_argument("--file", required=True)

    p = add("certify-jkv", _cmd_certify_jkv, help="check a supplied decomposition")
    p.add_argument("model", choices=["torus", "gln"])
    p.add_argument("--file", required=True)
    p.add_argument("--decomposition", required=True)

    p = add("lambda-min", _cmd_lambda_min, help="minimal fixed-space dimension in a box")
    p.add_argument("model", choices=["torus"])
    p.add_argument("--file", required=True)
    p.add_argument("--box", type=int, default=3)

    p = add("orbit-eq", _cmd_orbit_eq, help="rational orbit equivalence of two vectors")
    p.add_argument("model", choices=["torus"])
    p.add_argument("--file", required=True)
    p.add_argument("--file2", required=True)

    p = add("compose-mu", _cmd_compose_mu, help="compose two cocharacters")
    p.add_argument("model", choices=["torus"])
    p.add_argument("--file", required=True)
    p.add_argument("--lambda0", required=True)
    p.add_argument("--lambda", dest="lam", required=True)

    p = add("bruhat", _cmd_bruhat, help="p * w * u factorization")
    p.add_argument("--file", required=True)

    p = add("jordan-chevalley", _cmd_jordan_chevalley, help="exact S + N decomposition")
    p.add_argument("--file", required=True)

    p = add("conjugacy", _cmd_conjugacy, help="rational conjugacy of a matrix pair")
    p.add_argument("--file", required=True, help="pair file {n, x, y}")

    p = add("survey", _cmd_survey, help="limits over a whole cocharacter box")
    p.add_argument("model", choices=["torus"])
    p.add_argument("--file", required=True)
    p.add_argument("--box", type=int, default=3)

    p = add("verify", _cmd_verify, help="run a named verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--box", type=int, default=3)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except ProblemFormatError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (FileNotFoundError, IsADirectoryError, PermissionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (NonSplitError, BoxTooSmallError, UnfactoredError) as exc:
        sys.stderr.write(f"unsupported: {exc}\n")
        return EXIT_UNSUPPORTED
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
