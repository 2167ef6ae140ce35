"""``hesslab`` command line front end."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .combin import fmt_partition, parse_partition
from .emit import FORMATS, Grid, emit
from .golden import GoldenSchemaError, load_b3
from .idealkit import (c_of, enumerate_ideals, format_key, ideal_from_minimal,
                       ideal_key, make_ideal)
from .modlaw import QVec, check_modular, enumerate_triples, solve_modular
from .nilgrade import (Decomposition, block_ideal, dclp_poincare, generic_subspaces,
                       grading_for_partition)
from .qlaurent import format_expanded, parse_qpoly
from .rootcore import CapabilityError, build_root_system, chevalley_basis, parse_system
from .symkit import (abreu_nigro_csf, csf_bruteforce, llt_bruteforce, parse_hess,
                     schur_f_extract)
from .verify import table1_blocks, verify_b3, verify_typeA
from .wrepkit import (char_table, fmt_label, irr_order, kostka_matrix, llt_rep,
                      parabolic_f)


def _rs(args):
    return build_root_system(*parse_system(args.system))


def _ids(rs, data=None) -> dict[int, int]:
    """Ideal mask -> row id; B3 uses the golden numbering, otherwise 1 = u."""
    if rs.label == "B3":
        try:
            return load_b3(data)[0].id_of_mask()
        except (OSError, GoldenSchemaError):
            pass
    return {I.mask: i + 1 for i, I in enumerate(enumerate_ideals(rs))}


def parse_ideal(rs, text: str):
    text = text.strip()
    if text in ("0", "", "empty"):
        return make_ideal(rs, [])
    if text in ("D", "Delta", "u"):
        return ideal_from_minimal(rs, range(rs.rank))
    roots = []
    for tok in text.split(","):
        k = rs.find(tuple(int(ch) for ch in tok.strip()))
        if k is None or k >= rs.N:
            raise SystemExit(f"{tok!r} is not a positive root of {rs.label}")
        roots.append(k)
    return ideal_from_minimal(rs, roots)


def _out(args, obj) -> None:
    sys.stdout.write(emit(obj, args.format))


# -- subcommands -------------------------------------------------------------------

def cmd_ideals(args):
    rs = _rs(args)
    ids = _ids(rs, args.data)
    ideals = sorted(enumerate_ideals(rs), key=lambda I: ids[I.mask])
    if args.format == "json":
        rows = [{"id": ids[I.mask], "min_roots": list(ideal_key(rs, I)), "size": I.size, "c": c_of(rs, I)}
                for I in ideals]
        _out(args, rows)
    else:
        g = Grid(f"ideals of {rs.label}", ["min roots", "size", "c"], row_header="id")
        for I in ideals:
            g.add(str(ids[I.mask]), [format_key(rs, I), I.size, c_of(rs, I)])
        _out(args, g)
    return 0


def cmd_triples(args):
    rs = _rs(args)
    ids = _ids(rs, args.data)
    rows = []
    for t in enumerate_triples(rs):
        rows.append({"ids": [ids[t.I0.mask], ids[t.I1.mask], ids[t.I2.mask]],
                     "alpha": rs.key(t.alpha), "beta": rs.key(t.beta),
                     "min_roots": [format_key(rs, I) for I in (t.I0, t.I1, t.I2)]})
    rows.sort(key=lambda r: r["ids"])
    if args.format == "json":
        _out(args, rows)
    else:
        g = Grid(f"modular triples of {rs.label}", ["I0", "I1", "I2", "alpha", "beta"], row_header="#")
        for i, r in enumerate(rows, 1):
            g.add(str(i), r["ids"] + [r["alpha"], r["beta"]])
        _out(args, g)
    return 0


def _qpoly_grid(title, row_labels, col_labels, cells, row_header=""):
    g = Grid(title, [str(c) for c in col_labels], row_header=row_header)
    for lab, row in zip(row_labels, cells):
        g.add(str(lab), list(row))
    return g


def cmd_chartable(args):
    rs = _rs(args)
    ct = char_table(rs)
    cols = [fmt_label(k) for k in ct.class_keys]
    g = Grid(f"character table of W({rs.label})", cols, row_header="irr")
    g.add("class size", list(ct.class_sizes))
    for lab, vals in zip(ct.labels, ct.values):
        g.add(fmt_label(lab), list(vals))
    _out(args, g)
    return 0


def cmd_parabolic_f(args):
    rs = _rs(args)
    levi = [int(x) - 1 for x in args.levi.split(",") if x.strip()] if args.levi else []
    ct = char_table(rs)
    f = parabolic_f(rs, ct, levi)
    if args.format == "json":
        _out(args, {fmt_label(k): format_expanded(v) for k, v in f.items()})
    else:
        g = Grid(f"parabolic f for Levi {args.levi or 'none'}", [fmt_label(k) for k in f], row_header="")
        g.add("f", list(f.values()))
        _out(args, g)
    return 0


def cmd_kostka(args):
    n = args.n
    order = irr_order(n)
    K = kostka_matrix(n)
    labels = [fmt_partition(lam) for lam in order]
    _out(args, _qpoly_grid(f"modified Kostka-Foulkes matrix, n={n}", labels, labels,
                           [[K[i, j] for j in range(len(order))] for i in range(len(order))],
                           row_header="irr \\ orbit"))
    return 0


def _symfunc_out(args, F):
    basis = getattr(args, "basis", "schur")
    if args.format == "json":
        _out(args, F.to_json(basis))
    else:
        coeffs = F.to_basis(basis) if basis not in ("schur", "s") else F.coeffs
        keys = sorted(coeffs, reverse=True)
        g = Grid(f"{basis} expansion", [fmt_partition(k) for k in keys], row_header="")
        g.add(basis, [coeffs[k] for k in keys])
        _out(args, g)


def cmd_csf(args):
    h = parse_hess(args.hess)
    n = args.n or len(h)
    F = csf_bruteforce(n, h) if args.method == "brute" else abreu_nigro_csf(n, h)
    _symfunc_out(args, F)
    return 0


def cmd_llt_poly(args):
    h = parse_hess(args.hess)
    _symfunc_out(args, llt_bruteforce(args.n or len(h), h))
    return 0


def cmd_llt(args):
    h = parse_hess(args.hess)
    n = args.n or len(h)
    rs = build_root_system("A", n - 1)
    ct = char_table(rs)
    g = llt_rep(rs, ct, schur_f_extract(n, h))
    if args.format == "json":
        _out(args, {fmt_label(k): format_expanded(v) for k, v in g.items()})
    else:
        grid = Grid(f"LLT multiplicities for h={args.hess}", [fmt_label(k) for k in g], row_header="")
        grid.add("g", list(g.values()))
        _out(args, grid)
    return 0


def cmd_decompose(args):
    rs = _rs(args)
    lam = parse_partition(args.orbit)
    gr = grading_for_partition(rs, lam)
    I = parse_ideal(rs, args.ideal)
    cb = chevalley_basis(rs)
    dec = Decomposition(rs, gr)
    ids = _ids(rs, args.data)
    gen = set(generic_subspaces(cb, gr, args.seed))
    pieces = []
    for U, g in sorted(dec.g_polys(I).items(), key=lambda kv: kv[0].mask):
        entry = {"U": [rs.key(k) for k in U.roots()], "g": format_expanded(g),
                 "generic": U in gen}
        if U in gen:
            B = block_ideal(rs, gr, U)
            entry["block"] = {"id": ids[B.mask], "min_roots": format_key(rs, B)}
        pieces.append(entry)
    out = {"system": rs.label, "orbit": list(lam), "wdd": gr.label_str(),
           "ideal": {"id": ids[I.mask], "min_roots": format_key(rs, I)},
           "W0_size": len(dec.reps), "pieces": pieces}
    if args.chi:
        if rs.label != "B3":
            raise SystemExit("--chi needs golden blocks, available for B3 only")
        t1, _ = load_b3(args.data)
        if args.chi not in t1.columns:
            raise SystemExit(f"unknown column {args.chi!r}; choose from {t1.columns}")
        _gr, gens, blocks = table1_blocks(rs, t1, cb, args.seed)[args.chi]
        out["poincare"] = format_expanded(dclp_poincare(rs, gr, I, blocks, generic=gens, decomp=dec))
    if args.format != "json":
        raise SystemExit("decompose only emits json")
    _out(args, out)
    return 0


def _load_family(path: str):
    """Family file: {"system": "B3", "values": {"<min roots>": qpoly or {label: qpoly}}}."""
    obj = json.loads(Path(path).read_text())
    rs = build_root_system(*parse_system(obj["system"]))
    vals = {}
    for key, v in obj.get("values", {}).items():
        I = parse_ideal(rs, key)
        if isinstance(v, dict):
            vals[I.mask] = QVec({k: parse_qpoly(x) for k, x in v.items()})
        else:
            vals[I.mask] = parse_qpoly(v)
    if len({type(v) for v in vals.values()}) > 1:
        raise SystemExit("family values must be all polynomials or all label mappings")
    kind = obj.get("kind", "second_kind")
    if kind not in ("first_kind", "second_kind"):
        raise SystemExit(f"unknown law kind {kind!r}")
    return rs, vals, kind


def _oriented(rs, kind):
    ts = [(t.I0.mask, t.I1.mask, t.I2.mask) for t in enumerate_triples(rs)]
    # the first kind is the second kind with I0 and I2 exchanged
    return [(c, b, a) for a, b, c in ts] if kind == "first_kind" else ts


def _value_json(v):
    if isinstance(v, QVec):
        return {str(k): format_expanded(x) for k, x in sorted(v.data.items(), key=lambda kv: str(kv[0]))}
    return format_expanded(v)


def cmd_check_law(args):
    rs, vals, kind = _load_family(args.family)
    ids = _ids(rs, args.data)
    missing = {m for t in _oriented(rs, kind) for m in t} - set(vals)
    if missing:
        raise SystemExit(f"family lacks {len(missing)} ideals appearing in triples")
    bad = check_modular(_oriented(rs, kind), vals)
    _out(args, {"kind": kind, "violations": [
        {"triple": [ids[m] for m in (v.triple[::-1] if kind == "first_kind" else v.triple)],
         "residual": _value_json(v.residual)} for v in bad]})
    return 1 if bad else 0


def cmd_solve_law(args):
    rs, vals, kind = _load_family(args.base)
    ids = _ids(rs, args.data)
    universe = [I.mask for I in enumerate_ideals(rs)]
    res = solve_modular(_oriented(rs, kind), vals, universe)
    key = {I.mask: format_key(rs, I) for I in enumerate_ideals(rs)}
    _out(args, {"kind": kind,
                "values": {key[m]: _value_json(v) for m, v in sorted(res.values.items(), key=lambda kv: ids[kv[0]])},
                "undetermined": sorted(key[m] for m in res.undetermined),
                "inconsistent": res.inconsistent,
                "certificate": [str(c) for c in res.certificate]})
    return 1 if res.inconsistent else 0


def cmd_verify_b3(args):
    rep = verify_b3(seed=args.seed, jobs=args.jobs, data=args.data)
    _out(args, rep)
    return 0 if rep.ok else 1


def cmd_verify_typeA(args):
    rep = verify_typeA(args.n or 4, seed=args.seed, jobs=args.jobs)
    _out(args, rep)
    return 0 if rep.ok else 1


def cmd_emit(args):
    t1, t2 = load_b3(args.data)
    what = {"table1": t1, "table2": t2}
    if args.what in what:
        _out(args, what[args.what])
    elif args.what == "verify-b3":
        _out(args, verify_b3(seed=args.seed, jobs=args.jobs, data=args.data))
    else:
        raise SystemExit(f"unknown emit target {args.what!r}")
    return 0


# -- parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--system", default="B3", help="root system label such as A3 or B3")
    common.add_argument("--n", type=int, help="type A size (sl_n)")
    common.add_argument("--hess", help="Hessenberg function, e.g. 2,3,3")
    common.add_argument("--orbit", help="nilpotent orbit partition, e.g. 3,2,2")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--json", dest="format", action="store_const", const="json")
    common.add_argument("--csv", dest="format", action="store_const", const="csv")
    common.add_argument("--latex", dest="format", action="store_const", const="latex")
    common.add_argument("--data", help="golden data directory (default: $HESSLAB_DATA or the bundled copy)")
    common.add_argument("--jobs", type=int, default=1)

    p = argparse.ArgumentParser(prog="hesslab", description="Hessenberg variety invariants and table checks.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, parents=[common], **kw)
        sp.set_defaults(fn=fn)
        return sp

    add("ideals", cmd_ideals, help="list ad-nilpotent ideals")
    add("triples", cmd_triples, help="list modular triples")
    add("chartable", cmd_chartable, help="Weyl group character table (types A, B, C)")
    add("parabolic-f", cmd_parabolic_f, help="f-vector of a parabolic ideal").add_argument(
        "--levi", default="", help="1-based simple roots of the Levi, e.g. 1,3")
    add("kostka", cmd_kostka, help="modified Kostka-Foulkes matrix in type A")
    sp = add("csf", cmd_csf, help="chromatic quasisymmetric function")
    sp.add_argument("--basis", choices=("schur", "e", "m", "p", "h"), default="schur")
    sp.add_argument("--method", choices=("brute", "modular"), default="modular")
    sp = add("llt-poly", cmd_llt_poly, help="unicellular LLT polynomial by brute force")
    sp.add_argument("--basis", choices=("schur", "e", "m", "p", "h"), default="schur")
    add("llt", cmd_llt, help="LLT multiplicities from the f-vector")
    sp = add("decompose", cmd_decompose, help="cell decomposition data for one ideal and orbit")
    sp.add_argument("--ideal", required=True, help="minimal roots, e.g. 100,011, or 0 / D")
    sp.add_argument("--chi", help="golden column label to evaluate the Poincare polynomial")
    add("check-law", cmd_check_law, help="check a family against the modular law").add_argument(
        "--family", required=True, help="JSON file")
    add("solve-law", cmd_solve_law, help="extend base values by the modular law").add_argument(
        "--base", required=True, help="JSON file")
    add("verify-b3", cmd_verify_b3, help="run all B3 table checks")
    add("verify-typeA", cmd_verify_typeA, help="run the type A oracle loop up to --n")
    add("emit", cmd_emit, help="emit a golden table or report").add_argument(
        "what", choices=("table1", "table2", "verify-b3"))
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cmd in ("csf", "llt-poly", "llt") and not args.hess:
            raise SystemExit(f"{args.cmd} needs --hess")
        if args.cmd == "decompose" and not args.orbit:
            raise SystemExit("decompose needs --orbit")
        if args.cmd == "kostka" and not args.n:
            raise SystemExit("kostka needs --n")
        return args.fn(args)
    except (CapabilityError, GoldenSchemaError, ValueError, OSError) as exc:
        print(f"hesslab: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        if isinstance(exc.code, str):    # bad user input raised as a message
            print(f"hesslab: error: {exc.code}", file=sys.stderr)
            return 2
        raise


if __name__ == "__main__":
    sys.exit(main())
