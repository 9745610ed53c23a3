"""Command-line front door.

Subcommands: analyze, gnp-sweep, witness, spectral, phi, generate.
Exit codes: 0 success, 1 input error, 2 internal soundness violation,
3 budget/resource exhaustion.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import bounds as bounds_mod
from .errors import (BudgetExceededError, InputError, NumericError,
                     ResourceError, SoundnessError)
from .forcing import closure, zero_forcing_number_exact
from .graph import (Graph, bits, gnp_sample, is_regular, mask_from,
                    odd_inner_product_graph, random_regular_sample,
                    read_edge_list, standard_graph, write_edge_list)
from .rng import SplitMix64
from .spectral import (greedy_witness, greedy_witness_guarantee,
                       line_graph_forcing_construction, mixing_defect,
                       sample_vertex_subset, spectrum)
from .sweep import SweepConfig, records_to_csv, run_gnp_sweep
from .witness import (check_witness, format_witness, max_witness_order,
                      parse_witness, superdiagonal_ratio_table,
                      witness_from_forcing, witness_labels_independent)

MIXING_SLACK = 1e-8


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise InputError(f"expected a comma-separated integer list: {text!r}")


def _float_list(text: str) -> list:
    try:
        return [float(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise InputError(f"expected a comma-separated float list: {text!r}")


def _write_or_print(text: str, out) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="" if text.endswith("\n") else "\n")


# ---------------------------------------------------------------------------
# analyze


def _cmd_analyze(args) -> int:
    g = read_edge_list(args.graph)
    report = bounds_mod.bound_report(
        g,
        eigensolve=False if args.no_spectral else "auto",
        exact_cap=args.exact_cap, budget=args.budget, seed=args.seed)
    if args.json:
        print(bounds_mod.report_to_json(report))
    else:
        print(bounds_mod.report_to_text(report))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(bounds_mod.report_to_json(report) + "\n")
    return 0


# ---------------------------------------------------------------------------
# gnp-sweep


def _cmd_gnp_sweep(args) -> int:
    ns = _int_list(args.n)
    ps = _float_list(args.p)
    cells = tuple((n, p) for p in ps for n in ns)
    config = SweepConfig(
        cells=cells, trials=args.trials, seed_base=args.seed,
        budget=args.budget, exact_cap=args.exact_cap,
        allow_heuristic=args.heuristic)
    records, summaries, rho_by_p = run_gnp_sweep(config)
    _write_or_print(records_to_csv(records), args.out)
    for s in summaries:
        print(f"cell n={s.n} p={s.p}: mean(n-Z)={s.mean_n_minus_z:.4f} "
              f"std={s.std_n_minus_z:.4f} formula={s.formula_n_minus_z:.4f}")
    for p, rho in rho_by_p.items():
        print(f"spearman(n, mean(n-Z)) at p={p}: {rho:.4f}")
    return 0


# ---------------------------------------------------------------------------
# witness


def _cmd_witness(args) -> int:
    g = read_edge_list(args.graph)
    if args.action == "check":
        if not args.witness:
            raise InputError("check needs --witness 'k; s: ...; t: ...'")
        w = parse_witness(args.witness)
        ok, why = check_witness(g, w.s, w.t)
        if args.json:
            print(json.dumps({"valid": ok, "violation": why}))
        else:
            print("valid witness" if ok else f"invalid witness: {why}")
        return 0
    if args.action == "max":
        k, w = max_witness_order(g, disjoint_only=args.disjoint,
                                 budget=args.budget)
        if args.json:
            print(json.dumps({"k": k, "witness": format_witness(w),
                              "disjoint": args.disjoint}))
        else:
            print(f"max witness order: {k}")
            print(format_witness(w))
        return 0
    if args.action == "from-forcing":
        if args.set is None:
            raise InputError("from-forcing needs --set u,v,...")
        initial = mask_from(_int_list(args.set))
        if initial & ~g.full_mask:
            raise InputError("--set contains vertices outside the graph")
        ch = closure(g, initial)
        if ch.final_black != g.full_mask:
            raise InputError("the given set is not forcing; closure stalls "
                             f"at {ch.final_black.bit_count()} black vertices")
        w = witness_from_forcing(g, ch)
        if args.json:
            print(json.dumps({"k": w.order, "witness": format_witness(w)}))
        else:
            print(format_witness(w))
        return 0
    raise InputError(f"unknown witness action {args.action!r}")


# ---------------------------------------------------------------------------
# spectral


def _cmd_spectral_spectrum(args) -> int:
    g = read_edge_list(args.graph)
    spec = spectrum(g)
    print(f"n={g.n} top={spec.d:.8f} lam={spec.lam:.8f} "
          f"lambda_min={spec.lambda_min:.8f} tolerance={spec.tolerance:.2e}")
    if args.out:
        lines = ["index,eigenvalue"]
        lines += [f"{i},{v!r}" for i, v in enumerate(spec.eigenvalues)]
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    return 0


def _cmd_spectral_mixing(args) -> int:
    g = read_edge_list(args.graph)
    spec = spectrum(g)
    rng = SplitMix64(args.seed)
    worst_one = worst_two = math.inf
    for _ in range(args.pairs):
        u = sample_vertex_subset(rng, g.n)
        w = sample_vertex_subset(rng, g.n)
        d1, d2 = mixing_defect(g, spec, u, w)
        worst_one = min(worst_one, d1)
        worst_two = min(worst_two, d2)
    print(f"pairs={args.pairs} min_one_sided_slack={worst_one:.3e} "
          f"min_two_sided_slack={worst_two:.3e}")
    if worst_one < -MIXING_SLACK or worst_two < -MIXING_SLACK:
        raise SoundnessError("a mixing inequality came out negative")
    return 0


def _cmd_spectral_greedy(args) -> int:
    g = read_edge_list(args.graph)
    spec = spectrum(g)
    w, sizes = greedy_witness(g, spec)
    d = is_regular(g)
    guarantee = greedy_witness_guarantee(g.n, d, spec.lam)
    print(f"greedy witness order k={w.order}; pool trace {sizes}")
    print(f"guarantee with measured lam={spec.lam:.6f}: "
          f"{guarantee:.4f} (vacuous)" if guarantee == 0.0 else
          f"guarantee with measured lam={spec.lam:.6f}: k >= "
          f"{math.ceil(guarantee)}")
    print("certificate verified: True")
    if args.json:
        print(json.dumps({"k": w.order, "witness": format_witness(w),
                          "guarantee": guarantee}))
    return 0


def _cmd_spectral_prop1(args) -> int:
    gstar, forcing, rep = line_graph_forcing_construction(
        args.n, set(args.offsets or []))
    print(f"base circulant: n={rep.base_n} degree={rep.base_degree}")
    print(f"line graph: N={rep.n_vertices} D={rep.degree} "
          f"lambda_min={rep.lambda_min:.8f} (expected -2 when the base "
          f"has an even cycle)")
    print(f"explicit forcing set: size {rep.forcing_set_size} "
          f"(certifies N - Z >= {rep.certificate_n_minus_z}); verified: "
          f"{rep.verified}")
    print(f"spectral cap: N - Z <= {rep.hoffman_cap_n_minus_z + 2.0:.4f}; "
          f"guarantee value 4N/(D+2) - 2 = {rep.hoffman_cap_n_minus_z:.4f}")
    if rep.lambda_min < -2.0 - 1e-6:
        raise SoundnessError("line graph eigenvalue below -2")
    return 0


def _cmd_spectral_gm(args) -> int:
    g, labels = odd_inner_product_graph(args.m)
    n, m = g.n, args.m
    if n != 2 ** (m - 1) - 1:
        raise SoundnessError("vertex count disagrees with 2^(m-1) - 1")
    d = is_regular(g)
    if d != (n - 3) // 2:
        raise SoundnessError("graph is not (n-3)/2 regular")
    if any(x.bit_count() % 2 == 0 for x in labels.rows):
        raise SoundnessError("even-weight label slipped in")
    if (1 << m) - 1 in labels.rows:
        raise SoundnessError("all-ones label slipped in")
    spec = spectrum(g)
    expected_lam = 1 + 2 ** ((m - 3) // 2)
    print(f"n={n} degree={d} lam={spec.lam:.8f} expected={expected_lam}")
    if abs(spec.lam - expected_lam) > 1e-6:
        raise SoundnessError("second eigenvalue misses its closed form")
    out = {"m": m, "n": n, "degree": d, "lam": spec.lam,
           "witness_cap": m}
    if n <= args.exact_cap:
        result = zero_forcing_number_exact(g, budget=args.budget)
        print(f"exact Z = {result.z} (witness cap gives Z >= {n - m})")
        if result.z < n - m:
            raise SoundnessError("exact Z below the label-rank cap")
        hits = []

        def observer(s, t):
            from .witness import Witness
            if not witness_labels_independent(labels, Witness(s=s, t=t)):
                hits.append((s, t))

        kmax, _ = max_witness_order(g, observer=observer)
        print(f"max witness order = {kmax} (cap {m}); dependent-label "
              f"witnesses seen: {len(hits)}")
        if kmax > m or hits:
            raise SoundnessError("witness violated the GF(2) label cap")
        out["exact_z"] = result.z
        out["max_witness_order"] = kmax
    if args.json:
        print(json.dumps(out))
    return 0


# ---------------------------------------------------------------------------
# phi


def _cmd_phi(args) -> int:
    scan = superdiagonal_ratio_table(args.k)
    lines = ["a,b,max_pairs,ratio"]
    lines += [f"{a},{b},{v},{r!r}" for a, b, v, r in scan.rows]
    _write_or_print("\n".join(lines) + "\n", args.out)
    print(f"max ratio {scan.max_ratio:.7f} at a,b={scan.argmax} "
          f"(cap {1 - math.sqrt(2)/2:.7f}; max concentrates near "
          f"a=b={scan.balanced_point})")
    return 0


# ---------------------------------------------------------------------------
# generate


def _cmd_generate(args) -> int:
    kind = args.kind
    if kind == "gnp":
        if args.n is None or args.p is None:
            raise InputError("gnp needs --n and --p")
        g = gnp_sample(args.n, args.p, args.seed)
    elif kind == "regular":
        if args.n is None or args.d is None:
            raise InputError("regular needs --n and --d")
        g = random_regular_sample(args.n, args.d, args.seed)
    elif kind == "gm":
        if args.m is None:
            raise InputError("gm needs --m")
        g, _ = odd_inner_product_graph(args.m)
    elif kind in ("path", "cycle", "complete"):
        if args.n is None:
            raise InputError(f"{kind} needs --n")
        g = standard_graph(kind, n=args.n)
    elif kind == "complete-bipartite":
        if args.a is None or args.b is None:
            raise InputError("complete-bipartite needs --a and --b")
        g = standard_graph("complete_bipartite", a=args.a, b=args.b)
    elif kind == "petersen":
        g = standard_graph("petersen")
    elif kind == "circulant":
        if args.n is None or not args.offsets:
            raise InputError("circulant needs --n and --offsets")
        g = standard_graph("circulant", n=args.n,
                           offsets=set(_int_list(args.offsets)))
    else:
        raise InputError(f"unknown kind {kind!r}")
    write_edge_list(g, args.out)
    print(f"wrote {kind} graph: n={g.n} m={g.edge_count} -> {args.out}")
    return 0


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="zforce",
        description="Zero forcing numbers: exact values, certificates, "
                    "bounds, and seeded experiments.")
    sub = top.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="bound report for one graph file")
    pa.add_argument("graph")
    pa.add_argument("--json", action="store_true")
    pa.add_argument("--out", help="also write the JSON report here")
    pa.add_argument("--no-spectral", action="store_true")
    pa.add_argument("--exact-cap", type=int, default=22)
    pa.add_argument("--budget", type=int, default=10**9)
    pa.add_argument("--seed", type=int, default=0)
    pa.set_defaults(func=_cmd_analyze)

    pg = sub.add_parser("gnp-sweep", help="seeded sweep over (n, p) cells")
    pg.add_argument("--n", required=True, help="comma list, e.g. 12,14,16")
    pg.add_argument("--p", required=True, help="comma list, e.g. 0.5")
    pg.add_argument("--trials", type=int, default=50)
    pg.add_argument("--seed", type=int, default=1)
    pg.add_argument("--budget", type=int, default=10**9)
    pg.add_argument("--exact-cap", type=int, default=22)
    pg.add_argument("--heuristic", action="store_true",
                    help="allow heuristic solving beyond the exact cap")
    pg.add_argument("--out", help="CSV path (stdout when omitted)")
    pg.set_defaults(func=_cmd_gnp_sweep)

    pw = sub.add_parser("witness", help="witness certificates")
    pw.add_argument("graph")
    pw.add_argument("action", choices=["check", "max", "from-forcing"])
    pw.add_argument("--witness", help="'k; s: a1 .. ak; t: b1 .. bk'")
    pw.add_argument("--disjoint", action="store_true")
    pw.add_argument("--set", help="comma list of initially black vertices")
    pw.add_argument("--budget", type=int, default=None)
    pw.add_argument("--json", action="store_true")
    pw.set_defaults(func=_cmd_witness)

    ps = sub.add_parser("spectral", help="spectra and spectral constructions")
    ssub = ps.add_subparsers(dest="spectral_command", required=True)

    p1 = ssub.add_parser("spectrum")
    p1.add_argument("graph")
    p1.add_argument("--out", help="CSV path (index,eigenvalue)")
    p1.set_defaults(func=_cmd_spectral_spectrum)

    p2 = ssub.add_parser("mixing")
    p2.add_argument("graph")
    p2.add_argument("--pairs", type=int, default=1000)
    p2.add_argument("--seed", type=int, default=0)
    p2.set_defaults(func=_cmd_spectral_mixing)

    p3 = ssub.add_parser("greedy")
    p3.add_argument("graph")
    p3.add_argument("--json", action="store_true")
    p3.set_defaults(func=_cmd_spectral_greedy)

    p4 = ssub.add_parser("prop1", help="line graph of a circulant, with "
                                       "its explicit forcing certificate")
    p4.add_argument("n", type=int)
    p4.add_argument("offsets", type=int, nargs="*")
    p4.set_defaults(func=_cmd_spectral_prop1)

    p5 = ssub.add_parser("gm", help="odd-inner-product graph battery")
    p5.add_argument("m", type=int)
    p5.add_argument("--exact-cap", type=int, default=22)
    p5.add_argument("--budget", type=int, default=10**9)
    p5.add_argument("--json", action="store_true")
    p5.set_defaults(func=_cmd_spectral_gm)

    pp = sub.add_parser("phi", help="superdiagonal pair density table")
    pp.add_argument("k", type=int)
    pp.add_argument("--out", help="CSV path (stdout when omitted)")
    pp.set_defaults(func=_cmd_phi)

    pz = sub.add_parser("generate", help="write fixture graphs")
    pz.add_argument("kind", choices=["path", "cycle", "complete",
                                     "complete-bipartite", "petersen",
                                     "circulant", "gnp", "regular", "gm"])
    pz.add_argument("--out", required=True)
    pz.add_argument("--n", type=int)
    pz.add_argument("--a", type=int)
    pz.add_argument("--b", type=int)
    pz.add_argument("--d", type=int)
    pz.add_argument("--m", type=int)
    pz.add_argument("--p", type=float)
    pz.add_argument("--seed", type=int, default=0)
    pz.add_argument("--offsets", help="comma list for circulant")
    pz.set_defaults(func=_cmd_generate)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (SoundnessError, NumericError) as exc:
        print(f"soundness violation: {exc}", file=sys.stderr)
        return 2
    except (BudgetExceededError, ResourceError) as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
