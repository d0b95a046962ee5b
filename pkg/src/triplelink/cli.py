"""Command line interface: ``triplelink {check,mu,chords,milnor,ld,gen,harness}``.

Exit codes: 0 success (or congruence holds), 1 congruence failure,
2 unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import diagramfile
from .chord import BasePoint, build_chord_diagram, pairing_combinatorial, pairing_geometric, realize_geometric
from .doodle import Doodle, mu_all_permutations, permutation_sign
from .instances import GenParams, disjoint_circles, forbidden_move_fixture, random_doodle, random_link, venn_doodle
from .linkdiagram import LinkDiagram, construct_L_of_D, delta, linking_matrix, project_to_doodle
from .magnus import mu_bar_oracle
from .theorem import check_congruence, lk_from_magnus, rhs_residues_over_gaps

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(path, want_link: bool = False, want_doodle: bool = False):
    try:
        obj = diagramfile.load(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    except diagramfile.DiagramFileError as exc:
        raise InputError(f"{path}: {exc}") from exc
    if want_link and not isinstance(obj, LinkDiagram):
        raise InputError(f"{path}: a link diagram (with 'crossings') is required")
    if want_doodle and isinstance(obj, LinkDiagram):
        raise InputError(f"{path}: a doodle file (without 'crossings') is required")
    return obj


def _emit(args, text: str, machine: dict) -> None:
    if args.format == "machine":
        print(json.dumps(machine, sort_keys=True))
    else:
        print(text)


def format_report(rep) -> str:
    lk12, lk23, lk31 = rep.lk
    lines = [
        f"lk(1,2) = {lk12}   lk(2,3) = {lk23}   lk(3,1) = {lk31}",
        f"delta = {rep.delta}",
        f"mu(C1,C2,C3) = {rep.mu}",
        f"<O_3x2, G_L1> = {rep.pairings[1]}   <O_1x3, G_L2> = {rep.pairings[2]}   <O_2x1, G_L3> = {rep.pairings[3]}",
        f"rhs = -mu - sum of pairings = {rep.rhs}",
        f"mu-bar(123) from Magnus expansion = {rep.lhs}",
        f"lk from longitudes = {rep.lk_from_magnus}",
        f"verdict: {'PASS' if rep.verdict else 'FAIL'}",
    ]
    return "\n".join(lines)


def cmd_check(args) -> int:
    L = _load(args.path, want_link=True)
    gaps = {k: g for k, g in ((1, args.gap_k1), (2, args.gap_k2), (3, args.gap_k3)) if g is not None}
    rep = check_congruence(L, gaps, metadata={"file": str(args.path), "seed": args.seed})
    _emit(args, format_report(rep), rep.as_dict())
    return EXIT_OK if rep.verdict else EXIT_FAIL


def cmd_mu(args) -> int:
    obj = _load(args.path)
    d = project_to_doodle(obj) if isinstance(obj, LinkDiagram) else obj
    values = mu_all_permutations(d)
    text = "\n".join(
        f"mu(C{s[0]},C{s[1]},C{s[2]}) = {v:+d}   sgn = {permutation_sign(s):+d}" for s, v in values.items()
    )
    _emit(args, text, {"".join(map(str, s)): v for s, v in values.items()})
    return EXIT_OK


def export_chords_csv(g, path) -> None:
    """Write the realized chord diagram as delimited coordinates for plotting."""
    realized = realize_geometric(g)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["chord", "set", "direction", "vertex", "x", "y", "x_exact", "y_exact"])
        for n, rc in enumerate(realized):
            direction = "to_base" if rc.chord.toward_base else "to_crossing"
            for m, p in enumerate(rc.path):
                w.writerow([n, rc.chord.set_tag, direction, m, float(p.x), float(p.y), str(p.x), str(p.y)])


def cmd_chords(args) -> int:
    L = _load(args.path, want_link=True)
    g = build_chord_diagram(L, args.k, args.gap)
    value = pairing_combinatorial(g)
    geo = pairing_geometric(g)
    skeleton = []
    for item in g.skeleton:
        if isinstance(item, BasePoint):
            skeleton.append(str(item))
        else:
            skeleton.append(f"x{item.label}{'+' if item.gamma > 0 else '-'}(over L{item.under_component})")
    ki = [str(g.skeleton[c.crossing_end].label) for c in g.T_ki]
    kj = [str(g.skeleton[c.crossing_end].label) for c in g.T_kj]
    text = "\n".join(
        [
            f"G_L{g.k}: skeleton " + " ".join(skeleton),
            f"T_{g.k},{g.i} (to b_nc{g.i}): {' '.join(ki) or '(empty)'}",
            f"T_{g.k},{g.j} (to b_c{g.j}): {' '.join(kj) or '(empty)'}",
            f"<O_{g.j}x{g.i}, G_L{g.k}> = {value}   (geometric realization: {geo})",
        ]
    )
    if args.export:
        export_chords_csv(g, args.export)
        text += f"\ncoordinates written to {args.export}"
    _emit(
        args,
        text,
        {"k": g.k, "skeleton": skeleton, "T_ki": ki, "T_kj": kj, "pairing": value, "pairing_geometric": geo},
    )
    return EXIT_OK


def cmd_milnor(args) -> int:
    L = _load(args.path, want_link=True)
    lk = linking_matrix(L)
    mag = lk_from_magnus(L)
    res = mu_bar_oracle(L)
    text = "\n".join(
        [
            f"lk from crossing half-sums:  (1,2) {lk[0]}  (2,3) {lk[1]}  (3,1) {lk[2]}",
            f"lk from Magnus coefficients: (1,2) {mag[0]}  (2,3) {mag[1]}  (3,1) {mag[2]}",
            f"delta = {res.modulus}",
            f"mu-bar(123) = {res}",
        ]
    )
    _emit(args, text, {"lk": lk, "lk_magnus": mag, "delta": res.modulus, "mu_bar": res.value})
    return EXIT_OK


def cmd_ld(args) -> int:
    d = _load(args.path, want_doodle=True)
    L = construct_L_of_D(d)
    diagramfile.dump(L, args.out)
    _emit(args, f"wrote L(D) with {len(L.crossings)} crossings to {args.out}", {"out": str(args.out)})
    return EXIT_OK


GEN_KINDS = ("doodle", "link", "venn", "borromean", "unlink", "forbidden-before", "forbidden-after")


def generate(kind: str, seed: int):
    if kind == "doodle":
        return random_doodle(GenParams(seed=seed))
    if kind == "link":
        return random_link(GenParams(seed=seed))
    if kind == "venn":
        return venn_doodle()
    if kind == "borromean":
        return construct_L_of_D(venn_doodle())
    if kind == "unlink":
        return construct_L_of_D(disjoint_circles())
    if kind == "forbidden-before":
        return forbidden_move_fixture()[0]
    if kind == "forbidden-after":
        return forbidden_move_fixture()[1]
    raise ValueError(kind)


def cmd_gen(args) -> int:
    obj = generate(args.kind, args.seed)
    if args.out:
        diagramfile.dump(obj, args.out)
    else:
        sys.stdout.write(diagramfile.dumps(obj))
    return EXIT_OK


def harness_case(kind: str, seed: int) -> dict:
    L = generate(kind, seed)
    rep = check_congruence(L, metadata={"seed": seed, "kind": kind})
    residues = rhs_residues_over_gaps(L)
    return {
        "seed": seed,
        "report": rep,
        "gap_stable": len(residues) == 1,
        "lk_consistent": rep.lk_from_magnus == rep.lk,
    }


def run_harness(count: int, seed: int, kind: str = "link", jobs: int = 1) -> list[dict]:
    seeds = [seed + n for n in range(count)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(harness_case, [kind] * count, seeds))
    return [harness_case(kind, s) for s in seeds]


def cmd_harness(args) -> int:
    start = time.perf_counter()
    results = run_harness(args.count, args.seed, args.kind, args.jobs)
    elapsed = time.perf_counter() - start
    passed = [r for r in results if r["report"].verdict]
    failed = [r for r in results if not r["report"].verdict]
    by_delta: dict[str, int] = {}
    for r in results:
        key = "0" if r["report"].delta == 0 else ("1" if r["report"].delta == 1 else ">1")
        by_delta[key] = by_delta.get(key, 0) + 1
    unstable = [r["seed"] for r in results if not r["gap_stable"]]
    lk_bad = [r["seed"] for r in results if not r["lk_consistent"]]
    ok = not failed and not unstable and not lk_bad
    lines = [
        f"diagrams: {len(results)}   pass: {len(passed)}   fail: {len(failed)}   ({elapsed:.1f} s)",
        "delta distribution: " + ", ".join(f"{k}: {v}" for k, v in sorted(by_delta.items())),
        f"rhs residue stable over base gaps: {len(results) - len(unstable)}/{len(results)}",
        f"lk half-sums match Magnus degree 1: {len(results) - len(lk_bad)}/{len(results)}",
    ]
    for r in failed:
        lines.append(f"--- failure, seed {r['seed']}")
        lines.append(format_report(r["report"]))
    machine = {
        "count": len(results),
        "pass": len(passed),
        "fail": len(failed),
        "seconds": round(elapsed, 3),
        "delta_distribution": by_delta,
        "gap_unstable_seeds": unstable,
        "lk_mismatch_seeds": lk_bad,
        "failures": [r["report"].as_dict() for r in failed],
    }
    _emit(args, "\n".join(lines), machine)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="triplelink", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="verify the triple-linking congruence for a link file")
    p.add_argument("path")
    for k in (1, 2, 3):
        p.add_argument(f"--gap-k{k}", type=int, default=None, help=f"base-point gap index on component {k}")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("mu", parents=[common], help="mu-invariant for all six orderings")
    p.add_argument("path")
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("chords", parents=[common], help="list the chord diagram G_{L_k} and its pairing")
    p.add_argument("path")
    p.add_argument("--k", type=int, choices=(1, 2, 3), default=1)
    p.add_argument("--gap", type=int, default=None)
    p.add_argument("--export", help="CSV file for the realized chord coordinates")
    p.set_defaults(func=cmd_chords)

    p = sub.add_parser("milnor", parents=[common], help="linking numbers, delta and mu-bar(123)")
    p.add_argument("path")
    p.set_defaults(func=cmd_milnor)

    p = sub.add_parser("ld", parents=[common], help="write the link L(D) of a doodle file")
    p.add_argument("path")
    p.add_argument("out")
    p.set_defaults(func=cmd_ld)

    p = sub.add_parser("gen", parents=[common], help="generate a fixture or random instance")
    p.add_argument("kind", choices=GEN_KINDS)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("harness", parents=[common], help="run the congruence check over a seeded corpus")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--kind", choices=("link", "borromean", "unlink"), default="link")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_harness)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
