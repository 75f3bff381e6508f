"""Command-line entry point: ``graphlimits <command> ...``.

Counting-derived quantities are printed as exact rationals (``p/q``),
everything else with 12 significant digits.  Check commands (validate-z,
exchangeable, psd-check, dissociated, definetti) exit 0 when the check
passes and 1 when it fails; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from . import characters, definetti, graphons, graphs, homomorphisms, io, mobius
from .errors import GraphLimitsError
from .graphs import LabeledGraph, UnlabeledGraph


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _exact(x: Fraction) -> str:
    return f"{format_fraction(x)} {io.format_real(x)}"


def _graph(text: str) -> LabeledGraph:
    try:
        return LabeledGraph.parse(text)
    except GraphLimitsError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _cmd_enumerate(args, out):
    for G in graphs.enumerate_labeled(args.n):
        print(G, file=out)


def _cmd_canon(args, out):
    print(graphs.canonical_form(args.graph), file=out)


def _cmd_classes(args, out):
    for U in graphs.isomorphism_classes(args.n):
        print(U, U.class_size, file=out)


def _cmd_union(args, out):
    U = graphs.disjoint_union(UnlabeledGraph.of(args.first), UnlabeledGraph.of(args.second))
    print(U, U.class_size, file=out)


def _cmd_hom(args, out):
    print(homomorphisms.hom_count(args.F, args.G), file=out)


def _cmd_inj(args, out):
    print(homomorphisms.inj_count(args.F, args.G), file=out)


def _cmd_density(args, out):
    rep = homomorphisms.densities(args.F, args.G)
    print("hom_count", rep.hom_count, file=out)
    print("inj_count", rep.inj_count, file=out)
    print("t_hom", _exact(rep.t_hom), file=out)
    print("t_inj", _exact(rep.t_inj) if rep.inj_defined else "undefined", file=out)
    print("gap_bound", _exact(rep.gap_bound), file=out)


def _cmd_gap(args, out):
    gap = homomorphisms.sampling_gap(args.m, args.G)
    print("sup", _exact(gap.sup), file=out)
    print("envelope", _exact(gap.envelope), file=out)
    print("loose_envelope", _exact(gap.loose_envelope), file=out)
    print("argmax", gap.argmax, file=out)


def _cmd_mobius_z(args, out):
    out.write(io.format_mobius(mobius.z_from_p(io.read_distribution(args.file))))


def _cmd_mobius_p(args, out):
    out.write(io.format_distribution(mobius.p_from_z(io.read_mobius(args.file))))


def _cmd_validate_z(args, out):
    res = mobius.is_valid_mobius(io.read_mobius(args.file), args.tol)
    if res.valid:
        print("valid", file=out)
        print("min_mass", io.format_real(res.mass), file=out)
        return 0
    print("invalid", file=out)
    print("witness", res.witness, io.format_real(res.mass), file=out)
    return 1


def _cmd_exchangeable(args, out):
    P = io.read_distribution(args.file)
    by_mass = mobius.mass_is_symmetric(P, args.tol)
    by_mobius = mobius.mobius_is_symmetric(mobius.z_from_p(P), args.tol)
    print("by_mass", str(by_mass).lower(), file=out)
    print("by_mobius", str(by_mobius).lower(), file=out)
    print("exchangeable", str(by_mass and by_mobius).lower(), file=out)
    return 0 if by_mass and by_mobius else 1


def _cmd_psd_check(args, out):
    P = io.read_distribution(args.file)
    phi = characters.SymmetricFunctional.from_distribution(P, args.tol)
    k = min(3, P.n // 2) if args.basis_nodes is None else args.basis_nodes
    basis = graphs.classes_up_to(k)
    M = characters.reflection_matrix(phi, basis)
    res = characters.is_psd(M, args.tol)
    print("basis", " ".join(str(U) for U in basis), file=out)
    print("matrix", file=out)
    for row in M:
        print("  " + " ".join(f"{io.format_real(v):>18}" for v in row), file=out)
    print("eigenvalues", " ".join(io.format_real(v) for v in res.eigenvalues), file=out)
    print("min_eigenvalue", io.format_real(res.min_eigenvalue), file=out)
    print("psd", str(res.psd).lower(), file=out)
    return 0 if res.psd else 1


def _cmd_dissociated(args, out):
    Z = mobius.z_from_p(io.read_distribution(args.file))
    res = characters.check_dissociated(Z, args.tol)
    print("dissociated", str(res.passed).lower(), file=out)
    print("violation", io.format_real(res.violation), file=out)
    if res.pair is not None:
        print("worst_pair", res.pair[0], res.pair[1], file=out)
    return 0 if res.passed else 1


def _cmd_gexp(args, out):
    if args.theta is not None:
        n_t, table = io.read_table(args.theta)
        if n_t != args.n:
            raise GraphLimitsError(f"theta file is for n={n_t}, not {args.n}")
        values = {}
        for code, v in enumerate(table):
            values.setdefault(graphs.canonical_form(LabeledGraph(n_t, code)), v)
        theta = lambda U: values[U.canon]  # noqa: E731
    else:
        theta = lambda U: args.edge_weight ** U.num_edges  # noqa: E731
    out.write(io.format_distribution(characters.gexp_mass(theta, args.n)))


def _cmd_graphon_eval(args, out):
    W = io.read_graphon(args.file)
    print(io.format_real(graphons.graphon_character(W, args.F)), file=out)


def _cmd_graphon_sample(args, out):
    print(graphons.sample_w_random(io.read_graphon(args.file), args.n, args.seed), file=out)


def _cmd_graphon_mc(args, out):
    W = io.read_graphon(args.file)
    est = graphons.mc_estimate_character(W, args.F, args.trials, args.seed)
    print("estimate", io.format_real(est.estimate), file=out)
    print("stderr", io.format_real(est.stderr), file=out)


def _cmd_definetti(args, out, err):
    rep = definetti.definetti_report(io.read_distribution(args.file), args.m, args.tol)
    for field in ("m", "n"):
        print(field, getattr(rep, field), file=out)
    for field in ("tv_half_sum", "tv_paper", "r_bound", "loose_bound"):
        print(field, io.format_real(getattr(rep, field)), file=out)
    print("bound_holds", str(rep.bound_holds).lower(), file=out)
    if not rep.bound_holds:
        print("error: tv_paper <= 2 r_bound <= loose_bound violated; this indicates a bug "
              "in graphlimits, not a counterexample to the bound", file=err)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphlimits", description=__doc__.splitlines()[0])
    parser.add_argument("-o", "--output", help="write results to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help, **kw):
        p = sub.add_parser(name, help=help, **kw)
        p.set_defaults(func=func)
        return p

    def tol(p, default):
        p.add_argument("--tol", type=float, default=default)

    p = add("enumerate", _cmd_enumerate, "list all labelled graphs on n nodes")
    p.add_argument("n", type=int)
    p = add("canon", _cmd_canon, "canonical form of a graph")
    p.add_argument("graph", type=_graph)
    p = add("classes", _cmd_classes, "isomorphism classes on n nodes with class sizes")
    p.add_argument("n", type=int)
    p = add("union", _cmd_union, "node-disjoint union of two graphs, canonicalised")
    p.add_argument("first", type=_graph)
    p.add_argument("second", type=_graph)
    for name, func, help in [
        ("hom", _cmd_hom, "number of homomorphisms F -> G"),
        ("inj", _cmd_inj, "number of injective homomorphisms F -> G"),
        ("density", _cmd_density, "homomorphism densities of F in G"),
    ]:
        p = add(name, func, help)
        p.add_argument("F", type=_graph)
        p.add_argument("G", type=_graph)
    p = add("gap", _cmd_gap, "sup_F |p_hom - p_inj| over graphs on m nodes sampled from G")
    p.add_argument("G", type=_graph)
    p.add_argument("--m", type=int, required=True)
    p = add("mobius-z", _cmd_mobius_z, "Möbius parameters of a distribution file")
    p.add_argument("file")
    p = add("mobius-p", _cmd_mobius_p, "distribution from a Möbius parameter file")
    p.add_argument("file")
    p = add("validate-z", _cmd_validate_z, "check that a Möbius parameter file inverts to a distribution")
    p.add_argument("file")
    tol(p, mobius.VALID_TOL)
    p = add("exchangeable", _cmd_exchangeable, "check relabelling invariance of a distribution")
    p.add_argument("file")
    tol(p, mobius.VALID_TOL)
    p = add("psd-check", _cmd_psd_check, "reflection positivity of a distribution's Möbius parameters")
    p.add_argument("file")
    p.add_argument("--basis-nodes", type=int, default=None,
                   help="use all classes on at most this many nodes (default min(3, n // 2))")
    tol(p, characters.PSD_TOL)
    p = add("dissociated", _cmd_dissociated, "check factorisation over node-disjoint subgraphs")
    p.add_argument("file")
    tol(p, characters.CHARACTER_TOL)
    p = add("gexp", _cmd_gexp, "generalised exponential family on n nodes (counting base measure)")
    p.add_argument("n", type=int)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--edge-weight", type=float, help="theta([G]) = edge_weight ** e(G)")
    g.add_argument("--theta", help="table file of theta values on graphs with n nodes")
    p = add("graphon-eval", _cmd_graphon_eval, "exact homomorphism integral of F in a step graphon")
    p.add_argument("file")
    p.add_argument("F", type=_graph)
    p = add("graphon-sample", _cmd_graphon_sample, "sample a W-random graph")
    p.add_argument("file")
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p = add("graphon-mc", _cmd_graphon_mc, "Monte Carlo estimate of a homomorphism integral")
    p.add_argument("file")
    p.add_argument("F", type=_graph)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p = add("definetti", _cmd_definetti, "finite de Finetti distances and bounds")
    p.add_argument("file")
    p.add_argument("--m", type=int, required=True)
    tol(p, mobius.VALID_TOL)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    sink = open(args.output, "w") if args.output else out
    try:
        if args.func is _cmd_definetti:
            status = _cmd_definetti(args, sink, err)
        else:
            status = args.func(args, sink)
    except (GraphLimitsError, OSError) as exc:
        print(f"graphlimits {args.command}: {exc}", file=err)
        return 1
    finally:
        if sink is not out:
            sink.close()
    return status or 0


def main() -> None:
    sys.exit(run())
