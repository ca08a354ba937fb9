"""Command-line front end; every command prints JSON.

Exit codes: 0 success, 1 a check failed, 2 usage, input or precondition error.
"""

import argparse
import json
import logging
import sys

from . import io
from .decider import decide
from .elliptic import (
    SurfaceSpec,
    build_delta_model,
    build_E10_basis,
    build_full_H2bar,
    build_sigma_triple,
    e10_invariants,
    surface_invariants,
    torsion_of_complement,
    verify_thm2_construction,
)
from .enumeration import enumerate_vectors_of_square
from .factorization import factor_into_reflections
from .lattice import (
    LatticeError,
    acts_trivially_on_discriminant,
    discriminant_group,
    positive_orientation_character,
    radical,
    reflect,
    signature,
    spinor_norm,
)
from .reflection_groups import check_ebeling, check_semidefinite_lemma, orbit_closure

log = logging.getLogger("surfacelattice")


class UsageError(Exception):
    pass


def _read_json(path):
    try:
        if path in (None, "-"):
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path or 'stdin'} is not valid JSON: {exc}") from exc


def _lattice(args):
    return io.lattice_from_json(_read_json(args.lattice))


def _vector(text):
    try:
        return io.vector_from_json(json.loads(text))
    except json.JSONDecodeError as exc:
        raise UsageError(f"vector {text!r} is not a JSON array") from exc


def _spec(args):
    if getattr(args, "spec", None) is None:
        raise UsageError("a surface spec file is required")
    return io.spec_from_json(_read_json(args.spec))


# each handler returns (payload, ok)


def cmd_lattice(args):
    lat = _lattice(args)
    if args.what == "info":
        out = {"rank": lat.rank, "label": lat.label, "integral": lat.is_integral, "even": lat.is_even}
        if lat.is_integral:
            sig = signature(lat)
            out.update(determinant=lat.determinant, signature=list(sig), radical_rank=sig.null)
            if not sig.null:
                out["discriminant_group"] = list(discriminant_group(lat).invariant_factors)
        return out, True
    if args.what == "radical":
        return {"radical": [list(v) for v in radical(lat)]}, True
    if args.what == "signature":
        return signature(lat)._asdict(), True
    grp = discriminant_group(lat)
    return {"invariant_factors": list(grp.invariant_factors), "order": grp.order, "group": str(grp)}, True


def cmd_roots(args):
    lat = _lattice(args)
    vecs = enumerate_vectors_of_square(lat, args.square, args.bound)
    return {"square": args.square, "bound": args.bound, "count": len(vecs), "vectors": [list(v) for v in vecs]}, True


def cmd_orbit(args):
    delta = io.delta_from_json(_read_json(args.delta))
    orbit = sorted(orbit_closure(delta, [_vector(s) for s in args.seed], args.bound))
    return {"count": len(orbit), "vectors": [list(v) for v in orbit]}, True


def cmd_reflect(args):
    lat = _lattice(args)
    return io.isometry_to_json(reflect(lat, _vector(args.vector))), True


def _isometry(args, lat):
    g = io.isometry_from_json(_read_json(args.isometry))
    if g.rank != lat.rank:
        raise LatticeError(f"isometry of rank {g.rank} on a lattice of rank {lat.rank}")
    return g


def cmd_spinor(args):
    lat = _lattice(args)
    g = _isometry(args, lat)
    out = {"spinor_norm": spinor_norm(lat, g), "trivial_on_discriminant": acts_trivially_on_discriminant(lat, g)}
    if signature(lat).positive:
        out["orientation_character"] = positive_orientation_character(lat, g)
    return out, True


def cmd_factor(args):
    lat = _lattice(args)
    g = _isometry(args, lat)
    word = factor_into_reflections(lat, g)
    exact = word.matrix(lat.gram) == g.matrix
    return {"length": len(word), "factors": [list(v) for v in word.factors], "round_trip": exact}, exact


def cmd_ebeling(args):
    delta = io.delta_from_json(_read_json(args.delta))
    rep = check_ebeling(delta.lattice, delta)
    return rep.to_dict(), rep.conclusion_applicable


def cmd_semidefinite(args):
    delta = io.delta_from_json(_read_json(args.delta))
    summand = [io.vector_from_json(v) for v in _read_json(args.summand)]
    rep = check_semidefinite_lemma(delta.lattice, delta, summand, samples=args.samples)
    return rep.to_dict(), rep.passed


def cmd_surface(args):
    what = args.what
    if what == "e10":
        pairings = {str(i + 1): v for i, v in enumerate(args.sigma_pairings)} if args.sigma_pairings else None
        lat, vecs, rep = build_E10_basis(pairings)
        return {
            "lattice": io.lattice_to_json(lat),
            "vectors": [list(v) for v in vecs],
            "invariants": io.to_jsonable(e10_invariants(lat, vecs)),
            "report": rep.to_dict(),
        }, not rep.nonzero()
    if what == "irregular":
        rep = verify_thm2_construction(args.variant)
        return rep.to_dict(), True
    if what == "sigma-triple":
        m = args.m
        if m is None:
            spec = _spec(args)
            if not spec.multiplicities:
                raise UsageError("sigma-triple needs --m or a spec with multiplicities")
            m = spec.multiplicities[0]
        t = build_sigma_triple(m)
        return {
            "lattice": io.lattice_to_json(t.lattice),
            "m": m,
            "sigma1": list(t.sigma1),
            "sigma2": list(t.sigma2),
            "sigma3": list(t.sigma3),
            "fibre": list(t.fibre),
            "fibre_part": list(t.fibre_part),
        }, True
    spec = _spec(args)
    if what == "invariants":
        return surface_invariants(spec).to_dict(), True
    if what == "lattice":
        lat, k, p = build_full_H2bar(spec)
        return {"lattice": io.lattice_to_json(lat), "k": list(k), "p": list(p)}, True
    if what == "delta":
        return build_delta_model(spec).to_dict(), True
    m, grp = torsion_of_complement(spec.multiplicities)
    return {"m": m, "invariant_factors": list(grp.invariant_factors), "group": str(grp)}, True


def cmd_decide(args):
    spec = _spec(args)
    g = io.isometry_from_json(_read_json(args.isometry))
    return decide(spec, g, args.witness_parity).to_dict(), True


def cmd_verify(args):
    from .verify import format_table, run

    checks = run(args.section)
    print(format_table(checks), file=sys.stderr)
    ok = all(c.passed for c in checks)
    return {"passed": ok, "checks": [c.to_dict() for c in checks]}, ok


def build_parser():
    p = argparse.ArgumentParser(prog="surfacelattice", description=__doc__.splitlines()[0])
    p.add_argument("--output", "-o", help="write JSON here instead of stdout")
    p.add_argument("--verbose", "-v", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def with_lattice(sp):
        sp.add_argument("--lattice", "-l", default="-", help="lattice JSON file (default: stdin)")
        return sp

    sp = with_lattice(sub.add_parser("lattice", help="invariants of a lattice"))
    sp.add_argument("what", choices=["info", "radical", "signature", "discriminant"])
    sp.set_defaults(func=cmd_lattice)

    sp = sub.add_parser("roots", help="vectors of a given square")
    sp.add_argument("action", choices=["enumerate"])
    with_lattice(sp)
    sp.add_argument("--square", type=int, required=True)
    sp.add_argument("--bound", type=int)
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("orbit", help="orbit of seeds under reflections in a delta set")
    sp.add_argument("--delta", required=True)
    sp.add_argument("--seed", action="append", required=True, help="JSON integer array; repeatable")
    sp.add_argument("--bound", type=int)
    sp.set_defaults(func=cmd_orbit)

    sp = with_lattice(sub.add_parser("reflect", help="reflection in a vector"))
    sp.add_argument("--vector", required=True)
    sp.set_defaults(func=cmd_reflect)

    for name, func, helptext in (
        ("spinor-norm", cmd_spinor, "spinor norm and orientation character"),
        ("factor", cmd_factor, "write an isometry as a product of reflections"),
    ):
        sp = with_lattice(sub.add_parser(name, help=helptext))
        sp.add_argument("--isometry", required=True)
        sp.set_defaults(func=func)

    sp = sub.add_parser("ebeling", help="hypotheses of Ebeling's generation theorem")
    sp.add_argument("action", choices=["check"])
    sp.add_argument("--delta", required=True)
    sp.set_defaults(func=cmd_ebeling)

    sp = sub.add_parser("semidefinite", help="hypotheses of the radical-plus-unimodular lemma")
    sp.add_argument("action", choices=["check"])
    sp.add_argument("--delta", required=True)
    sp.add_argument("--summand", required=True, help="JSON list of basis vectors of E")
    sp.add_argument("--samples", type=int, default=5)
    sp.set_defaults(func=cmd_semidefinite)

    sp = sub.add_parser("surface", help="builders for elliptic surfaces")
    sp.add_argument("what", choices=["invariants", "lattice", "delta", "torsion", "sigma-triple", "e10", "irregular"])
    sp.add_argument("spec", nargs="?", help="surface spec JSON file")
    sp.add_argument("--m", type=int, help="multiplicity for sigma-triple")
    sp.add_argument("--sigma-pairings", type=int, nargs=8, metavar="P", help="values of <beta'_i, sigma> for e10")
    sp.add_argument("--variant", choices=["as_printed", "radical"], default="as_printed", help="beta_8 adjustment for the irregular generating set")
    sp.set_defaults(func=cmd_surface)

    sp = sub.add_parser("decide", help="is an isometry of H2bar realized by a diffeomorphism")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--isometry", required=True)
    sp.add_argument("--witness-parity", type=int, choices=[1, -1])
    sp.set_defaults(func=cmd_decide)

    sp = sub.add_parser("verify-paper", help="run the full battery of checks")
    sp.add_argument("--section", type=int, choices=[1, 2, 3, 4, 5])
    sp.set_defaults(func=cmd_verify)
    # the global options are also accepted after the subcommand
    for sp in sub.choices.values():
        sp.add_argument("--output", "-o", default=argparse.SUPPRESS, help="write JSON here instead of stdout")
        sp.add_argument("--verbose", "-v", action="store_true", default=argparse.SUPPRESS, help="log progress to stderr")
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits on usage errors and --help
        return exc.code
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr, format="%(message)s")
    try:
        payload, ok = args.func(args)
    except (UsageError, LatticeError, KeyError, TypeError, ValueError) as exc:
        log.error("error: %s", exc)
        return 2
    text = json.dumps(io.to_jsonable(payload), indent=2)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            log.error("error: cannot write %s: %s", args.output, exc)
            return 2
    else:
        print(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
