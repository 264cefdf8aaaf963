"""Command-line front end.

Subcommands:

* ``analyze`` — invariants of one group/subgroup pair given as JSON specs.
* ``corpus`` — run the built-in verification corpus and report agreement.
* ``findim-demo`` — radical/separability report for a structure-constant
  algebra extension, from JSON specs or a named built-in fixture.

Exit codes: 0 success, 1 parse/validation error, 2 dimension cap exceeded,
3 cross-criterion disagreement.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import findim
from .analyze import analyze_pair, report_tsv_header, report_tsv_row
from .chartable import character_table_mod_p, common_prime
from .corpus import corpus_pairs
from .errors import CapExceeded, SepdepthError
from .groupalg import DEFAULT_LINEAR_CAP
from .permgroup import DEFAULT_GROUP_CAP, FiniteGroup, Permutation, Subgroup

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_CAP = 2
EXIT_DISAGREE = 3


class SpecError(Exception):
    """Bad input spec (maps to exit code 1)."""


# ---------------------------------------------------------------------------
# spec parsing


def _load_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: line {exc.lineno} column {exc.colno}: "
                        f"{exc.msg}") from exc
    except OSError as exc:
        raise SpecError(f"{path}: {exc.strerror}") from exc


def _perm_from_images(images, degree):
    if (not isinstance(images, list) or len(images) != degree
            or sorted(images) != list(range(degree))):
        raise SpecError(f"not a permutation of 0..{degree - 1}: {images}")
    return Permutation(tuple(images))


def group_from_spec(spec, cap):
    try:
        degree = int(spec["degree"])
        gen_lists = spec["generators"]
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecError(f"group spec needs 'degree' and 'generators': {exc}")
    if degree < 1 or not gen_lists:
        raise SpecError("degree must be >= 1 and generators non-empty")
    gens = [_perm_from_images(g, degree) for g in gen_lists]
    return FiniteGroup(gens, name=spec.get("name", "G"), cap=cap)


def subgroup_from_spec(G, spec):
    if "generators" in spec:
        gens = [_perm_from_images(g, G.degree) for g in spec["generators"]]
    elif "generator_indices" in spec:
        try:
            gens = [G.elements[int(i)] for i in spec["generator_indices"]]
        except (IndexError, ValueError) as exc:
            raise SpecError(f"bad generator index: {exc}")
    else:
        raise SpecError(
            "subgroup spec needs 'generators' or 'generator_indices'")
    return Subgroup(G, gens, name=spec.get("name", "H"))


def _frac(x):
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise SpecError(f"bad rational {x!r}: {exc}")


def algebra_from_spec(spec):
    """Structure-constant algebra from JSON.

    Either explicit structure constants ('structure' + 'unit') or the
    matrix shorthand ('matrix_size' + 'basis' of matrices with rational
    string entries).
    """
    if "matrix_size" in spec:
        m = int(spec["matrix_size"])
        mats = []
        for mat in spec["basis"]:
            if len(mat) != m or any(len(r) != m for r in mat):
                raise SpecError(f"matrix is not {m}x{m}")
            mats.append({(i, j): _frac(mat[i][j])
                         for i in range(m) for j in range(m)
                         if _frac(mat[i][j])})
        try:
            return findim._matrix_span_algebra(
                m, mats, name=spec.get("name", ""),
                labels=spec.get("labels"))
        except AssertionError as exc:
            raise SpecError(f"bad matrix basis: {exc}")
    try:
        mult = [[[_frac(c) for c in vec] for vec in row]
                for row in spec["structure"]]
        unit = [_frac(c) for c in spec["unit"]]
    except (KeyError, TypeError) as exc:
        raise SpecError(f"algebra spec needs 'structure' and 'unit': {exc}")
    n = len(mult)
    if any(len(row) != n for row in mult) or len(unit) != n:
        raise SpecError("structure constants must form an n x n x n cube")
    A = findim.StructureConstantAlgebra(
        dimension=n, mult=mult, unit=unit,
        labels=spec.get("labels", []), name=spec.get("name", ""))
    try:
        A.check_associative_and_unital()
    except AssertionError as exc:
        raise SpecError(f"structure constants not associative/unital "
                        f"at basis triple {exc}")
    return A


def subalgebra_from_spec(A, spec):
    if "matrices" in spec:
        m = getattr(A, "embedding_size", None)
        if m is None:
            raise SpecError("'matrices' shorthand needs a matrix ambient")
        vectors = []
        from .linalg import solve_affine
        sys_mat = [[A.flat_basis[b][k] for b in range(A.dimension)]
                   for k in range(m * m)]
        for mat in spec["matrices"]:
            flat = [_frac(mat[i][j]) for i in range(m) for j in range(m)]
            sol, _ = solve_affine(sys_mat, flat)
            if sol is None:
                raise SpecError("subalgebra matrix outside the ambient span")
            vectors.append(sol)
    elif "vectors" in spec:
        vectors = [[_frac(c) for c in v] for v in spec["vectors"]]
        if any(len(v) != A.dimension for v in vectors):
            raise SpecError(f"vectors must have length {A.dimension}")
    else:
        raise SpecError("subalgebra spec needs 'vectors' or 'matrices'")
    try:
        return findim.AlgebraInclusion(A, vectors)
    except (ValueError, SepdepthError) as exc:
        raise SpecError(f"invalid subalgebra: {exc}")


# ---------------------------------------------------------------------------
# built-in findim fixtures


def _fixture(name):
    if name.startswith("triangular"):
        n = int(name[len("triangular"):] or 3)
        A = findim.upper_triangular_algebra(n)
        return A, findim.strict_upper_subalgebra(A, n)
    if name.startswith("jordan"):
        n = int(name[len("jordan"):] or 3)
        A = findim.upper_triangular_algebra(n)
        return A, findim.jordan_subalgebra(A, n)
    if name == "structural":
        return findim.structural_matrix_example()
    if name.startswith("monoid"):
        n = int(name[len("monoid"):] or 1)
        M, e = findim.monoid_algebra(n)
        return M, findim.monoid_nilpotent_part_subalgebra(M, e)
    raise SpecError(f"unknown fixture {name!r}; try triangular3, jordan3, "
                    "structural, monoid2")


# ---------------------------------------------------------------------------
# subcommands


def _emit_json(obj):
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def cmd_analyze(args):
    G = group_from_spec(_load_json(args.group), args.cap_group)
    H = subgroup_from_spec(G, _load_json(args.subgroup))
    try:
        rep = analyze_pair(G, H, seed=args.seed, cap_linear=args.cap_linear,
                           matrix_only=args.matrix_only)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    if args.format == "tsv":
        print(report_tsv_header())
        print(report_tsv_row(rep))
    else:
        _emit_json(rep.to_json_dict())
    return EXIT_DISAGREE if rep.disagreements else EXIT_OK


def cmd_corpus(args):
    reports = []
    tables = {}
    for name, G, H in corpus_pairs(args.corpus_filter):
        if G.name not in tables:
            prime = common_prime(G, G)
            tables[G.name] = character_table_mod_p(G, prime=prime,
                                                   seed=args.seed)
        rep = analyze_pair(G, H, seed=args.seed, cap_linear=args.cap_linear,
                           matrix_only=args.matrix_only,
                           table_g=tables[G.name])
        reports.append(rep)
    agree = sum(v == "AGREE" for r in reports
                for v in r.agreements.values())
    disagree = sum(v == "DISAGREE" for r in reports
                   for v in r.agreements.values())
    if args.format == "tsv":
        print(report_tsv_header())
        for rep in reports:
            print(report_tsv_row(rep))
        print(f"# pairs={len(reports)} agree={agree} disagree={disagree}")
    else:
        _emit_json({
            "reports": [r.to_json_dict() for r in reports],
            "summary": {"pairs": len(reports),
                        "agree": agree, "disagree": disagree},
        })
    return EXIT_DISAGREE if disagree else EXIT_OK


def cmd_findim_demo(args):
    if args.fixture:
        A, inc = _fixture(args.fixture)
    else:
        if not args.algebra or not args.subalgebra:
            raise SpecError("need --fixture or ALGEBRA and SUBALGEBRA files")
        A = algebra_from_spec(_load_json(args.algebra))
        inc = subalgebra_from_spec(A, _load_json(args.subalgebra))
    rad = findim.radical(A)
    separable, witness = findim.is_separable_extension(A, inc)
    rad_verdict = findim.prop_rad_check(A, inc)
    report = {
        "algebra": A.name or "A",
        "dimension": A.dimension,
        "sub_dimension": inc.sub_dimension,
        "radical_dim": len(rad),
        "separable": separable,
        "radical_criterion": rad_verdict,
        "witness": ([str(c) for c in witness]
                    if witness is not None else None),
    }
    _emit_json(report)
    if rad_verdict not in ("not-applicable",):
        if (rad_verdict == "separable") != separable:
            return EXIT_DISAGREE
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def _env_int(name, default):
    val = os.environ.get(name)
    if val is None:
        return default
    try:
        return int(val)
    except ValueError:
        raise SpecError(f"environment variable {name} must be an integer, "
                        f"got {val!r}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sepdepth",
        description="Separability, depth and H-depth invariants of finite "
                    "group-algebra and structure-constant extensions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0,
                       help="seed for the character-table splitting")
        p.add_argument("--cap-group", type=int, default=None,
                       help="max group order (env SEPDEPTH_CAP_GROUP)")
        p.add_argument("--cap-linear", type=int, default=None,
                       help="max linear-algebra dimension "
                            "(env SEPDEPTH_CAP_LINEAR)")
        p.add_argument("--matrix-only", action="store_true",
                       help="skip the tensor-square linear algebra")
        p.add_argument("--format", choices=("json", "tsv"), default="json")

    pa = sub.add_parser("analyze", help="analyze one group/subgroup pair")
    pa.add_argument("group", help="group spec JSON file, or - for stdin")
    pa.add_argument("subgroup", help="subgroup spec JSON file")
    common(pa)
    pa.set_defaults(func=cmd_analyze)

    pc = sub.add_parser("corpus", help="run the built-in corpus")
    pc.add_argument("--corpus-filter", default=None, metavar="GLOB",
                    help="only pairs whose group/subgroup name matches")
    common(pc)
    pc.set_defaults(func=cmd_corpus)

    pf = sub.add_parser("findim-demo",
                        help="separability of a finite-dimensional "
                             "algebra extension")
    pf.add_argument("algebra", nargs="?", help="algebra spec JSON file")
    pf.add_argument("subalgebra", nargs="?", help="subalgebra spec JSON")
    pf.add_argument("--fixture", default=None,
                    help="built-in example: triangular<n>, jordan<n>, "
                         "structural, monoid<n>")
    pf.set_defaults(func=cmd_findim_demo)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "cap_group"):
            if args.cap_group is None:
                args.cap_group = _env_int("SEPDEPTH_CAP_GROUP",
                                          DEFAULT_GROUP_CAP)
            if args.cap_linear is None:
                args.cap_linear = _env_int("SEPDEPTH_CAP_LINEAR",
                                           DEFAULT_LINEAR_CAP)
        return args.func(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except SepdepthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
