"""Command-line interface.

Verbs:
  table <id>        emit one of the six reference tables (csv/json/md)
  construct <src>   run the sequence construction on a catalog entry or file
  catalog list      show resolvable catalog names

Exit codes: 0 ok, 2 usage, 3 capability exceeded, 4 singular member.
"""

import argparse
import json
import sys

from . import __version__, catalog, exactmat, lattice, sequences, tables, torus

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAPABILITY = 3
EXIT_SINGULAR = 4

SHOW_TOKENS = ("member", "group", "density", "sphere", "classify", "size")


def _fmt_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return format(value, ".6g")
    return str(value)


def _render_csv(doc: tables.TableDocument) -> str:
    lines = [f"# table {doc.table_id}: {doc.title}"]
    for key, value in sorted(doc.provenance.items()):
        if key == "catalog_sha256":
            for fname, digest in sorted(value.items()):
                lines.append(f"# catalog_sha256 {fname} {digest}")
        else:
            lines.append(f"# {key} {value}")
    lines.append(",".join(doc.columns))
    for row in doc.rows:
        lines.append(",".join(_fmt_cell(c) for c in row))
    return "\n".join(lines) + "\n"


def _render_md(doc: tables.TableDocument) -> str:
    lines = [f"**Table {doc.table_id}** - {doc.title}", ""]
    lines.append("| " + " | ".join(doc.columns) + " |")
    lines.append("|" + "|".join("---" for _ in doc.columns) + "|")
    for row in doc.rows:
        lines.append("| " + " | ".join(_fmt_cell(c) for c in row) + " |")
    lines.append("")
    lines.append(f"provenance: deterministic (seedless); backend {doc.provenance.get('kernel_backend')}")
    return "\n".join(lines) + "\n"


def _render_json(doc: tables.TableDocument) -> str:
    payload = {
        "table": doc.table_id,
        "title": doc.title,
        "columns": doc.columns,
        "rows": doc.rows,
        "provenance": doc.provenance,
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


_RENDERERS = {"csv": _render_csv, "md": _render_md, "json": _render_json}


def _parse_w_range(text: str):
    lo, _, hi = text.partition("..")
    try:
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad w range {text!r}; expected a..b") from None


def _parse_w_list(text: str):
    out = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            out.append(int(token))
        except ValueError:
            try:
                out.append(float(token))
            except ValueError:
                raise argparse.ArgumentTypeError(f"bad w value {token!r}") from None
    if not out:
        raise argparse.ArgumentTypeError("empty w list")
    return out


def _load_source(source: str):
    """Resolve a catalog name or matrix file into (matrix, entry-or-None)."""
    try:
        entry = catalog.get(source)
        return entry.dual_base, entry
    except catalog.CatalogError:
        pass
    matrix = catalog.load_matrix_file(source)
    return matrix, None


def _resolve_perturbation(kind: str, base, entry):
    n = len(base)
    if kind == "zero":
        return exactmat.zeros(n, n)
    if kind == "cyclic":
        return catalog.cyclic_perturbation(n)
    if kind == "good":
        if entry is None or entry.good_perturbation is None:
            raise catalog.CatalogError(f"no good perturbation known for this source")
        return entry.good_perturbation
    return catalog.load_matrix_file(kind)


def _is_exact_source(matrix) -> bool:
    return not any(isinstance(x, float) for row in matrix for x in row)


def _member_for(base, perturbation, w, exact: bool):
    if exact and isinstance(w, int):
        spec = sequences.SequenceSpec(base, perturbation)
        return sequences.primal_member(spec, w), spec
    rows = [[float(x) for x in row] for row in base]
    dual = sequences.rounded_dual_member(rows, w)
    if not exactmat.is_zero_matrix(perturbation):
        dual = exactmat.add(dual, perturbation)
        if exactmat.det(dual) == 0:
            raise sequences.SingularMemberError(f"member w={w} is singular")
    return sequences.member_from_dual(dual, w), None


def _construct_report(args):
    base, entry = _load_source(args.source)
    perturbation = _resolve_perturbation(args.perturb, base, entry)
    exact = _is_exact_source(base)
    show = [t.strip() for t in args.show.split(",") if t.strip()]
    for token in show:
        if token not in SHOW_TOKENS:
            raise argparse.ArgumentTypeError(
                f"unknown --show token {token!r}; valid: {', '.join(SHOW_TOKENS)}"
            )
    target_sq = None
    target_density = None
    if args.target:
        tmatrix, tentry = _load_source(args.target)
        if _is_exact_source(tmatrix):
            target_sq = lattice.center_density_sq(
                lattice.LatticeBasis(matrix=exactmat.dualadj(tmatrix))
            )
        else:
            target_density = tentry.target_density if tentry else None
    elif entry is not None:
        if entry.exact:
            target_sq = lattice.center_density_sq(
                lattice.LatticeBasis(matrix=exactmat.dualadj(entry.dual_base))
            )
        else:
            target_density = entry.target_density

    results = []
    single = len(args.w) == 1
    classification = None
    if exact and "classify" in show:
        spec = sequences.SequenceSpec(base, perturbation)
        cls = sequences.classify(spec)
        classification = {
            "kind": cls.kind,
            "quadratic_dual": cls.quadratic_dual,
            "quadratic_primal": cls.quadratic_primal,
        }
    for w in args.w:
        try:
            member, _ = _member_for(base, perturbation, w, exact)
        except sequences.SingularMemberError:
            if single:
                raise
            results.append({"w": w, "skipped": "singular member"})
            continue
        item = {"w": w, "det": member.det_dual}
        if "size" in show:
            item["size"] = sequences.code_size(member)
        if "member" in show:
            item["dual_matrix"] = member.dual_matrix
            item["primal_matrix"] = member.primal_matrix
        if "group" in show:
            item["group"] = str(sequences.quotient_group(member))
        if "density" in show:
            dens_sq = lattice.center_density_sq(
                lattice.LatticeBasis(matrix=member.primal_matrix)
            )
            import math

            item["density"] = math.sqrt(float(dens_sq))
            if target_sq is not None:
                item["density_ratio"] = math.sqrt(float(dens_sq / target_sq))
            elif target_density is not None:
                item["density_ratio"] = item["density"] / target_density
        if "sphere" in show:
            code = torus.torus_code(member)
            if code.size > 1:
                dist = torus.min_distance(code, max_nodes=args.max_nodes)
                item["sphere_distance"] = dist.value
                item["sphere_certified"] = dist.certified
            else:
                item["sphere_distance"] = None
        results.append(item)
    return {
        "source": args.source,
        "perturbation": args.perturb,
        "classification": classification,
        "results": results,
    }


def _print_construct_text(report, out):
    if report["classification"] is not None:
        c = report["classification"]
        out.write(
            f"convergence: {c['kind']} (quadratic-dual={c['quadratic_dual']}, "
            f"quadratic-primal={c['quadratic_primal']})\n"
        )
    for item in report["results"]:
        if "skipped" in item:
            out.write(f"w={item['w']}: skipped ({item['skipped']})\n")
            continue
        parts = [f"w={item['w']}", f"det={item['det']}"]
        for key in ("size", "group", "density", "density_ratio", "sphere_distance"):
            if key in item and item[key] is not None:
                value = item[key]
                parts.append(f"{key}={format(value, '.6g') if isinstance(value, float) else value}")
        out.write("  ".join(str(p) for p in parts) + "\n")
        if "dual_matrix" in item and len(item["dual_matrix"]) <= 12:
            out.write("  dual basis rows:\n")
            for row in item["dual_matrix"]:
                out.write("    " + " ".join(str(x) for x in row) + "\n")
            out.write("  primal basis rows:\n")
            for row in item["primal_matrix"]:
                out.write("    " + " ".join(str(x) for x in row) + "\n")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="ortholat",
        description="Lattice sequences with orthogonal sublattices: tables, "
        "quotient groups, densities, and torus codes.",
    )
    parser.add_argument("--version", action="version", version=f"ortholat {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="emit a reference table")
    p_table.add_argument("id", type=int, help="table number 1..6")
    p_table.add_argument("--format", choices=("csv", "json", "md"), default="csv")
    p_table.add_argument("--w-range", type=_parse_w_range, default=None, metavar="A..B")
    p_table.add_argument("--max-nodes", type=int, default=0,
                         help="enumeration node budget per cell (0 = unlimited)")
    p_table.add_argument("-o", "--output", default=None, help="write to file instead of stdout")

    p_con = sub.add_parser("construct", help="run the construction on a basis")
    p_con.add_argument("source", help="catalog name (e.g. d3, e8-1) or matrix file")
    p_con.add_argument("--perturb", default="zero",
                       help="zero | cyclic | good | path to a matrix file")
    p_con.add_argument("--w", type=_parse_w_list, default=[1], metavar="LIST",
                       help="comma-separated w values (ints exact, reals rounded)")
    p_con.add_argument("--show", default="size,group,classify",
                       help=f"comma list from: {', '.join(SHOW_TOKENS)}")
    p_con.add_argument("--target", default=None, help="density-ratio target (name or file)")
    p_con.add_argument("--format", choices=("text", "json"), default="text")
    p_con.add_argument("--max-nodes", type=int, default=0)

    p_cat = sub.add_parser("catalog", help="catalog utilities")
    p_cat.add_argument("action", choices=("list",))

    args = parser.parse_args(argv)

    try:
        if args.command == "table":
            try:
                doc = tables.build_table(args.id, w_values=args.w_range, max_nodes=args.max_nodes)
            except tables.UnknownTableError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_USAGE
            text = _RENDERERS[args.format](doc)
            if args.output:
                with open(args.output, "w") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return EXIT_OK
        if args.command == "construct":
            report = _construct_report(args)
            if args.format == "json":
                sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
            else:
                _print_construct_text(report, sys.stdout)
            return EXIT_OK
        if args.command == "catalog":
            for name in catalog.catalog_names():
                entry = catalog.get(name)
                kind = "exact" if entry.exact else "cholesky"
                print(f"{name:10s} dim {entry.dimension:2d}  {kind}")
            return EXIT_OK
    except sequences.SingularMemberError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except lattice.CapabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except (catalog.CatalogError, argparse.ArgumentTypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
