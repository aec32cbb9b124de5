"""Reference tables: assemble the six benchmark tables from the catalog.

Each builder returns a TableDocument (columns, rows, provenance) that the
CLI renders as csv/json/markdown.  Output is deterministic: no timestamps,
no randomness (the provenance header records that), and float cells are
produced by exact or certified computations upstream.
"""

import math
from dataclasses import dataclass, field

from . import catalog, exactmat, kernels, lattice, sequences, torus

DEFAULT_W = {1: range(1, 11), 2: range(1, 11), 3: range(1, 11), 4: range(2, 11), 5: range(1, 14)}
TABLE6_REAL_W = (9.0, 9.1, 9.2, 9.35, 9.4, 9.55, 9.6, 9.7, 10.0, 10.05, 10.1,
                 10.3, 10.45, 10.5, 10.65, 10.7, 10.85, 11.0)
TABLE6_INT_W = range(1, 19)


class UnknownTableError(ValueError):
    pass


@dataclass
class TableDocument:
    table_id: int
    title: str
    columns: list[str]
    rows: list[list]
    provenance: dict = field(default_factory=dict)


def _provenance(table_id, w_values) -> dict:
    return {
        "table": table_id,
        "w_values": [w for w in w_values],
        "catalog_sha256": catalog.data_checksums(),
        "deterministic": "seedless",
        "kernel_backend": kernels.backend(),
    }


def _group_str(member) -> str:
    return str(sequences.quotient_group(member))


def _target_density_sq(entry):
    """Exact squared center density of the entry's target lattice (the
    primal dual-adjoint of its dual base)."""
    target = exactmat.dualadj(entry.dual_base)
    return lattice.center_density_sq(lattice.LatticeBasis(matrix=target))


def build_table(table_id: int, w_values=None, max_nodes: int = 0) -> TableDocument:
    builders = {1: _table1, 2: _table2, 3: _table3, 4: _table4, 5: _table5, 6: _table6}
    if table_id not in builders:
        raise UnknownTableError(f"no table {table_id}; valid ids are 1..6")
    return builders[table_id](w_values, max_nodes)


def _table1(w_values, max_nodes) -> TableDocument:
    ws = list(w_values or DEFAULT_W[1])
    entry = catalog.get("d3")
    perts = [
        ("zero", exactmat.zeros(3, 3)),
        ("good", entry.good_perturbation),
        ("cyclic", catalog.cyclic_perturbation(3)),
    ]
    columns = ["w"]
    for name, _ in perts:
        columns += [f"M[{name}]", f"density[{name}]", f"group[{name}]"]
    rows = []
    for w in ws:
        cells = [w]
        for _, p in perts:
            spec = sequences.SequenceSpec(entry.dual_base, p)
            try:
                member = sequences.primal_member(spec, w)
            except sequences.SingularMemberError:
                cells += [None, None, "skipped (singular)"]
                continue
            density = lattice.center_density(member.primal_matrix)
            cells += [sequences.code_size(member), density, _group_str(member)]
        rows.append(cells)
    return TableDocument(1, "3-dimensional family: size, density, quotient group",
                         columns, rows, _provenance(1, ws))


def _table2(w_values, max_nodes) -> TableDocument:
    ws = list(w_values or DEFAULT_W[2])
    names = ["d3", "d4", "d5", "d6"]
    columns = ["w"]
    for name in names:
        columns += [f"ratio[{name}]", f"group[{name}]"]
    rows = [[w] for w in ws]
    for name in names:
        entry = catalog.get(name)
        spec = sequences.SequenceSpec(entry.dual_base, entry.good_perturbation)
        target_sq = _target_density_sq(entry)
        for cells, w in zip(rows, ws):
            try:
                member = sequences.primal_member(spec, w)
            except sequences.SingularMemberError:
                cells += [None, "skipped (singular)"]
                continue
            num = lattice.center_density_sq(lattice.LatticeBasis(matrix=member.primal_matrix))
            cells += [math.sqrt(float(num / target_sq)), _group_str(member)]
    return TableDocument(2, "3- to 6-dimensional density ratios under the good perturbation",
                         columns, rows, _provenance(2, ws))


def _table3(w_values, max_nodes) -> TableDocument:
    ws = list(w_values or DEFAULT_W[3])
    names = ["e7", "e8-1", "e8-2"]
    columns = ["w"]
    for name in names:
        columns += [f"ratio[{name}]", f"group[{name}]"]
    rows = [[w] for w in ws]
    for name in names:
        entry = catalog.get(name)
        spec = sequences.SequenceSpec(entry.dual_base, entry.good_perturbation)
        target_sq = _target_density_sq(entry)
        for cells, w in zip(rows, ws):
            try:
                member = sequences.primal_member(spec, w)
            except sequences.SingularMemberError:
                cells += [None, "skipped (singular)"]
                continue
            num = lattice.center_density_sq(lattice.LatticeBasis(matrix=member.primal_matrix))
            cells += [math.sqrt(float(num / target_sq)), _group_str(member)]
    return TableDocument(3, "7- and 8-dimensional density ratios under the good perturbations",
                         columns, rows, _provenance(3, ws))


def _table4(w_values, max_nodes) -> TableDocument:
    ws = list(w_values or DEFAULT_W[4])
    blocks = [("e8-1", "zero"), ("e8-2", "zero"), ("e8-1", "good"), ("e8-2", "good")]
    columns = ["w"]
    for name, pert in blocks:
        columns += [f"distance[{name},{pert}]", f"M[{name},{pert}]"]
    rows = [[w] for w in ws]
    for name, pert in blocks:
        entry = catalog.get(name)
        p = exactmat.zeros(8, 8) if pert == "zero" else entry.good_perturbation
        spec = sequences.SequenceSpec(entry.dual_base, p)
        table_rows = torus.code_table(spec, ws, max_nodes=max_nodes)
        for cells, r in zip(rows, table_rows):
            if r.skipped:
                cells += [None, None]
            else:
                cells += [r.distance, r.size]
    return TableDocument(4, "8-dimensional spherical codes: minimum distance and size",
                         columns, rows, _provenance(4, ws))


def _table5(w_values, max_nodes) -> TableDocument:
    ws = list(w_values or DEFAULT_W[5])
    columns = ["w"]
    for variant in (1, 2):
        columns += [f"log10M[leech-{variant}]", f"distance[leech-{variant}]",
                    f"certified[leech-{variant}]"]
    rows = [[w] for w in ws]
    for variant in (1, 2):
        entry = catalog.leech(variant)
        spec = sequences.SequenceSpec(entry.dual_base, entry.good_perturbation)
        table_rows = torus.code_table(spec, ws, max_nodes=max_nodes)
        for cells, r in zip(rows, table_rows):
            if r.skipped:
                cells += [None, None, False]
            else:
                cells += [math.log10(r.size), r.distance, r.certified]
    return TableDocument(5, "24-dimensional spherical codes: log-size and minimum distance",
                         columns, rows, _provenance(5, ws))


def _table6(w_values, max_nodes) -> TableDocument:
    entry = catalog.get("e6")
    base = entry.dual_base
    int_ws = list(w_values or TABLE6_INT_W)
    real_ws = [] if w_values else list(TABLE6_REAL_W)
    columns = ["branch", "w", "M", "ratio"]
    rows = []
    for branch, ws in (("integer", int_ws), ("real", real_ws)):
        for w in ws:
            try:
                dual = sequences.rounded_dual_member(base, w)
                member = sequences.member_from_dual(dual, w)
            except sequences.SingularMemberError:
                rows.append([branch, w, None, None])
                continue
            density = lattice.center_density(member.primal_matrix)
            rows.append([branch, w, sequences.code_size(member),
                         density / entry.target_density])
    all_ws = list(int_ws) + real_ws
    return TableDocument(6, "6-dimensional rounded path: size and density ratio",
                         columns, rows, _provenance(6, all_ws))
