"""Serializable verdict reports and their table rendering.

The machine-readable form round-trips: parsing an emitted record yields an
equal report.  The table form mirrors the particle-column layout used for
distribution listings (one column per particle A, B, C, ...).
"""

from __future__ import annotations

import string
from dataclasses import dataclass

from .gf2 import Bitvec
from .graphstate import Graph, format_graph, parse_graph, stabilizer_element
from .pauli import format_pauli
from .reality import AvnDecision, Distribution, EoRWitness, format_distribution
from .witness import AvnWitness, format_witness


@dataclass
class DistributionReport:
    """One distribution's verdict, its element-of-reality table, and an
    optional contradiction witness."""

    graph: Graph
    distribution: Distribution
    decision: AvnDecision
    witness: AvnWitness | None = None

    def __post_init__(self):
        table_ok = all(
            row["X"] is not None and row["Y"] is not None
            for row in self.decision.eor.values()
        )
        if table_ok != self.decision.allows:
            raise ValueError("verdict does not match the element-of-reality table")

    @property
    def verdict(self) -> str:
        return "allows" if self.decision.allows else "blocks"

    def to_json_dict(self) -> dict:
        eor = {}
        for qubit, row in self.decision.eor.items():
            eor[str(qubit)] = {
                letter: (list(w.subset.indices_1based()) if w is not None else None)
                for letter, w in row.items()
            }
        witness = None
        if self.witness is not None:
            witness = {
                "subsets": [list(s.indices_1based()) for s in self.witness.subsets],
                "equations": format_witness(self.witness, self.graph),
            }
        return {
            "graph": format_graph(self.graph),
            "m": self.distribution.m,
            "particles": [list(p) for p in self.distribution.particles],
            "verdict": self.verdict,
            "shortcut": self.decision.shortcut,
            "eor_table": eor,
            "witness": witness,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "DistributionReport":
        graph = parse_graph(data["graph"])
        dist = Distribution(graph.n, tuple(tuple(p) for p in data["particles"]))
        eor = {}
        for qubit_str, row in data["eor_table"].items():
            qubit = int(qubit_str)
            eor[qubit] = {
                letter: (
                    EoRWitness(qubit, letter, Bitvec.from_indices(graph.n, [i - 1 for i in subset]))
                    if subset is not None
                    else None
                )
                for letter, subset in row.items()
            }
        decision = AvnDecision(
            allows=data["verdict"] == "allows",
            eor=eor,
            shortcut=data.get("shortcut"),
        )
        witness = None
        if data.get("witness") is not None:
            witness = AvnWitness(
                tuple(
                    Bitvec.from_indices(graph.n, [i - 1 for i in subset])
                    for subset in data["witness"]["subsets"]
                )
            )
        return cls(graph, dist, decision, witness)

    def render_table(self) -> str:
        lines = [
            f"graph: {format_graph(self.graph)}",
            f"distribution: {format_distribution(self.distribution)}",
            f"verdict: {self.verdict}",
        ]
        if self.decision.shortcut:
            lines.append(f"shortcut: {self.decision.shortcut}")
        rows = []
        for qubit in sorted(self.decision.eor):
            row = self.decision.eor[qubit]
            cells = []
            for letter in ("X", "Y", "Z"):
                w = row[letter]
                if w is None:
                    cells.append("-")
                else:
                    cells.append(format_pauli(stabilizer_element(self.graph, w.subset)))
            rows.append((qubit, cells))
        width = max(
            [len(c) for _, cells in rows for c in cells[:2]] + [1]
        )
        lines.append(f"{'qubit':<6} {'X':<{width}}  {'Y':<{width}}  Z")
        for qubit, cells in rows:
            lines.append(
                f"{qubit:<6} {cells[0]:<{width}}  {cells[1]:<{width}}  {cells[2]}"
            )
        if self.witness is not None:
            lines.append("witness:")
            lines.extend(f"  {eq}" for eq in format_witness(self.witness, self.graph))
        return "\n".join(lines)


def particle_columns_header(max_parts: int) -> str:
    labels = string.ascii_uppercase[:max_parts]
    return "m  " + "  ".join(f"{c:<8}" for c in labels)


def particle_columns_row(report: DistributionReport) -> str:
    cells = [",".join(str(q) for q in p) for p in report.distribution.particles]
    return f"{report.distribution.m}  " + "  ".join(f"{c:<8}" for c in cells)
