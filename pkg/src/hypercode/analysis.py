"""Analysis reports: code parameters plus self-duality flags for one input.

This is the layer the CLI prints and the verification suite consumes.  The
report is a plain object with stable field names; vertex labels in the
serialized forms are 1-based (files stay 0-based).
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from contextlib import nullcontext
from dataclasses import dataclass

from .codes import (
    LinearCode,
    codeword_distance_search,
    eonv_distance_search,
    from_generator,
    is_self_dual,
    is_self_orthogonal,
    weight_distribution,
)
from .gf2core import BitMatrix
from .hypergraph import Hypergraph, from_incidence_matrix, incidence_matrix

METHODS = ("codeword", "eonv", "both")

CSV_COLUMNS = (
    "length",
    "dimension",
    "min_distance",
    "min_distance_method",
    "witness_subset",
    "self_orthogonal",
    "self_dual",
    "weight_distribution",
    "distance_exact",
)


class EngineDisagreement(RuntimeError):
    """The two distance engines returned different exact values.

    This is a correctness alarm, never an expected outcome.
    """


@dataclass(frozen=True)
class AnalysisReport:
    length: int
    dimension: int
    min_distance: int | None
    method: str
    witness: tuple[int, ...] | None
    self_orthogonal: bool
    self_dual: bool
    weight_dist: dict[int, int] | None
    distance_exact: bool | None

    def to_json_dict(self) -> dict:
        out: dict = {"length": self.length, "dimension": self.dimension}
        if self.min_distance is not None:
            out["min_distance"] = self.min_distance
        out["min_distance_method"] = self.method
        if self.witness is not None:
            out["witness_subset"] = [v + 1 for v in self.witness]
        out["self_orthogonal"] = self.self_orthogonal
        out["self_dual"] = self.self_dual
        if self.weight_dist is not None:
            out["weight_distribution"] = {str(w): c for w, c in sorted(self.weight_dist.items())}
        if self.distance_exact is not None:
            out["distance_exact"] = self.distance_exact
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def to_csv(self) -> str:
        def flag(value: bool | None) -> str:
            return "" if value is None else ("true" if value else "false")

        row = {
            "length": self.length,
            "dimension": self.dimension,
            "min_distance": "" if self.min_distance is None else self.min_distance,
            "min_distance_method": self.method,
            "witness_subset": ""
            if self.witness is None
            else " ".join(str(v + 1) for v in self.witness),
            "self_orthogonal": flag(self.self_orthogonal),
            "self_dual": flag(self.self_dual),
            "weight_distribution": ""
            if self.weight_dist is None
            else ";".join(f"{w}:{c}" for w, c in sorted(self.weight_dist.items())),
            "distance_exact": flag(self.distance_exact),
        }
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerow(row)
        return buf.getvalue()


def _nonzero_column_hypergraph(matrix: BitMatrix) -> Hypergraph:
    # Zero columns contribute nothing to any codeword weight, so the subset
    # engine may run on the hypergraph of the nonzero columns alone.
    keep = [
        j
        for j in range(matrix.num_cols)
        if any((r >> j) & 1 for r in matrix.rows)
    ]
    rows = []
    for r in matrix.rows:
        bits = 0
        for pos, j in enumerate(keep):
            bits |= ((r >> j) & 1) << pos
        rows.append(bits)
    return from_incidence_matrix(BitMatrix(matrix.num_rows, len(keep), tuple(rows)))


def _analyze(
    code: LinearCode,
    eonv_input: Hypergraph | None,
    *,
    method: str,
    weights: bool,
    early_exit: int | None,
    cap: int | None,
    threads: int,
) -> AnalysisReport:
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    if threads < 1:
        raise ValueError("threads must be positive")

    value: int | None = None
    witness: tuple[int, ...] | None = None
    exact: bool | None = None
    if code.dimension > 0:
        pool_ctx = ThreadPoolExecutor(max_workers=threads) if threads > 1 else nullcontext()
        with pool_ctx as pool:
            map_fn = map if pool is None else pool.map
            kwargs = dict(early_exit=early_exit, cap=cap, num_ranges=threads, map_fn=map_fn)
            code_result = None
            eonv_result = None
            if method in ("codeword", "both"):
                code_result = codeword_distance_search(code, **kwargs)
            if method in ("eonv", "both"):
                if eonv_input is None:
                    raise ValueError("the eonv engine needs a hypergraph input")
                eonv_result = eonv_distance_search(eonv_input, **kwargs)
        if method == "codeword":
            value, exact = code_result.value, code_result.exact
        elif method == "eonv":
            value, exact = eonv_result.value, eonv_result.exact
            witness = eonv_result.witness
        else:
            exact = code_result.exact and eonv_result.exact
            if exact and code_result.value != eonv_result.value:
                raise EngineDisagreement(
                    f"codeword engine found d={code_result.value} but the subset "
                    f"engine found d={eonv_result.value}"
                )
            value = min(code_result.value, eonv_result.value)
            witness = eonv_result.witness

    dist = weight_distribution(code, cap=cap) if weights else None
    return AnalysisReport(
        length=code.length,
        dimension=code.dimension,
        min_distance=value,
        method=method,
        witness=witness,
        self_orthogonal=is_self_orthogonal(code),
        self_dual=is_self_dual(code),
        weight_dist=dist,
        distance_exact=exact,
    )


def analyze_hypergraph(
    hypergraph: Hypergraph,
    *,
    method: str = "both",
    weights: bool = False,
    early_exit: int | None = None,
    cap: int | None = None,
    threads: int = 1,
) -> AnalysisReport:
    """Analyze the binary code generated by a hypergraph's incidence matrix.

    With ``method="both"`` the two distance engines are cross-checked and a
    mismatch of exact values raises :class:`EngineDisagreement`.
    """
    code = from_generator(incidence_matrix(hypergraph))
    return _analyze(
        code,
        hypergraph,
        method=method,
        weights=weights,
        early_exit=early_exit,
        cap=cap,
        threads=threads,
    )


def analyze_matrix(
    matrix: BitMatrix,
    *,
    method: str = "both",
    weights: bool = False,
    early_exit: int | None = None,
    cap: int | None = None,
    threads: int = 1,
) -> AnalysisReport:
    """Analyze the binary code generated by an arbitrary matrix.

    The subset engine treats the rows as vertices of the hypergraph whose
    incidence matrix this is; zero columns are dropped for that engine only,
    which leaves every codeword weight unchanged.
    """
    code = from_generator(matrix)
    eonv_input = None
    if method in ("eonv", "both") and code.dimension > 0:
        eonv_input = _nonzero_column_hypergraph(matrix)
    return _analyze(
        code,
        eonv_input,
        method=method,
        weights=weights,
        early_exit=early_exit,
        cap=cap,
        threads=threads,
    )
