"""Directed-network adjacency data: ingestion, validation, degrees, zero-row patching."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i + 1) for i in range(n))


@dataclass(frozen=True, eq=False)
class AdjacencyMatrix:
    """Square non-negative matrix with one label per node.

    Entries are 0/1 for simple digraphs, but any non-negative weights are
    accepted.  Instances are immutable; the entry array is read-only.
    """

    entries: np.ndarray
    labels: tuple[str, ...]

    def __post_init__(self):
        e = _frozen(self.entries)
        if e.ndim != 2 or e.shape[0] != e.shape[1]:
            raise ValueError(f"adjacency matrix must be square, got shape {e.shape}")
        if e.shape[0] == 0:
            raise ValueError("adjacency matrix must have at least one node")
        if not np.isfinite(e).all():
            raise ValueError("adjacency entries must be finite")
        if (e < 0).any():
            raise ValueError("adjacency entries must be non-negative")
        labels = tuple(str(l) for l in self.labels)
        if len(labels) != e.shape[0]:
            raise ValueError(f"{len(labels)} labels for {e.shape[0]} nodes")
        if len(set(labels)) != len(labels):
            raise ValueError("node labels must be pairwise distinct")
        object.__setattr__(self, "entries", e)
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def from_entries(cls, entries, labels: Optional[Sequence[str]] = None) -> "AdjacencyMatrix":
        e = np.asarray(entries, dtype=float)
        if labels is None:
            labels = default_labels(e.shape[0] if e.ndim == 2 else 0)
        return cls(e, tuple(labels))


@dataclass(frozen=True, eq=False)
class DegreeVector:
    """Row sums (kind="out") or column sums (kind="in") of an adjacency matrix."""

    values: np.ndarray
    kind: str

    def __post_init__(self):
        if self.kind not in ("out", "in"):
            raise ValueError(f"degree kind must be 'out' or 'in', got {self.kind!r}")
        object.__setattr__(self, "values", _frozen(self.values))


def load_edge_list(
    edge_rows: Iterable[tuple[str, str]],
    roster: Optional[Sequence[str]] = None,
) -> AdjacencyMatrix:
    """Build a 0/1 adjacency matrix from (follower, followed) pairs.

    With a roster, node order follows the roster and isolated roster nodes
    keep zero rows/columns; otherwise nodes appear in first-appearance order.
    Duplicate edges collapse to a single 1.  Self-edges are recorded as given.
    """
    edges = []
    for row in edge_rows:
        if len(row) != 2:
            raise ValueError(f"edge row must have two labels, got {row!r}")
        a, b = str(row[0]), str(row[1])
        if not a or not b:
            raise ValueError(f"edge row has an empty label: {row!r}")
        edges.append((a, b))

    if roster is not None:
        labels = tuple(str(l) for l in roster)
        index = {l: i for i, l in enumerate(labels)}
        if len(index) != len(labels):
            raise ValueError("roster labels must be pairwise distinct")
        for a, b in edges:
            if a not in index or b not in index:
                raise ValueError(f"edge label not in roster: {a if a not in index else b!r}")
    else:
        index: dict[str, int] = {}
        for a, b in edges:
            for l in (a, b):
                if l not in index:
                    index[l] = len(index)
        labels = tuple(index)

    if not labels:
        raise ValueError("no nodes: empty edge list and no roster")
    entries = np.zeros((len(labels), len(labels)))
    for a, b in edges:
        entries[index[a], index[b]] = 1.0
    return AdjacencyMatrix(entries, labels)


def _parse_number(token: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise ValueError(f"non-numeric entry {token!r} in dense matrix") from None


def _split_row(line: str) -> list[str]:
    if "," in line:
        return [t.strip() for t in next(csv.reader(io.StringIO(line)))]
    return line.split()


def _looks_numeric(tokens: list[str]) -> bool:
    try:
        for t in tokens:
            float(t)
    except ValueError:
        return False
    return True


def load_dense_matrix(text: str, labels: Optional[Sequence[str]] = None) -> AdjacencyMatrix:
    """Parse a dense adjacency grid (comma- or whitespace-separated rows).

    A non-numeric first row is taken as a header and its tokens become the
    node labels unless explicit labels are given.  Default labels are "1".."n".
    """
    rows = [_split_row(line) for line in text.splitlines() if line.strip()]
    if not rows:
        raise ValueError("empty dense matrix input")
    header = None
    if not _looks_numeric(rows[0]):
        header = rows[0]
        rows = rows[1:]
        if not rows:
            raise ValueError("dense matrix input has a header but no data rows")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise ValueError(f"ragged dense matrix: row widths {sorted(widths)}")
    entries = np.array([[_parse_number(t) for t in r] for r in rows])
    if entries.shape[0] != entries.shape[1]:
        raise ValueError(f"dense matrix must be square, got {entries.shape[0]}x{entries.shape[1]}")
    if labels is None:
        labels = header if header is not None else default_labels(entries.shape[0])
    return AdjacencyMatrix(entries, tuple(labels))


def degrees(adj: AdjacencyMatrix, kind: str) -> DegreeVector:
    """Out-degrees (row sums) or in-degrees (column sums)."""
    if kind == "out":
        return DegreeVector(adj.entries.sum(axis=1), "out")
    if kind == "in":
        return DegreeVector(adj.entries.sum(axis=0), "in")
    raise ValueError(f"degree kind must be 'out' or 'in', got {kind!r}")


def patch_zero_rows(adj: AdjacencyMatrix) -> AdjacencyMatrix:
    """Replace every all-zero row by an all-ones row (diagonal included).

    Rows with positive sum are returned unchanged, so the operation is
    idempotent and the result always has strictly positive out-degrees.
    """
    entries = adj.entries.copy()
    entries[entries.sum(axis=1) == 0] = 1.0
    return AdjacencyMatrix(entries, adj.labels)


def read_dense_csv(path) -> AdjacencyMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return load_dense_matrix(fh.read())


def read_edge_list_csv(
    path,
    follower_col: str = "following",
    followed_col: str = "followed",
) -> list[tuple[str, str]]:
    """Read (follower, followed) pairs from a headered CSV.

    The header must contain both named columns; extra columns are ignored.
    """
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise ValueError(f"{path}: empty edge-list file")
        missing = {follower_col, followed_col} - set(reader.fieldnames)
        if missing:
            raise ValueError(f"{path}: missing edge-list columns {sorted(missing)}")
        return [(row[follower_col], row[followed_col]) for row in reader]


def read_roster_csv(path, label_col: str = "screen_name") -> list[str]:
    """Read the node roster from a CSV with a `screen_name` column."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or label_col not in reader.fieldnames:
            raise ValueError(f"{path}: roster file needs a {label_col!r} column")
        return [row[label_col] for row in reader]
