"""Edge-list and DOT serialization, plus the JSON sidecar for labeled instances.

Edge-list text format:
    line 1:  tcs <n> <m>
    then m lines:  <u> <v>        (0-based, whitespace-separated, LF)

write_edgelist emits edges sorted, so write(read(write(G))) round-trips
bit-exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

from .graph import Digraph

MAGIC = "tcs"


def format_edgelist(G: Digraph) -> str:
    lines = [f"{MAGIC} {G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Digraph:
    tokens = text.split()
    if len(tokens) < 3 or tokens[0] != MAGIC:
        raise ValueError("edge list must start with 'tcs <n> <m>'")
    n, m = int(tokens[1]), int(tokens[2])
    body = tokens[3:]
    if len(body) != 2 * m:
        raise ValueError(f"expected {2 * m} endpoint tokens, found {len(body)}")
    edges = [(int(body[2 * i]), int(body[2 * i + 1])) for i in range(m)]
    G = Digraph(n, edges)
    if G.m != m:
        raise ValueError("duplicate edges in edge list")
    return G


def write_edgelist(G: Digraph, path: str | Path) -> None:
    Path(path).write_text(format_edgelist(G), encoding="ascii", newline="\n")


def read_edgelist(path: str | Path) -> Digraph:
    return parse_edgelist(Path(path).read_text(encoding="ascii"))


def format_dot(G: Digraph, name: str = "G", labels: dict[int, str] | None = None) -> str:
    """GraphViz digraph text for visualization."""
    out = [f"digraph {name} {{"]
    if labels:
        for v in range(G.n):
            if v in labels:
                out.append(f'  {v} [label="{labels[v]}"];')
    for u, v in G.edges:
        out.append(f"  {u} -> {v};")
    out.append("}")
    return "\n".join(out) + "\n"


def write_dot(G: Digraph, path: str | Path, name: str = "G",
              labels: dict[int, str] | None = None) -> None:
    Path(path).write_text(format_dot(G, name, labels), encoding="utf-8", newline="\n")


def write_sidecar(meta: dict, path: str | Path) -> None:
    """Deterministic JSON sidecar (sorted keys, LF) carrying instance labels."""
    text = json.dumps(meta, indent=2, sort_keys=True) + "\n"
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def read_sidecar(path: str | Path) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))
