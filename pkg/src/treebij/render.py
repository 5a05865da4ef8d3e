"""Graphviz DOT and plain-text drawings of PORTs and phylogenetic trees."""
from __future__ import annotations

from .core import PhyloTree, Port
from .stanley import label_internal


def _ascii(label: str, children: list, child_view) -> list[str]:
    lines = [label]
    for k, child in enumerate(children):
        last = k == len(children) - 1
        sub = child_view(child)
        lines.append(("└── " if last else "├── ") + sub[0])
        lines.extend(("    " if last else "│   ") + line for line in sub[1:])
    return lines


def port_ascii(t: Port) -> str:
    def view(node: Port) -> list[str]:
        return _ascii(str(node.label), list(node.children), view)

    return "\n".join(view(t))


def port_dot(t: Port) -> str:
    lines = ["digraph port {", "  ordering=out;", "  node [shape=circle];"]
    nodes, edges = [], []
    stack = [t]
    while stack:
        node = stack.pop()
        nodes.append(node.label)
        edges.extend((node.label, c.label) for c in node.children)
        stack.extend(reversed(node.children))
    lines += [f"  {v};" for v in nodes]
    lines += [f"  {u} -> {v};" for u, v in edges]
    lines.append("}")
    return "\n".join(lines)


def _phylo_names(t: PhyloTree, stanley_labels: bool) -> dict:
    """Map every internal subtree to a display label ('' when unlabelled)."""
    labels = label_internal(t).labels if stanley_labels and t.n >= 1 else {}
    return {node: str(labels.get(node, "")) for node in t.internal_nodes()}


def phylo_ascii(t: PhyloTree, stanley_labels: bool = False) -> str:
    names = _phylo_names(t, stanley_labels)

    def view(node) -> list[str]:
        if isinstance(node, int):
            return [str(node)]
        return _ascii(names[node] or "*", list(node), view)

    return "\n".join(view(t.root))


def phylo_dot(t: PhyloTree, stanley_labels: bool = False) -> str:
    names = _phylo_names(t, stanley_labels)
    ids = {node: f"i{k}" for k, node in enumerate(t.internal_nodes())}

    def ident(node) -> str:
        return f"leaf{node}" if isinstance(node, int) else ids[node]

    lines = ["digraph phylo {", "  node [shape=circle];"]
    stack = [t.root]
    nodes, edges = [], []
    while stack:
        node = stack.pop()
        label = str(node) if isinstance(node, int) else names[node]
        nodes.append(f'  {ident(node)} [label="{label}"];')
        if not isinstance(node, int):
            edges += [f"  {ident(node)} -> {ident(c)};" for c in node]
            stack.extend(reversed(node))
    lines += nodes + edges
    lines.append("}")
    return "\n".join(lines)


def render(kind: str, value, fmt: str, stanley_labels: bool = False) -> str:
    if kind == "port":
        return port_dot(value) if fmt == "dot" else port_ascii(value)
    if kind == "phylo":
        return phylo_dot(value, stanley_labels) if fmt == "dot" else phylo_ascii(value, stanley_labels)
    raise ValueError(f"cannot render kind {kind!r}")
