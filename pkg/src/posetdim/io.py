"""JSON interchange documents and DOT emission.

A poset document is {"name", "elements", "relations", "relation_kind"};
a realizer document is {"poset_name", "extensions"} with extensions as
element-name sequences.  Serialization is UTF-8 JSON with sorted keys
and a trailing newline, so outputs are byte-stable.
"""

import json

from .core import Poset, cover_relation, poset_from_relations


def poset_to_document(p, name, kind="cover"):
    if kind == "cover":
        rels = [[p.elements[a], p.elements[b]] for a, b in cover_relation(p)]
    elif kind == "order":
        import numpy as np

        rels = [[p.elements[a], p.elements[b]] for a, b in np.argwhere(p.lt)]
    else:
        raise ValueError(f"bad relation kind {kind!r}")
    return {
        "name": name,
        "elements": list(p.elements),
        "relations": rels,
        "relation_kind": kind,
    }


def document_to_poset(doc):
    return poset_from_relations(
        doc["elements"],
        [tuple(r) for r in doc["relations"]],
        doc.get("relation_kind", "order"),
    )


def realizer_to_document(p, realizer, poset_name):
    return {
        "poset_name": poset_name,
        "extensions": [[p.elements[i] for i in ext] for ext in realizer],
    }


def document_to_realizer(p, doc):
    return [tuple(p.index(name) for name in ext) for ext in doc["extensions"]]


def dumps(doc):
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text):
    return json.loads(text)


_PALETTE = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
]


def blocks_to_dot(p, dec):
    """Cover graph in DOT, edges colored by block, cut vertices
    double-circled.  Each cover edge lies in exactly one block."""
    lines = ["graph cover {"]
    for i, name in enumerate(p.elements):
        shape = "doublecircle" if i in dec.cut_vertices else "circle"
        lines.append(f'  "{name}" [shape={shape}];')
    edge_block = {}
    for k, b in enumerate(dec.blocks):
        for a, c in cover_relation(p):
            if a in b and c in b:
                edge_block.setdefault((a, c), k)
    for (a, c), k in sorted(edge_block.items()):
        color = _PALETTE[k % len(_PALETTE)]
        lines.append(
            f'  "{p.elements[a]}" -- "{p.elements[c]}" [color="{color}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
