"""The JSON certificate format shared by every command.

Every document carries ``format``, a ``kind`` and, where it applies, the
variant code, the number of cops and the graph. Strategy tables list one
entry per state with vertex lists instead of bitmasks, sorted so that equal
inputs serialize to identical bytes.
"""
from __future__ import annotations

import json
from typing import Any

from .game import SearchState, VariantSpec
from .graph import Graph, bits, parse_graph, serialize_graph, to_mask
from .solver import CopStrategy, RobberStrategy, Verdict, state_key

FORMAT = "speedcops-certificate/1"


class CertificateError(ValueError):
    pass


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def document(kind: str, **fields: Any) -> dict:
    return {"format": FORMAT, "kind": kind, **fields}


def graph_json(G: Graph) -> dict:
    return json.loads(serialize_graph(G, "json"))


def graph_from_json(data: dict) -> Graph:
    return parse_graph(json.dumps(data))


def _vs(mask: int) -> list[int]:
    return list(bits(mask))


def _key_json(variant: VariantSpec, key: tuple) -> dict:
    out = {"cops": _vs(key[0])}
    if variant.visible:
        out["robber"] = key[1]
    else:
        out["contamination"] = _vs(key[1])
    if len(key) > 2:
        out["cleared"] = _vs(key[2])
    return out


def _key_from_json(variant: VariantSpec, row: dict) -> tuple:
    knowledge = row["robber"] if variant.visible else to_mask(row["contamination"])
    key = (to_mask(row["cops"]), knowledge)
    if variant.monotone != "none":
        key += (to_mask(row.get("cleared", [])),)
    return key


def strategy_json(G: Graph, strat: CopStrategy) -> dict:
    """Serialize the table part of a strategy.

    Rule-backed strategies only list the states they have been asked about,
    so verify them first to fill the table with every reachable state.
    """
    rows = []
    for key, ann in strat.table.items():
        row = _key_json(strat.variant, key)
        row["announce"] = _vs(ann)
        rows.append(row)
    rows.sort(key=lambda r: json.dumps(r, sort_keys=True))
    return document(
        "cop-strategy",
        variant=strat.variant.code,
        k=strat.k,
        name=strat.name,
        graph=graph_json(G),
        table=rows,
    )


def strategy_from_json(doc: dict) -> tuple[Graph, CopStrategy]:
    _expect(doc, "cop-strategy")
    variant = VariantSpec.parse(doc["variant"])
    table = {_key_from_json(variant, row): to_mask(row["announce"]) for row in doc["table"]}
    return graph_from_json(doc["graph"]), CopStrategy(variant, doc["k"], table, name=doc.get("name", "table"))


def robber_json(G: Graph, cert: RobberStrategy, replies: dict | None = None) -> dict:
    """Visible certificates list the replies met while probing them."""
    doc = document("robber-strategy", variant=cert.variant.code, k=cert.k, graph=graph_json(G))
    if cert.variant.visible:
        doc["start"] = cert.start
        rows = []
        for (key, ann), d in (replies or {}).items():
            row = _key_json(cert.variant, key)
            row["announce"] = _vs(ann)
            row["reply"] = d
            rows.append(row)
        rows.sort(key=lambda r: json.dumps(r, sort_keys=True))
        doc["replies"] = rows
    else:
        doc["claim"] = f"no sequence of at most {cert.k} cops clears the graph"
    return doc


def recording(cert: RobberStrategy) -> tuple[RobberStrategy, dict]:
    """Wrap a robber strategy so its replies are remembered for serialization."""
    seen: dict = {}
    if cert.reply_fn is None:
        return cert, seen
    inner = cert.reply_fn

    def reply(state: SearchState, ann: int) -> int:
        d = inner(state, ann)
        seen[(state_key(cert.variant, state), ann)] = d
        return d

    return RobberStrategy(cert.variant, cert.k, cert.start, reply), seen


def verdict_json(G: Graph, verdict: Verdict, certificate: dict | None, verified: bool) -> dict:
    stats = {k: v for k, v in verdict.stats.items() if isinstance(v, (int, str))}
    return document(
        "verdict",
        variant=verdict.variant.code,
        k=verdict.k,
        winner=verdict.winner,
        verified=verified,
        stats=stats,
        certificate=certificate,
    )


def _expect(doc: dict, kind: str) -> None:
    if doc.get("format") != FORMAT:
        raise CertificateError(f"not a {FORMAT} document")
    if doc.get("kind") != kind:
        raise CertificateError(f"expected a {kind} document, got {doc.get('kind')!r}")
