"""Exact independence polynomials.

Two routes are provided on purpose: a subset-enumeration brute force (the
oracle) and a vertex-deletion recursion with component splitting and
canonical-key memoization (the fast path).  The recursion uses

    I(G, x) = I(G - u, x) + x * I(G - N[u], x)

pivoting on a maximum-degree vertex, with ties broken by smallest canonical
position.
"""
from __future__ import annotations

import base64
import json
import logging
import os
from typing import Optional

from .canon import connected_canonical_form
from .graphs import (
    Graph,
    component_vertex_sets,
    delete_closed_neighborhood,
    delete_edge_closure,
    delete_vertex,
)
from .intpoly import ONE, IntPoly, X

log = logging.getLogger(__name__)

BRUTE_FORCE_MAX_VERTICES = 30


def indpoly_bruteforce(g: Graph) -> IntPoly:
    """I(G, x) by enumerating all 2^|V| vertex subsets as bitmasks."""
    n = g.n
    if n > BRUTE_FORCE_MAX_VERTICES:
        raise ValueError(
            f"brute force refuses graphs with more than "
            f"{BRUTE_FORCE_MAX_VERTICES} vertices (got {n})"
        )
    adj = g.adjacency_masks()
    coeffs = [0] * (n + 1)
    if n <= 22:
        # DP over masks: a set is independent iff dropping its lowest vertex
        # leaves an independent set with no neighbor of that vertex.
        indep = bytearray(1 << n)
        indep[0] = 1
        coeffs[0] = 1
        for mask in range(1, 1 << n):
            low = mask & -mask
            v = low.bit_length() - 1
            if indep[mask ^ low] and not adj[v] & mask:
                indep[mask] = 1
                coeffs[mask.bit_count()] += 1
    else:
        coeffs[0] = 1
        for mask in range(1, 1 << n):
            m = mask
            while m:
                low = m & -m
                if adj[low.bit_length() - 1] & mask:
                    break
                m ^= low
            else:
                coeffs[mask.bit_count()] += 1
    return IntPoly(coeffs)


class PolyCache:
    """Canonical-key -> polynomial memo with hit/miss statistics.

    Persists as JSON lines {"key": <base64>, "coeffs": [<decimal>, ...]};
    corrupt lines are skipped with a warning, never trusted.
    """

    def __init__(self):
        self._entries: dict[bytes, IntPoly] = {}
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, key: bytes) -> Optional[IntPoly]:
        p = self._entries.get(key)
        if p is None:
            self.misses += 1
        else:
            self.hits += 1
        return p

    def put(self, key: bytes, poly: IntPoly):
        self._entries.setdefault(key, poly)

    def stats(self) -> dict[str, int]:
        return {"hits": self.hits, "misses": self.misses, "entries": len(self)}

    def save(self, path: str):
        tmp = f"{path}.tmp.{os.getpid()}"
        with open(tmp, "w") as fh:
            for key in sorted(self._entries):
                record = {
                    "key": base64.b64encode(key).decode("ascii"),
                    "coeffs": [str(c) for c in self._entries[key].coeffs],
                }
                fh.write(json.dumps(record, sort_keys=True) + "\n")
        os.replace(tmp, path)

    @classmethod
    def load(cls, path: str) -> "PolyCache":
        cache = cls()
        with open(path) as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    record = json.loads(line)
                    key = base64.b64decode(record["key"], validate=True)
                    poly = IntPoly(int(c) for c in record["coeffs"])
                except (ValueError, KeyError, TypeError) as exc:
                    log.warning("%s:%d: skipping corrupt cache line (%s)", path, lineno, exc)
                    continue
                if poly[0] != 1:
                    log.warning(
                        "%s:%d: skipping cache entry with constant term %d",
                        path, lineno, poly[0],
                    )
                    continue
                cache._entries[key] = poly
        return cache


def indpoly(g: Graph, cache: Optional[PolyCache] = None) -> IntPoly:
    """Exact I(G, x) via component splitting and memoized deletion recursion."""
    if cache is None:
        cache = PolyCache()
    out = ONE
    for vs in component_vertex_sets(g):
        out = out * _component_poly(g.subgraph(vs), cache)
    return out


def _component_poly(g: Graph, cache: PolyCache) -> IntPoly:
    n = g.n
    if n == 0:
        return ONE
    if n == 1:
        return IntPoly([1, 1])
    key, order = connected_canonical_form(g)
    hit = cache.get(key)
    if hit is not None:
        return hit
    pivot = order[0]  # max degree, smallest canonical position
    without = indpoly(delete_vertex(g, pivot), cache)
    closed = indpoly(delete_closed_neighborhood(g, pivot), cache)
    poly = without + X * closed
    cache.put(key, poly)
    return poly


def indpoly_edge_rule_check(g: Graph, e: tuple[int, int],
                            cache: Optional[PolyCache] = None) -> bool:
    """Recompute I(G, x) through the edge-deletion identity

        I(G, x) = I(G - e, x) - x^2 * I(G - (N(u) ∪ N(v)), x)

    and report whether it matches the vertex-deletion route.
    """
    if cache is None:
        cache = PolyCache()
    g_minus_e, g_closure = delete_edge_closure(g, e)
    via_edge = indpoly(g_minus_e, cache) - (X * X) * indpoly(g_closure, cache)
    return via_edge == indpoly(g, cache)


def independence_number(g: Graph, cache: Optional[PolyCache] = None) -> int:
    """The independence number, read off as deg I(G, x)."""
    return indpoly(g, cache).degree
