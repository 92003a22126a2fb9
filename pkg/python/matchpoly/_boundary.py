'''
Partial generating-function tables of boundary graphs.

A table maps each aligned matching F of (G, X) (every edge meets X, and F
extends to a perfect matching of G - (X - V(F))) to

    P_F = prod(p(e) for e in F) * GenPM(G - V(F) - X, p).
'''
import logging
from dataclasses import dataclass, field

from ._common import (LabelMismatch, NotAMatching, NotPlanar, OverlapViolated, PreconditionViolated, TooLarge,
                      WorkCounter, invoker, process_options)
from ._graph import Graph, as_matching, genpm_bruteforce, has_perfect_matching, matched_vertices, weight_labels
from ._pfaffian import genpm_planar, genpm_surface
from ._poly import ONE, ZERO, format_polyfrac

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BoundaryGraph:
    '''A labelled graph with a designated boundary vertex set.'''
    graph: Graph
    boundary: frozenset = frozenset()
    labels: dict = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, 'boundary', frozenset(self.boundary))
        labels = weight_labels(self.graph) if self.labels is None else dict(self.labels)
        object.__setattr__(self, 'labels', {e: labels[e] for e in self.graph.edges if e in labels})
        if not self.boundary <= set(self.graph.vertices):
            raise PreconditionViolated('boundary', f'boundary vertices {sorted(self.boundary - set(self.graph.vertices))} '
                                                   f'are not vertices of the graph')
        missing = [e for e in self.graph.edges if e not in self.labels]
        if missing:
            raise PreconditionViolated('labels', f'edge {missing[0]} has no label')

    def product(self, edges):
        result = ONE
        for e in edges:
            result = result * self.labels[e]
        return result


def _touching_matchings(g, touch, cover=(), counter=None):
    '''
    Every matching of ``g`` whose edges each meet ``touch`` and which covers
    ``cover`` (a subset of ``touch``), as canonical tuples.
    '''
    present = set(g.vertices)
    cover = set(cover)
    if not cover <= present:
        return
    order = sorted(set(touch) & present)
    used = set()
    skipped = set()
    chosen = []

    def extend(i):
        while i < len(order) and order[i] in used:
            i += 1
        if i == len(order):
            if counter is not None:
                counter.tick()
            yield tuple(sorted(chosen))
            return
        v = order[i]
        if v not in cover:
            skipped.add(v)
            yield from extend(i + 1)
            skipped.discard(v)
        used.add(v)
        for u in g.neighbors(v):
            if u in used or u in skipped:
                continue
            used.add(u)
            chosen.append((v, u) if v < u else (u, v))
            yield from extend(i + 1)
            chosen.pop()
            used.discard(u)
        used.discard(v)

    yield from extend(0)


def _meets(edge, vertices):
    return edge[0] in vertices or edge[1] in vertices


def aligned_matchings(b, options=None):
    '''Aligned(G, X) in canonical order.'''
    options = process_options(options)
    counter = WorkCounter(options['work_limit'], 'aligned_matchings')
    g, x = b.graph, b.boundary
    result = [f for f in _touching_matchings(g, x, (), counter)
              if has_perfect_matching(g.delete_vertices(x | matched_vertices(f)))]
    return sorted(result)


def _genpm_within_reach(g, labels, options):
    if g.vertex_count <= options['oracle_cap']:
        return genpm_bruteforce(g, labels, options)
    try:
        return genpm_planar(g, labels)
    except NotPlanar as e:
        raise TooLarge(f'{invoker}: a residual graph with {g.vertex_count} vertices is above the oracle cap '
                       f'and not planar') from e


def table_of(b, options=None):
    '''The table of ``b`` by direct evaluation of every entry.'''
    options = process_options(options)
    table = {}
    for f in aligned_matchings(b, options):
        residual = b.graph.delete_vertices(b.boundary | matched_vertices(f))
        table[f] = b.product(f) * _genpm_within_reach(residual, b.labels, options)
    return table


def _check_labels_agree(inner, outer, clause):
    for e, label in inner.labels.items():
        if e in outer.labels and outer.labels[e] != label:
            raise LabelMismatch(clause, f'edge {e} is labelled {label} and {outer.labels[e]}')


def table_small_bag(child, host, z, options=None):
    '''
    The table of ``host`` = (G, X) from the table of a boundary subgraph
    (H, Y) with G - Z = H - Y, by enumerating the matchings F whose edges meet
    Z and which cover Z - X. F splits into F2 (edges of H), looked up in the
    child table, and the remaining edges inside Z; the sum is bucketed by the
    edges of F meeting X.
    '''
    options = process_options(options)
    (h, child_table) = child
    g, x = host.graph, host.boundary
    z = frozenset(z)
    if not x <= z:
        raise PreconditionViolated('boundary-in-bag', f'host boundary vertices {sorted(x - z)} are outside Z')
    if not h.boundary <= z:
        raise PreconditionViolated('child-boundary-in-bag', f'child boundary vertices {sorted(h.boundary - z)} are outside Z')
    if not z <= set(g.vertices):
        raise PreconditionViolated('bag-in-graph', f'vertices {sorted(z - set(g.vertices))} of Z are not in G')
    inner = set(h.graph.vertices) - h.boundary
    if inner != set(g.vertices) - z:
        raise PreconditionViolated('outside-bag', 'G - Z and H - Y have different vertex sets')
    for u, v in h.graph.edges:
        if not g.has_edge(u, v):
            raise PreconditionViolated('boundary-subgraph', f'edge {(u, v)} of H is not an edge of G')
    for e in g.edges:
        if _meets(e, inner) and not h.graph.has_edge(*e):
            raise PreconditionViolated('boundary-subgraph', f'edge {e} of G joins H - Y to G - H')
    _check_labels_agree(h, host, 'labels')

    counter = WorkCounter(options['work_limit'], 'table_small_bag')
    h_edges = set(h.graph.edges)
    table = {}
    for f in _touching_matchings(g, z, z - x, counter):
        f2 = tuple(e for e in f if e in h_edges)
        child_value = child_table.get(f2)
        if child_value is None:
            continue
        value = child_value * host.product(e for e in f if e not in h_edges)
        key = tuple(e for e in f if _meets(e, x))
        table[key] = table.get(key, ZERO) + value
    logger.debug('small bag |Z|=%d: %d entries', len(z), len(table))
    return dict(sorted(table.items()))


def table_genus_apex(b, apex, genus_budget=0, options=None):
    '''
    The table of ``b`` = (G, X) when G - A has bounded genus: enumerate the
    matchings F whose edges meet A or X and which cover A - X, and add
    prod(p(F)) * GenPM(G - V(F) - X) to the bucket of the edges of F meeting X.
    '''
    options = process_options(options)
    g, x = b.graph, b.boundary
    apex = frozenset(apex)
    if not apex <= set(g.vertices):
        raise PreconditionViolated('apex-in-graph', f'apex vertices {sorted(apex - set(g.vertices))} are not in G')
    if len(apex) > options['k'] or len(x) > options['k']:
        raise PreconditionViolated('size', f'|A| = {len(apex)} and |X| = {len(x)} must be at most k = {options["k"]}')

    counter = WorkCounter(options['work_limit'], 'table_genus_apex')
    table = {}
    for f in _touching_matchings(g, apex | x, apex - x, counter):
        residual = g.delete_vertices(x | matched_vertices(f))
        value = genpm_surface(residual, b.labels, genus_budget, options=options)
        key = tuple(e for e in f if _meets(e, x))
        if value:
            table[key] = table.get(key, ZERO) + b.product(f) * value
        elif key not in table and has_perfect_matching(residual):
            table[key] = ZERO
    logger.debug('genus/apex table |A|=%d |X|=%d: %d entries', len(apex), len(x), len(table))
    return dict(sorted(table.items()))


def pad_boundary(b, table, extra):
    '''
    Add ``extra`` as isolated boundary vertices. Isolated boundary vertices are
    never matched, so the table is unchanged.
    '''
    extra = frozenset(extra) - b.boundary
    if extra & set(b.graph.vertices):
        raise PreconditionViolated('padding', f'vertices {sorted(extra & set(b.graph.vertices))} are already inner vertices')
    return BoundaryGraph(b.graph.add_vertices(extra), b.boundary | extra, b.labels), dict(table)


def merge_tables(left, right, options=None):
    '''
    The table of (H1 u H2, X1 n X2) from the tables of (H1, X1) and (H2, X2),
    where V(H1) n V(H2) lies in X1 n X2.

    Each side's entries are bucketed by their edges meeting X with the product
    of those labels divided out; every pair of compatible buckets T1, T2 gives
    the entry of F = T1 u T2 as prod(p(F)) * bucket1 * bucket2.
    '''
    (b1, table1), (b2, table2) = left, right
    x = b1.boundary & b2.boundary
    shared = set(b1.graph.vertices) & set(b2.graph.vertices)
    if not shared <= x:
        raise OverlapViolated('overlap', f'shared vertices {sorted(shared - x)} are not boundary vertices of both sides')
    _check_labels_agree(b1, b2, 'labels')
    shared_edges = set(b1.graph.edges) & set(b2.graph.edges)
    labels = dict(b1.labels)
    labels.update(b2.labels)
    merged = BoundaryGraph(b1.graph.union(b2.graph), x, labels)

    def buckets(b, table):
        result = {}
        for f, value in table.items():
            if not b.boundary - x <= matched_vertices(f):
                continue
            t = tuple(e for e in f if _meets(e, x))
            divisor = b.product(t)
            if not divisor:
                result.setdefault(t, None)
            elif result.get(t, ZERO) is not None:
                result[t] = result.get(t, ZERO) + value / divisor
        return result

    buckets1, buckets2 = buckets(b1, table1), buckets(b2, table2)
    table = {}
    for t1, s1 in buckets1.items():
        for t2, s2 in buckets2.items():
            if any((e in t1) != (e in t2) for e in shared_edges):
                continue
            try:
                f = as_matching(set(t1) | set(t2))
            except NotAMatching:
                continue
            if s1 is None or s2 is None:
                value = ZERO
            else:
                value = merged.product(f) * s1 * s2
            table[f] = table.get(f, ZERO) + value
    logger.debug('merged tables of sizes %d and %d into %d entries', len(table1), len(table2), len(table))
    return merged, dict(sorted(table.items()))


def dump_table(table):
    '''One ``F=[(u,v),...] -> <polyfrac>`` line per entry, sorted by key.'''
    lines = []
    for f, value in sorted(table.items()):
        edges = ','.join(f'({u},{v})' for u, v in f)
        lines.append(f'F=[{edges}] -> {format_polyfrac(value)}')
    return '\n'.join(lines)
