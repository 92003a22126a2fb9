import json
import logging
from collections.abc import Mapping
from functools import lru_cache

import networkx as nx
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components as _connected_components

from ._common import FormatError, NotAMatching, TooLarge, invoker, process_options
from ._poly import ONE, ZERO, monomial

logger = logging.getLogger(__name__)


def edge_key(u, v):
    '''The identity of the undirected edge uv: its sorted endpoint pair.'''
    return (u, v) if u < v else (v, u)


class Graph:
    '''
    A finite simple graph with integer edge weights.

    Graphs read from files or built by the generators use the dense vertex set
    0..n-1. Subgraphs keep the labels of their host, so ``vertices`` is in
    general any set of integers.
    '''
    __slots__ = ('_vertices', '_weights', '_adjacency')

    def __init__(self, vertex_count=0, edges=(), *, vertices=None):
        '''
        ``edges`` is an iterable of ``(u, v)`` or ``(u, v, w)`` triples, or a
        mapping from ``(u, v)`` to the weight. Missing weights default to 1.
        '''
        if vertices is None:
            if vertex_count < 0:
                raise FormatError(f'{invoker}: the vertex count must be nonnegative, not {vertex_count}')
            vertices = range(vertex_count)
        self._vertices = tuple(sorted({int(v) for v in vertices}))
        present = set(self._vertices)
        if isinstance(edges, Mapping):
            edges = [(u, v, w) for (u, v), w in edges.items()]
        weights = {}
        for edge in edges:
            if len(edge) == 2:
                (u, v), w = edge, 1
            elif len(edge) == 3:
                u, v, w = edge
            else:
                raise FormatError(f'{invoker}: an edge must be [u, v] or [u, v, w], not {list(edge)}')
            u, v, w = int(u), int(v), int(w)
            if u == v:
                raise FormatError(f'{invoker}: self-loop at vertex {u}')
            if u not in present or v not in present:
                raise FormatError(f'{invoker}: edge ({u}, {v}) has an endpoint that is not a vertex')
            key = edge_key(u, v)
            if key in weights:
                raise FormatError(f'{invoker}: parallel edge ({key[0]}, {key[1]})')
            weights[key] = w
        self._weights = dict(sorted(weights.items()))
        adjacency = {v: [] for v in self._vertices}
        for u, v in self._weights:
            adjacency[u].append(v)
            adjacency[v].append(u)
        self._adjacency = {v: tuple(sorted(nbrs)) for v, nbrs in adjacency.items()}

    @property
    def vertices(self):
        return self._vertices

    @property
    def vertex_count(self):
        return len(self._vertices)

    @property
    def edges(self):
        return tuple(self._weights)

    @property
    def edge_count(self):
        return len(self._weights)

    @property
    def weights(self):
        return dict(self._weights)

    def weight(self, u, v):
        return self._weights[edge_key(u, v)]

    def has_vertex(self, v):
        return v in self._adjacency

    def has_edge(self, u, v):
        return edge_key(u, v) in self._weights

    def neighbors(self, v):
        return self._adjacency[v]

    def degree(self, v):
        return len(self._adjacency[v])

    def is_dense(self):
        return self._vertices == tuple(range(len(self._vertices)))

    def induced_subgraph(self, vertices):
        keep = set(vertices) & set(self._vertices)
        edges = {e: w for e, w in self._weights.items() if e[0] in keep and e[1] in keep}
        return Graph(vertices=keep, edges=edges)

    def delete_vertices(self, vertices):
        drop = set(vertices)
        return self.induced_subgraph(v for v in self._vertices if v not in drop)

    def delete_edges(self, edges):
        drop = {edge_key(*e[:2]) for e in edges}
        return Graph(vertices=self._vertices, edges={e: w for e, w in self._weights.items() if e not in drop})

    def add_vertices(self, vertices):
        return Graph(vertices=set(self._vertices) | set(vertices), edges=self._weights)

    def union(self, other):
        '''Vertex and edge union; shared edges must carry the same weight.'''
        edges = dict(self._weights)
        for e, w in other._weights.items():
            if e in edges and edges[e] != w:
                raise FormatError(f'{invoker}: edge {e} carries weights {edges[e]} and {w}')
            edges[e] = w
        return Graph(vertices=set(self._vertices) | set(other._vertices), edges=edges)

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(self._vertices)
        g.add_edges_from(self._weights)
        return g

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._weights == other._weights

    def __hash__(self):
        return hash((self._vertices, tuple(self._weights.items())))

    def __repr__(self):
        return f'Graph(vertices={list(self._vertices)}, edges={[(u, v, w) for (u, v), w in self._weights.items()]})'


def weight_labels(g, weights=None):
    '''The labels x**w(e); ``weights`` overrides the graph's own weights where given.'''
    weights = {} if weights is None else {edge_key(*e): w for e, w in weights.items()}
    return {e: monomial(weights.get(e, w)) for e, w in g.weights.items()}


def as_matching(edges, g=None):
    '''
    The canonical form of a matching: a sorted tuple of sorted endpoint pairs.
    Raises NotAMatching if two edges share a vertex or, when ``g`` is given, an
    edge is missing from ``g``.
    '''
    result = sorted(edge_key(*e[:2]) for e in edges)
    seen = set()
    for u, v in result:
        if u in seen or v in seen:
            raise NotAMatching(f'{invoker}: edges of a matching must be pairwise disjoint; vertex '
                               f'{u if u in seen else v} is covered twice')
        seen.update((u, v))
        if g is not None and not g.has_edge(u, v):
            raise NotAMatching(f'{invoker}: ({u}, {v}) is not an edge of the graph')
    return tuple(result)


def matched_vertices(m):
    return {v for e in m for v in e}


def max_matching(g):
    '''A maximum-cardinality matching, by the blossom algorithm of networkx.'''
    if not g.edge_count:
        return ()
    return as_matching(nx.max_weight_matching(g.to_networkx(), maxcardinality=True))


def has_perfect_matching(g):
    n = g.vertex_count
    if n % 2:
        return False
    if n == 0:
        return True
    if any(not g.degree(v) for v in g.vertices):
        return False
    return 2 * len(max_matching(g)) == n


def is_extendable(g, f):
    '''True iff the matching ``f`` extends to a perfect matching of ``g``.'''
    f = as_matching(f, g)
    return has_perfect_matching(g.delete_vertices(matched_vertices(f)))


def connected_components(g):
    '''The vertex sets of the connected components, ordered by smallest vertex.'''
    n = g.vertex_count
    if n == 0:
        return []
    index = {v: i for i, v in enumerate(g.vertices)}
    rows = np.array([index[u] for u, _ in g.edges], dtype=np.int64)
    cols = np.array([index[v] for _, v in g.edges], dtype=np.int64)
    adjacency = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    count, labels = _connected_components(adjacency, directed=False)
    components = [[] for _ in range(count)]
    for v, label in zip(g.vertices, labels):
        components[label].append(v)
    return sorted((tuple(c) for c in components), key=lambda c: c[0])


def _check_cap(g, cap, operation):
    if g.vertex_count > cap:
        raise TooLarge(f'{invoker}: {operation} is limited to {cap} vertices by the oracle cap, '
                       f'the graph has {g.vertex_count}')


def enumerate_perfect_matchings(g, options=None):
    '''Every perfect matching of ``g`` once, in lexicographic order of the sorted edge lists.'''
    options = process_options(options)
    _check_cap(g, options['oracle_cap'], 'enumerate_perfect_matchings')
    result = []
    if g.vertex_count % 2:
        return result
    free = set(g.vertices)
    chosen = []

    def extend():
        if not free:
            result.append(tuple(chosen))
            return
        v = min(free)
        free.discard(v)
        for u in g.neighbors(v):
            if u in free:
                free.discard(u)
                chosen.append(edge_key(v, u))
                extend()
                chosen.pop()
                free.add(u)
        free.add(v)

    extend()
    return result


def genpm_bruteforce(g, labels=None, options=None):
    '''
    The generating function of all perfect matchings, summed by the exhaustive
    oracle. ``labels`` maps every edge to a PolyFrac; it defaults to the weight
    labels x**w(e).
    '''
    options = process_options(options)
    _check_cap(g, options['oracle_cap'], 'genpm_bruteforce')
    labels = weight_labels(g) if labels is None else labels
    n = g.vertex_count
    if n % 2:
        return ZERO
    index = {v: i for i, v in enumerate(g.vertices)}
    neighbors = [[(index[u], labels[edge_key(v, u)]) for u in g.neighbors(v)] for v in g.vertices]

    @lru_cache(maxsize=None)
    def genpm(remaining):
        if not remaining:
            return ONE
        i = (remaining & -remaining).bit_length() - 1
        rest = remaining & ~(1 << i)
        total = ZERO
        for j, label in neighbors[i]:
            if rest >> j & 1:
                sub = genpm(rest & ~(1 << j))
                if sub:
                    total = total + label * sub
        return total

    return genpm((1 << n) - 1)


def read_graph(text):
    '''Parse the JSON graph document ``{"n": ..., "edges": [[u, v, w], ...]}``.'''
    document = _load_json(text)
    if not isinstance(document, dict) or 'n' not in document:
        raise FormatError(f"{invoker}: a graph document must be an object with an 'n' field")
    n = document['n']
    if not isinstance(n, int) or isinstance(n, bool):
        raise FormatError(f"{invoker}: 'n' must be an integer, not {n!r}")
    edges = document.get('edges', [])
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise FormatError(f"{invoker}: 'edges' must be an array of [u, v] or [u, v, w] arrays")
    for e in edges:
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in e):
            raise FormatError(f'{invoker}: edge {e} must contain integers only')
    return Graph(n, edges)


def graph_document(g):
    if not g.is_dense():
        raise FormatError(f'{invoker}: only graphs on the vertices 0..n-1 can be written')
    return {'n': g.vertex_count, 'edges': [[u, v, w] for (u, v), w in g.weights.items()]}


def write_graph(g, rotation=None):
    '''The JSON graph document; ``rotation`` adds the clockwise neighbour lists.'''
    document = graph_document(g)
    if rotation is not None:
        document['rotation'] = {str(v): list(nbrs) for v, nbrs in sorted(rotation.items())}
    return json.dumps(document)


def _load_json(text):
    if isinstance(text, (dict, list)):
        return text
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f'{invoker}: invalid JSON: {e}') from e


def warn_on_weights(g, weights=None):
    '''Log a warning when a weight exceeds |G|^2 in magnitude; results stay exact regardless.'''
    n = g.vertex_count
    values = g.weights
    if weights is not None:
        values.update({edge_key(*e): w for e, w in weights.items()})
    large = [e for e, w in values.items() if abs(w) > n * n]
    if large:
        logger.warning('%d edge weights exceed |G|^2 = %d in magnitude, e.g. edge %s', len(large), n * n, large[0])
    return bool(large)
