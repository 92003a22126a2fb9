'''
Deterministic graph families: shallow vortex grids, cylindrical grids and
their ring blowups, the Q_{s,r} graphs, and seeded random planar and
apex-planar graphs for test corpora.

All generators return graphs on 0..n-1 with unit weights. Duplicate edges and
self-loops that arise for small orders are dropped.
'''
import logging
from dataclasses import dataclass

import numpy as np

from ._common import InvalidDrawing, NotPlanarEmbedding, invoker
from ._graph import Graph, edge_key
from ._planar import RotationSystem, check_embedding, face_vertices, faces, planar_embed

logger = logging.getLogger(__name__)


def _simple_graph(n, edges, weights=None):
    result = {}
    for u, v in edges:
        if u != v:
            result.setdefault(edge_key(u, v), 1)
    if weights is not None:
        result = {e: weights.get(e, w) for e, w in result.items()}
    return Graph(n, result)


def _check_order(name, value, least):
    if not isinstance(value, (int, np.integer)) or value < least:
        raise ValueError(f'{invoker}: {name} must be an integer of at least {least}, not {value!r}')


def shallow_vortex_grid(k):
    '''
    k concentric cycles of length 2k (vertex i of cycle j is (j - 1) * 2k + i - 1),
    radial edges between consecutive cycles, and the chords joining vertex i of
    the first cycle to vertex i + 2 (mod 2k).
    '''
    _check_order('k', k, 1)
    length = 2 * k

    def c(j, i):
        return (j - 1) * length + (i - 1) % length

    edges = []
    for j in range(1, k + 1):
        for i in range(1, length + 1):
            edges.append((c(j, i), c(j, i + 1)))
            if j < k:
                edges.append((c(j, i), c(j + 1, i)))
    edges.extend((c(1, i), c(1, i + 2)) for i in range(1, length + 1))
    return _simple_graph(k * length, edges)


def segregated_shallow_vortex_grid(k):
    '''
    k concentric cycles of length 4k with radial edges, and for every group i
    the crossing pair of chords 4(i-1)+1 to 4(i-1)+3 and 4(i-1)+2 to 4(i-1)+4
    on the first cycle.
    '''
    _check_order('k', k, 1)
    length = 4 * k

    def c(j, i):
        return (j - 1) * length + (i - 1) % length

    edges = []
    for j in range(1, k + 1):
        for i in range(1, length + 1):
            edges.append((c(j, i), c(j, i + 1)))
            if j < k:
                edges.append((c(j, i), c(j + 1, i)))
    for i in range(1, k + 1):
        base = 4 * (i - 1)
        edges.append((c(1, base + 1), c(1, base + 3)))
        edges.append((c(1, base + 2), c(1, base + 4)))
    return _simple_graph(k * length, edges)


def cylindrical_grid(t, s):
    '''t concentric cycles of length s (vertex i of cycle j is j * s + i) joined by radial edges.'''
    _check_order('t', t, 1)
    _check_order('s', s, 3)
    edges = []
    for j in range(t):
        for i in range(s):
            edges.append((j * s + i, j * s + (i + 1) % s))
            if j + 1 < t:
                edges.append((j * s + i, (j + 1) * s + i))
    return _simple_graph(t * s, edges)


def cylindrical_grid_rotation(t, s):
    '''The concentric drawing with cycle 0 outermost, as clockwise neighbour lists.'''
    rotation = {}
    for j in range(t):
        for i in range(s):
            around = [(j - 1) * s + i if j > 0 else None, j * s + (i - 1) % s,
                      (j + 1) * s + i if j + 1 < t else None, j * s + (i + 1) % s]
            rotation[j * s + i] = [v for v in around if v is not None]
    return RotationSystem(rotation)


def grid(n, m):
    '''The n x m grid; vertex (i, j) is i * m + j.'''
    _check_order('n', n, 0)
    _check_order('m', m, 0)
    edges = []
    for i in range(n):
        for j in range(m):
            if j + 1 < m:
                edges.append((i * m + j, i * m + j + 1))
            if i + 1 < n:
                edges.append((i * m + j, (i + 1) * m + j))
    return _simple_graph(n * m, edges)


def grid_rotation(n, m):
    rotation = {}
    for i in range(n):
        for j in range(m):
            around = [((i - 1), j), (i, j + 1), (i + 1, j), (i, j - 1)]
            rotation[i * m + j] = [a * m + b for a, b in around if 0 <= a < n and 0 <= b < m]
    return RotationSystem(rotation)


def complete(n):
    _check_order('n', n, 0)
    return _simple_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a, b):
    '''Sides 0..a-1 and a..a+b-1.'''
    _check_order('a', a, 0)
    _check_order('b', b, 0)
    return _simple_graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def q_graph(s, r):
    '''
    The s x (s*r) grid, whose first row is the boundary path x_1..x_{sr},
    plus terminal twins t_i, t'_i (vertices s*s*r + 2(i-1) and the next one)
    both adjacent to the i-th block x_{(i-1)s+1}..x_{is} of the first row.
    '''
    _check_order('s', s, 1)
    _check_order('r', r, 1)
    base = grid(s, s * r)
    edges = list(base.edges)
    first = s * s * r
    for i in range(r):
        for terminal in (first + 2 * i, first + 2 * i + 1):
            edges.extend((terminal, x) for x in range(i * s, (i + 1) * s))
    return _simple_graph(first + 2 * r, edges)


@dataclass(frozen=True, eq=False)
class DiskDrawing:
    '''A plane graph with a designated external face, given by its vertices in walk order.'''
    graph: Graph
    rotation: RotationSystem
    external_face: tuple

    def __post_init__(self):
        try:
            check_embedding(self.graph, self.rotation)
        except NotPlanarEmbedding as e:
            raise InvalidDrawing(f'{invoker}: {e}') from e
        walk = tuple(self.external_face)
        object.__setattr__(self, 'external_face', walk)
        if not any(_same_cycle(walk, face_vertices(face)) for face in faces(self.rotation)):
            raise InvalidDrawing(f'{invoker}: {list(walk)} is not a face of the drawing')

    @property
    def external_vertices(self):
        return tuple(sorted(set(self.external_face)))


def _same_cycle(walk, face):
    if len(walk) != len(face):
        return False
    if not walk:
        return True
    doubled = face + face
    reverse = tuple(reversed(face))
    doubled_reverse = reverse + reverse
    n = len(walk)
    return any(doubled[i:i + n] == walk or doubled_reverse[i:i + n] == walk for i in range(n))


def disk_drawing(g, rotation=None, external_face=None):
    '''
    A DiskDrawing of ``g``; the rotation defaults to a computed planar
    embedding and the external face to its longest face.
    '''
    if rotation is None:
        rotation = planar_embed(g)
        if rotation is None:
            raise InvalidDrawing(f'{invoker}: the graph is not planar')
    if external_face is None:
        face_list = faces(rotation)
        if not face_list:
            raise InvalidDrawing(f'{invoker}: a drawing without edges has no external face walk')
        external_face = face_vertices(max(face_list, key=len))
    return DiskDrawing(g, rotation, tuple(external_face))


def cylindrical_drawing(t, s):
    '''The cylindrical grid with its concentric drawing; the external face is cycle 0.'''
    return DiskDrawing(cylindrical_grid(t, s), cylindrical_grid_rotation(t, s), tuple(range(s)))


def ring_blowup(d):
    '''
    Add a vertex v_u for every vertex u of the external face Q, adjacent to u,
    to every neighbour of u, and to v_w for every neighbour w of u in Q.
    The v_u are numbered from n on in the order of the vertices of Q.
    '''
    g = d.graph
    q = d.external_vertices
    if not g.is_dense():
        raise InvalidDrawing(f'{invoker}: ring blowups need a graph on the vertices 0..n-1')
    n = g.vertex_count
    copy = {u: n + i for i, u in enumerate(q)}
    edges = list(g.edges)
    for u in q:
        edges.append((u, copy[u]))
        for w in g.neighbors(u):
            edges.append((w, copy[u]))
            if w in copy:
                edges.append((copy[u], copy[w]))
    logger.debug('ring blowup of %d vertices along a face of %d vertices', n, len(q))
    return _simple_graph(n + len(q), edges, g.weights)


def cylindrical_grid_ring_blowup(t, s):
    return ring_blowup(cylindrical_drawing(t, s))


def random_planar_embedded(n, seed=None, keep=0.7, weight_range=None):
    '''
    A random planar graph on n vertices with its embedding: a stacked
    triangulation grown by inserting every new vertex into a random face,
    after which each edge is kept with probability ``keep``. ``weight_range``
    (lo, hi) draws integer weights uniformly; weights are 1 otherwise.
    '''
    _check_order('n', n, 0)
    rng = np.random.default_rng(seed)
    if n < 3:
        g = complete(n)
        rotation = RotationSystem({v: list(g.neighbors(v)) for v in g.vertices})
    else:
        # faces as oriented vertex triples; (0, 1, 2) and its reverse bound the two sides
        face_list = [(0, 1, 2), (0, 2, 1)]
        for v in range(3, n):
            a, b, c = face_list.pop(int(rng.integers(len(face_list))))
            face_list.extend([(a, b, v), (b, c, v), (c, a, v)])
        successor = {v: {} for v in range(n)}
        for x0, x1, x2 in face_list:
            successor[x1][x0] = x2
            successor[x2][x1] = x0
            successor[x0][x2] = x1
        rotation = {}
        for v in range(n):
            start = min(successor[v])
            order, u = [start], successor[v][start]
            while u != start:
                order.append(u)
                u = successor[v][u]
            rotation[v] = order
        edges = sorted({edge_key(v, u) for v, nbrs in rotation.items() for u in nbrs})
        kept = {e for e in edges if rng.random() < keep}
        rotation = RotationSystem({v: [u for u in nbrs if edge_key(v, u) in kept] for v, nbrs in rotation.items()})
        g = Graph(n, sorted(kept))
    if weight_range is not None:
        lo, hi = weight_range
        g = Graph(n, {e: int(rng.integers(lo, hi + 1)) for e in g.edges})
    return g, rotation


def random_planar(n, seed=None, keep=0.7, weight_range=None):
    return random_planar_embedded(n, seed, keep, weight_range)[0]


def random_apex_planar(n, apexes, seed=None, keep=0.7, weight_range=None):
    '''
    A random planar graph on n - apexes vertices plus ``apexes`` vertices
    (numbered last) joined to a random nonempty set of the others.
    '''
    _check_order('apexes', apexes, 0)
    if apexes >= n:
        raise ValueError(f'{invoker}: cannot have {apexes} apex vertices among {n}; the planar part needs a vertex')
    rng = np.random.default_rng(seed)
    base = random_planar(n - apexes, int(rng.integers(2**32)), keep, weight_range)
    edges = dict(base.weights)
    lo, hi = weight_range if weight_range is not None else (1, 1)
    for a in range(n - apexes, n):
        others = [v for v in range(a) if rng.random() < 0.5]
        if not others:
            others = [int(rng.integers(a))]
        for v in others:
            edges[edge_key(a, v)] = int(rng.integers(lo, hi + 1))
    return Graph(n, edges)
