'''
Kasteleyn orientations and the Pfaffian generating-function kernel.

For a Pfaffian orientation every perfect matching M contributes to Pf(A) with
the same sign s(o, M), so the generating function is s(o, M0) * Pf(A) for any
one perfect matching M0.
'''
import logging

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order
from sympy.combinatorics import Permutation

from ._common import (NotPerfect, NotPlanar, NotPlanarEmbedding, NotSkewSymmetric, TooLargeForFallback, invoker,
                      process_options)
from ._graph import (connected_components, edge_key, genpm_bruteforce, matched_vertices, max_matching,
                     weight_labels)
from ._planar import check_embedding, faces, planar_embed
from ._poly import ONE, ZERO, PolyFrac

logger = logging.getLogger(__name__)


class Orientation:
    '''A direction (tail, head) for every edge of a host graph.'''
    __slots__ = ('direction', 'vertices')

    def __init__(self, direction, vertices=None):
        self.direction = {edge_key(*e): tuple(d) for e, d in direction.items()}
        for e, (a, b) in self.direction.items():
            if edge_key(a, b) != e:
                raise ValueError(f'{invoker}: direction {(a, b)} does not match edge {e}')
        if vertices is None:
            vertices = {v for e in self.direction for v in e}
        self.vertices = tuple(sorted(vertices))

    def sign(self, u, v):
        '''+1 if the edge uv is directed from u to v, -1 otherwise.'''
        return 1 if self.direction[edge_key(u, v)] == (u, v) else -1

    def __repr__(self):
        return f'Orientation({self.direction})'


class SkewMatrix:
    '''
    A skew-symmetric matrix of PolyFrac entries. ``order`` lists the vertex
    behind each row when the matrix is built from a graph.
    '''
    __slots__ = ('entries', 'order')

    def __init__(self, entries, order=None):
        rows = [[PolyFrac.constant(a) for a in row] for row in entries]
        n = len(rows)
        self.entries = np.empty((n, n), dtype=object)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise NotSkewSymmetric(f'{invoker}: the matrix must be square')
            for j, a in enumerate(row):
                self.entries[i, j] = a
        self.order = tuple(range(n)) if order is None else tuple(order)

    @property
    def size(self):
        return self.entries.shape[0]

    def check(self):
        n = self.size
        for i in range(n):
            if self.entries[i, i]:
                raise NotSkewSymmetric(f'{invoker}: diagonal entry ({i}, {i}) is not zero')
            for j in range(i + 1, n):
                if self.entries[i, j] != -self.entries[j, i]:
                    raise NotSkewSymmetric(f'{invoker}: entries ({i}, {j}) and ({j}, {i}) are not opposite')


def _orient_component(g, r, direction):
    vertices = g.vertices
    index = {v: i for i, v in enumerate(vertices)}
    n = len(vertices)
    rows = [index[u] for u, _ in g.edges]
    cols = [index[v] for _, v in g.edges]
    adjacency = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    _, predecessors = breadth_first_order(adjacency, 0, directed=False, return_predecessors=True)
    tree = {edge_key(vertices[i], vertices[p]) for i, p in enumerate(predecessors) if p >= 0}
    for e in tree:
        direction[e] = e

    face_list = faces(r)
    face_of = {dart: f for f, face in enumerate(face_list) for dart in face}
    dual = {}
    for u, v in g.edges:
        if (u, v) in tree:
            continue
        f1, f2 = face_of[(u, v)], face_of[(v, u)]
        if f1 == f2:
            raise NotPlanarEmbedding(f'{invoker}: non-tree edge ({u}, {v}) has the same face on both sides')
        dual[(min(f1, f2), max(f1, f2))] = (u, v)
    m = len(face_list)
    if dual:
        keys = list(dual)
        dual_adjacency = csr_matrix((np.ones(len(keys)), ([a for a, _ in keys], [b for _, b in keys])), shape=(m, m))
    else:
        dual_adjacency = csr_matrix((m, m))
    order, parent = breadth_first_order(dual_adjacency, 0, directed=False, return_predecessors=True)
    if len(order) != m or len(dual) != m - 1:
        raise NotPlanarEmbedding(f'{invoker}: the non-tree edges do not form a spanning tree of the dual graph')

    # Leaves first: every other edge of a face is directed when its parent edge is fixed.
    for f in reversed(order[1:]):
        f, p = int(f), int(parent[f])
        e = dual[(min(f, p), max(f, p))]
        agreeing = 0
        own_dart = None
        for a, b in face_list[f]:
            if edge_key(a, b) == e:
                own_dart = (a, b)
            elif direction[edge_key(a, b)] == (a, b):
                agreeing += 1
        direction[e] = own_dart if agreeing % 2 == 0 else (own_dart[1], own_dart[0])


def kasteleyn_orient(g, r):
    '''
    A Pfaffian orientation of the plane graph (g, r): every face other than one
    root face per component has an odd number of edges directed along its
    boundary walk.
    '''
    check_embedding(g, r)
    direction = {}
    for component in connected_components(g):
        if len(component) < 2:
            continue
        _orient_component(g.induced_subgraph(component), r.restrict(component), direction)
    return Orientation(direction, g.vertices)


def matching_sign(o, m):
    '''
    The sign with which the perfect matching ``m`` enters the Pfaffian of the
    matrix of ``o``: the sign of the permutation i1 j1 i2 j2 ... (pairs sorted,
    i < j) times -1 for every pair directed from j to i.
    '''
    covered = matched_vertices(m)
    if covered != set(o.vertices) or 2 * len(m) != len(covered):
        raise NotPerfect(f'{invoker}: the matching does not cover every vertex exactly once')
    rank = {v: i for i, v in enumerate(o.vertices)}
    pairs = sorted(tuple(sorted((rank[u], rank[v]))) for u, v in m)
    sign = Permutation([i for pair in pairs for i in pair]).signature() if pairs else 1
    for u, v in m:
        sign *= o.sign(u, v)
    return sign


def skew_matrix(g, o, labels=None):
    '''A(o, labels): entry (u, v) is labels(uv) when uv is directed u -> v, its negative when v -> u.'''
    labels = weight_labels(g) if labels is None else labels
    order = g.vertices
    index = {v: i for i, v in enumerate(order)}
    n = len(order)
    entries = np.empty((n, n), dtype=object)
    entries.fill(ZERO)
    for e in g.edges:
        a, b = o.direction[e]
        label = labels[e]
        entries[index[a], index[b]] = label
        entries[index[b], index[a]] = -label
    return SkewMatrix(entries, order)


def pfaffian(a):
    '''
    The Pfaffian, by skew-symmetric elimination over the fraction field: each
    step pivots on the pair (k, k+1), multiplies the result by the pivot and
    replaces the trailing block by its Schur complement. Swapping a row/column
    pair negates the result.
    '''
    if not isinstance(a, SkewMatrix):
        a = SkewMatrix(a)
    a.check()
    n = a.size
    if n % 2:
        return ZERO
    entries = a.entries.copy()
    result = ONE
    for k in range(0, n - 1, 2):
        pivot_column = next((j for j in range(k + 1, n) if entries[k, j]), None)
        if pivot_column is None:
            return ZERO
        if pivot_column != k + 1:
            entries[[k + 1, pivot_column], :] = entries[[pivot_column, k + 1], :]
            entries[:, [k + 1, pivot_column]] = entries[:, [pivot_column, k + 1]]
            result = -result
        pivot = entries[k, k + 1]
        result = result * pivot
        if k + 2 < n:
            update = (np.outer(entries[k + 2:, k], entries[k + 1, k + 2:])
                      - np.outer(entries[k + 2:, k + 1], entries[k, k + 2:]))
            for i, j in zip(*np.nonzero(update)):
                entries[k + 2 + i, k + 2 + j] = entries[k + 2 + i, k + 2 + j] + update[i, j] / pivot
    return result


def genpm_planar(g, labels=None, rotation=None):
    '''
    The generating function of the perfect matchings of a planar graph, as the
    product over connected components of s(o, M) * Pf(A(o, labels)).
    ``rotation`` is an optional declared embedding; one is computed otherwise.
    '''
    labels = weight_labels(g) if labels is None else labels
    if rotation is not None:
        check_embedding(g, rotation)
    components = connected_components(g)
    if any(len(c) % 2 for c in components):
        return ZERO
    result = ONE
    for component in components:
        sub = g.induced_subgraph(component)
        r = rotation.restrict(component) if rotation is not None else planar_embed(sub)
        if r is None:
            raise NotPlanar(f'{invoker}: genpm_planar needs a planar graph; a component with '
                            f'{sub.vertex_count} vertices is not planar')
        m = max_matching(sub)
        if 2 * len(m) != sub.vertex_count:
            return ZERO
        o = kasteleyn_orient(sub, r)
        result = result * (matching_sign(o, m) * pfaffian(skew_matrix(sub, o, labels)))
    logger.debug('planar kernel on %d vertices in %d components', g.vertex_count, len(components))
    return result


def genpm_surface(g, labels=None, genus_budget=0, rotation=None, options=None):
    '''
    Genus 0 runs the Pfaffian kernel; a positive budget falls back to the
    exhaustive oracle, which has to fit the oracle cap.
    '''
    options = process_options(options)
    if genus_budget < 0:
        raise ValueError(f'{invoker}: the genus budget must be nonnegative, not {genus_budget}')
    if genus_budget == 0:
        return genpm_planar(g, labels, rotation)
    if g.vertex_count > options['oracle_cap']:
        raise TooLargeForFallback(f'{invoker}: genus budget {genus_budget} falls back to the oracle, which is limited '
                                  f'to {options["oracle_cap"]} vertices; the graph has {g.vertex_count}')
    return genpm_bruteforce(g, labels, options)
