'''
Tables of boundary graphs that split into a planar centre and branches.

A branching of (G, X, p) fixes an apex set A and boundary subgraphs
(B_i, Y_i) hanging off the centre. For every matching F of the apex and
boundary edges, each reduced branch B_i - V(F) - X is replaced by the
matchgate of its surviving boundary, and the rest is a planar graph handled
by the Pfaffian kernel.
'''
import logging
from dataclasses import dataclass
from itertools import combinations

from ._boundary import BoundaryGraph, _meets, _touching_matchings
from ._common import (EmbeddingBroken, NotPlanar, NotPlanarEmbedding, PreconditionViolated, WorkCounter, invoker,
                      process_options)
from ._graph import Graph, as_matching, edge_key, has_perfect_matching, matched_vertices
from ._matchgates import build_matchgate
from ._pfaffian import genpm_planar
from ._planar import check_embedding, cofacial, embeds_with_faces, splice
from ._poly import ONE, ZERO

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Branching:
    host: BoundaryGraph
    apex: frozenset
    branches: tuple
    embedding: object = None

    def __post_init__(self):
        object.__setattr__(self, 'apex', frozenset(self.apex))
        object.__setattr__(self, 'branches', tuple(self.branches))

    def interior(self, i):
        b = self.branches[i]
        return set(b.graph.vertices) - b.boundary

    def shrunken_torso(self):
        '''G_B: G without the branch interiors, with X and every Y_i completed into cliques.'''
        g = self.host.graph
        inner = set().union(*(self.interior(i) for i in range(len(self.branches))))
        edges = {e: w for e, w in g.delete_vertices(inner).weights.items()}
        for clique in [self.host.boundary] + [b.boundary for b in self.branches]:
            for u, v in combinations(sorted(clique), 2):
                edges.setdefault(edge_key(u, v), 0)
        return Graph(vertices=set(g.vertices) - inner, edges=edges)

    def check(self):
        '''Raise PreconditionViolated naming the first violated clause.'''
        g, x, a = self.host.graph, self.host.boundary, self.apex
        if not a <= set(g.vertices):
            raise PreconditionViolated('apex-in-graph', f'apex vertices {sorted(a - set(g.vertices))} are not in G')
        if len(x - a) > 3:
            raise PreconditionViolated('residual-size', f'|X - A| = {len(x - a)} exceeds 3')
        for i, b in enumerate(self.branches):
            for u, v in b.graph.edges:
                if not g.has_edge(u, v):
                    raise PreconditionViolated('branch-in-host', f'edge {(u, v)} of branch {i} is not an edge of G')
                if b.labels[(u, v)] != self.host.labels[(u, v)]:
                    raise PreconditionViolated('labels', f'branch {i} relabels edge {(u, v)}')
            inner = self.interior(i)
            if not inner <= set(g.vertices):
                raise PreconditionViolated('branch-in-host', f'branch {i} has vertices outside G')
            if inner & a:
                raise PreconditionViolated('apex-interior', f'branch {i} contains apex vertices {sorted(inner & a)}')
            if inner & x:
                raise PreconditionViolated('boundary-interior', f'branch {i} contains boundary vertices {sorted(inner & x)}')
            if len(b.boundary - a) > 3:
                raise PreconditionViolated('residual-size', f'|Y_{i} - A| = {len(b.boundary - a)} exceeds 3')
            for e in g.edges:
                if _meets(e, inner) and not b.graph.has_edge(*e):
                    raise PreconditionViolated('branch-separation', f'edge {e} leaves the interior of branch {i}')
        for i, j in combinations(range(len(self.branches)), 2):
            bi, bj = self.branches[i], self.branches[j]
            if not set(bi.graph.vertices) & set(bj.graph.vertices) <= bi.boundary & bj.boundary:
                raise PreconditionViolated('branch-overlap', f'branches {i} and {j} share inner vertices')
            if set(bi.graph.edges) & set(bj.graph.edges):
                raise PreconditionViolated('branch-overlap', f'branches {i} and {j} share edges')
            yi, yj = bi.boundary - a, bj.boundary - a
            if yi <= yj or yj <= yi:
                raise PreconditionViolated('containment', f'residual boundaries of branches {i} and {j} are nested')
        centre = self.shrunken_torso().delete_vertices(a)
        faces_needed = [x - a] + [b.boundary - a for b in self.branches]
        if self.embedding is not None:
            check_embedding(centre, self.embedding)
            for vertex_set in faces_needed:
                if not cofacial(self.embedding, vertex_set):
                    raise PreconditionViolated('face', f'{sorted(vertex_set)} do not lie on one face')
        elif not embeds_with_faces(centre, faces_needed):
            raise PreconditionViolated('face', 'G_B - A has no planar embedding with every residual boundary on a face')


def reduce_branching(br, f):
    '''The F-reduced branching: G - V(F) - X with branches B_i - V(F) - X and boundaries Y_i - (V(F) u X).'''
    g, x, a = br.host.graph, br.host.boundary, br.apex
    f = as_matching(f, g)
    if any(not _meets(e, a | x) for e in f):
        raise PreconditionViolated('reduction', 'every edge of F must meet A or X')
    if not a - x <= matched_vertices(f):
        raise PreconditionViolated('reduction', f'apex vertices {sorted(a - x - matched_vertices(f))} are not covered by F')
    blocked = matched_vertices(f) | x
    host = BoundaryGraph(g.delete_vertices(blocked), frozenset(), br.host.labels)
    branches = tuple(BoundaryGraph(b.graph.delete_vertices(blocked), b.boundary - blocked, b.labels) for b in br.branches)
    return Branching(host, frozenset(), branches)


def _branch_ps(labels, entries, blocked, boundary, d):
    '''p_S of a reduced branch from its table, for the edges ``d`` of F inside the branch.'''
    d = set(d)
    divisor = ONE
    for e in d:
        divisor = divisor * labels[e]
    ps = {}
    for w, value in entries.items():
        if not d <= set(w):
            continue
        rest = [e for e in w if e not in d]
        if any(_meets(e, blocked) for e in rest):
            continue
        s = frozenset(boundary) - matched_vertices(rest)
        ps[s] = ps.get(s, ZERO) + value / divisor
    return ps


def _splice_gates(br, gates, vertices, edges):
    '''
    The declared embedding of ``br`` with each gate drawn into the face holding
    the residual boundary of its branch, then cut down to ``vertices`` and
    ``edges``; None when some gate finds no such face.
    '''
    r = br.embedding
    for b, gate in zip(br.branches, gates):
        if gate.fresh:
            r = splice(r, gate.boundary, gate.graph(), b.boundary - br.apex)
            if r is None:
                return None
    return r.restrict(vertices, edges)


def table_branching(br, sp, options=None):
    '''
    The table of the host of ``br`` from the sign post ``sp``, which maps every
    branch index to the table of that branch. With a declared embedding the
    matchgates are spliced into it; otherwise the augmented graph is embedded
    afresh.
    '''
    options = process_options(options)
    br.check()
    if isinstance(sp, (list, tuple)):
        sp = dict(enumerate(sp))
    missing = [i for i in range(len(br.branches)) if i not in sp]
    if missing:
        raise PreconditionViolated('sign-post', f'no table for branch {missing[0]}')
    host, a = br.host, br.apex
    g, x, labels = host.graph, host.boundary, host.labels
    if len(a) > options['k'] or len(x) > options['k']:
        raise PreconditionViolated('size', f'|A| = {len(a)} and |X| = {len(x)} must be at most k = {options["k"]}')
    branch_edges = [set(b.graph.edges) for b in br.branches]
    owned = set().union(*branch_edges)
    fresh_start = max(g.vertices, default=-1) + 1

    counter = WorkCounter(options['work_limit'], 'table_branching')
    table = {}
    for f in _touching_matchings(g, a | x, a - x, counter):
        key = tuple(e for e in f if _meets(e, x))
        blocked = matched_vertices(f) | x
        reduced = reduce_branching(br, f)
        residual = reduced.host.graph
        scalar = host.product(f)
        if not scalar:
            if key not in table and has_perfect_matching(residual):
                table[key] = ZERO
            continue
        keep = set(residual.vertices)
        gadget_labels = {e: labels[e] for e in residual.edges if e not in owned}
        gates = []
        next_fresh = fresh_start
        for i, (b, rb) in enumerate(zip(br.branches, reduced.branches)):
            surviving = sorted(rb.boundary)
            keep -= set(rb.graph.vertices) - rb.boundary
            d = [e for e in f if e in branch_edges[i]]
            ps = _branch_ps(b.labels, sp[i], blocked, surviving, d)
            odd = rb.graph.vertex_count % 2
            for size in range(odd, len(surviving) + 1, 2):
                for s in combinations(surviving, size):
                    ps.setdefault(frozenset(s), ZERO)
            gate = build_matchgate(surviving, odd, ps, fresh_start=next_fresh)
            next_fresh += len(gate.fresh)
            gates.append(gate)
            gadget_labels.update(gate.labels)
            scalar = scalar * gate.scalar
        value = ZERO
        if scalar:
            fresh = {v for gate in gates for v in gate.fresh}
            reduced_graph = Graph(vertices=keep | fresh, edges={e: 0 for e in gadget_labels})
            rotation = None
            if br.embedding is not None:
                rotation = _splice_gates(br, gates, keep | fresh, gadget_labels)
                if rotation is None:
                    logger.debug('no face of the embedding takes every matchgate for F = %s; embedding afresh', list(f))
            try:
                value = scalar * genpm_planar(reduced_graph, gadget_labels, rotation)
            except (NotPlanar, NotPlanarEmbedding) as e:
                raise EmbeddingBroken(f'{invoker}: the matchgate-augmented graph for F = {list(f)} is not planar') from e
        if value:
            table[key] = table.get(key, ZERO) + value
        elif key not in table and has_perfect_matching(residual):
            table[key] = ZERO
    logger.debug('branching with %d branches, |A|=%d: %d entries', len(br.branches), len(a), len(table))
    return dict(sorted(table.items()))
