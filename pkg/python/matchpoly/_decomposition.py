'''
Rooted tree decompositions with an apex set per bag, their torsos, a
validator reporting the first violated clause, and constructors for the
apex-planar and clique-sum graph classes.
'''
import json
import logging
from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from ._common import (FormatError, GlueNotClique, InvalidDecomposition, NotPlanarAfterApex, NotPlanarEmbedding,
                      WorkCounter, invoker)
from ._graph import Graph, _load_json, edge_key
from ._planar import RotationSystem, check_embedding, cofacial, embeds_with_faces, is_planar

logger = logging.getLogger(__name__)


class ApexTreeDecomposition:
    '''
    Bags β(t) and apex sets A_t on the nodes of a rooted tree, given by its
    (parent, child) edges. ``embeddings`` optionally declares a rotation
    system of torso(t) - A_t for some nodes.
    '''

    def __init__(self, bags, edges=(), root=None, apex=None, embeddings=None):
        self._bags = {int(t): frozenset(int(v) for v in bag) for t, bag in sorted(bags.items())}
        self._edges = tuple((int(p), int(c)) for p, c in edges)
        apex = {} if apex is None else {int(t): a for t, a in apex.items()}
        embeddings = {} if embeddings is None else {int(t): r for t, r in embeddings.items()}
        unknown = sorted((set(apex) | set(embeddings)) - set(self._bags))
        if unknown:
            raise InvalidDecomposition(f'{invoker}: apex sets or embeddings are given for unknown node {unknown[0]}')
        self._apex = {t: frozenset(int(v) for v in apex.get(t, ())) for t in self._bags}
        self._embeddings = embeddings
        self._children = {t: [] for t in self._bags}
        self._parent = {}
        for p, c in self._edges:
            if p in self._children:
                self._children[p].append(c)
            self._parent.setdefault(c, []).append(p)
        self._children = {t: tuple(sorted(cs)) for t, cs in self._children.items()}
        if root is None:
            roots = [t for t in self._bags if t not in self._parent]
            root = roots[0] if roots else None
        self.root = root

    @property
    def nodes(self):
        return tuple(self._bags)

    @property
    def edges(self):
        return self._edges

    def bag(self, t):
        return self._bags[t]

    def apex(self, t):
        return self._apex[t]

    def embedding(self, t):
        return self._embeddings.get(t)

    def children(self, t):
        return self._children[t]

    def parent(self, t):
        parents = self._parent.get(t)
        return parents[0] if parents else None

    def neighbors(self, t):
        p = self.parent(t)
        return ((p,) if p is not None else ()) + self._children[t]

    def adhesion(self, t):
        '''β(t) ∩ β(parent), empty at the root.'''
        p = self.parent(t)
        return self._bags[t] & self._bags[p] if p is not None else frozenset()

    def tree_problem(self):
        '''A description of why the node/edge structure is not a rooted tree, or None.'''
        if not self._bags:
            return 'the decomposition has no nodes'
        for p, c in self._edges:
            if p not in self._bags or c not in self._bags:
                return f'tree edge ({p}, {c}) names an unknown node'
        if self.root not in self._bags:
            return f'the root {self.root} is not a node'
        if self.root in self._parent:
            return f'the root {self.root} has a parent'
        for t, parents in self._parent.items():
            if len(parents) > 1:
                return f'node {t} has more than one parent'
        if len(self._edges) != len(self._bags) - 1 or len(self.post_order()) != len(self._bags):
            return 'the tree edges do not connect every node to the root'
        return None

    def post_order(self):
        '''Nodes reachable from the root, every child before its parent.'''
        if self.root not in self._bags:
            return []
        order, stack, seen = [], [(self.root, False)], set()
        while stack:
            t, expanded = stack.pop()
            if expanded:
                order.append(t)
                continue
            if t in seen:
                continue
            seen.add(t)
            stack.append((t, True))
            stack.extend((c, False) for c in reversed(self._children[t]) if c not in seen)
        return order

    def levels(self):
        '''Nodes grouped by depth, root first.'''
        result, level = [], [self.root]
        while level:
            result.append(level)
            level = [c for t in level for c in self._children[t]]
        return result

    def __repr__(self):
        return (f'ApexTreeDecomposition(bags={ {t: sorted(b) for t, b in self._bags.items()} }, '
                f'edges={list(self._edges)}, root={self.root})')


def torso(g, d, t):
    '''G[β(t)] with every adhesion to a neighbouring bag completed into a clique of weight-0 edges.'''
    problem = d.tree_problem()
    if problem:
        raise InvalidDecomposition(f'{invoker}: {problem}')
    if t not in d.nodes:
        raise InvalidDecomposition(f'{invoker}: {t} is not a node of the decomposition')
    bag = d.bag(t)
    if not bag <= set(g.vertices):
        raise InvalidDecomposition(f'{invoker}: the bag of node {t} contains vertices that are not in the graph')
    edges = g.induced_subgraph(bag).weights
    for s in d.neighbors(t):
        for u, v in combinations(sorted(bag & d.bag(s)), 2):
            edges.setdefault(edge_key(u, v), 0)
    return Graph(vertices=bag, edges=edges)


@dataclass
class ValidationReport:
    ok: bool = True
    clause: str = None
    nodes: list = field(default_factory=list)
    message: str = ''

    def describe(self):
        if self.ok:
            return 'valid decomposition'
        nodes = ', '.join(str(t) for t in self.nodes)
        return f'clause {self.clause} fails' + (f' at node(s) {nodes}' if nodes else '') + f': {self.message}'

    def as_dict(self):
        return {'ok': self.ok, 'clause': self.clause, 'nodes': list(self.nodes), 'message': self.message}


def _fail(clause, nodes, message):
    logger.info('decomposition invalid: clause %s at %s: %s', clause, nodes, message)
    return ValidationReport(False, clause, list(nodes), message)


def validate_decomposition(g, d, k):
    '''
    Check the tree structure, the three bag conditions (i: bags cover V(G),
    ii: every edge lies in a bag, iii: the bags of a vertex form a subtree),
    apex sets inside bags, adhesion and apex sizes against ``k``, and for every
    bag larger than ``k`` the planarity of torso - A and the residual
    adhesions (at most 3 vertices outside A_t, all on faces).
    '''
    problem = d.tree_problem()
    if problem:
        return _fail('tree', [], problem)
    vertices = set(g.vertices)
    covered = set()
    for t in d.nodes:
        if not d.bag(t) <= vertices:
            return _fail('i', [t], f'bag contains vertices {sorted(d.bag(t) - vertices)} that are not in the graph')
        covered |= d.bag(t)
    if covered != vertices:
        return _fail('i', [], f'vertices {sorted(vertices - covered)[:5]} lie in no bag')
    for u, v in g.edges:
        if not any(u in d.bag(t) and v in d.bag(t) for t in d.nodes):
            return _fail('ii', [], f'edge ({u}, {v}) lies in no bag')
    for v in sorted(vertices):
        tops = [t for t in d.nodes if v in d.bag(t) and (d.parent(t) is None or v not in d.bag(d.parent(t)))]
        if len(tops) != 1:
            return _fail('iii', tops, f'the bags containing vertex {v} do not induce a subtree')
    for t in d.nodes:
        if not d.apex(t) <= d.bag(t):
            return _fail('apex', [t], f'apex vertices {sorted(d.apex(t) - d.bag(t))} are not in the bag')
        if len(d.adhesion(t)) > k:
            return _fail('adhesion', [d.parent(t), t], f'adhesion of size {len(d.adhesion(t))} exceeds k = {k}')
        if len(d.apex(t)) > k:
            return _fail('apex-size', [t], f'apex set of size {len(d.apex(t))} exceeds k = {k}')
    for t in d.nodes:
        if len(d.bag(t)) <= k:
            continue
        apex = d.apex(t)
        residuals = []
        for s in d.neighbors(t):
            residual = (d.bag(t) & d.bag(s)) - apex
            if len(residual) > 3:
                return _fail('residual', [t, s], f'adhesion has {len(residual)} vertices outside the apex set of node {t}')
            residuals.append(residual)
        centre = torso(g, d, t).delete_vertices(apex)
        r = d.embedding(t)
        if r is not None:
            try:
                check_embedding(centre, r)
            except NotPlanarEmbedding as e:
                return _fail('planarity', [t], f'the declared embedding of torso - A is invalid: {e}')
            for residual in residuals:
                if len(residual) == 3 and not cofacial(r, residual):
                    return _fail('face', [t], f'residual adhesion {sorted(residual)} is not on a face of the embedding')
        elif not is_planar(centre):
            return _fail('planarity', [t], 'torso - A is not planar')
        elif not embeds_with_faces(centre, [s for s in residuals if len(s) == 3]):
            return _fail('face', [t], 'no planar embedding of torso - A has every size-3 residual adhesion on a face')
    return ValidationReport()


def trivial_decomposition(g, k=4):
    '''One bag holding every vertex; small graphs take the whole bag as apex set.'''
    vertices = set(g.vertices)
    return ApexTreeDecomposition({0: vertices}, apex={0: vertices if len(vertices) <= k else ()})


def apex_planar_decomposition(g, apex):
    '''One bag with apex set ``apex``; g - apex must be planar.'''
    apex = set(apex)
    if not apex <= set(g.vertices):
        raise NotPlanarAfterApex(f'{invoker}: apex vertices {sorted(apex - set(g.vertices))} are not in the graph')
    if not is_planar(g.delete_vertices(apex)):
        raise NotPlanarAfterApex(f'{invoker}: the graph minus {sorted(apex)} is not planar')
    return ApexTreeDecomposition({0: set(g.vertices)}, apex={0: apex})


def clique_sum_decomposition(g, parts, glues, apex=None):
    '''
    A decomposition with one node per part (node i is ``parts[i]``, node 0 the
    root) and tree edges ``glues`` given as (parent, child) index pairs. The
    shared vertices of glued parts must form a clique of ``g`` with at most
    three vertices outside the apex sets of both parts.
    '''
    bags = {i: set(part) for i, part in enumerate(parts)}
    apex = {} if apex is None else {i: set(a) for i, a in (apex.items() if isinstance(apex, dict) else enumerate(apex))}
    for p, c in glues:
        if p not in bags or c not in bags:
            raise GlueNotClique(f'{invoker}: glue ({p}, {c}) names an unknown part')
        glue = bags[p] & bags[c]
        for u, v in combinations(sorted(glue), 2):
            if not g.has_edge(u, v):
                raise GlueNotClique(f'{invoker}: the glue {sorted(glue)} of parts {p} and {c} misses edge ({u}, {v})')
        for t in (p, c):
            if len(glue - apex.get(t, set())) > 3:
                raise GlueNotClique(f'{invoker}: the glue {sorted(glue)} has more than 3 vertices outside the apex set of part {t}')
    return ApexTreeDecomposition(bags, glues, root=0, apex=apex)


def _vertex_list(value, what):
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise FormatError(f"{invoker}: '{what}' must be an array of integers")
    return value


def read_decomposition(text):
    '''Parse ``{"nodes": [{"id", "bag", "apex", "rotation"?}], "edges": [[parent, child]], "root": id}``.'''
    document = _load_json(text)
    if not isinstance(document, dict) or not isinstance(document.get('nodes'), list):
        raise FormatError(f"{invoker}: a decomposition document must be an object with a 'nodes' array")
    bags, apex, embeddings = {}, {}, {}
    for node in document['nodes']:
        if not isinstance(node, dict) or not isinstance(node.get('id'), int):
            raise FormatError(f"{invoker}: every node needs an integer 'id'")
        t = node['id']
        if t in bags:
            raise FormatError(f'{invoker}: node {t} is given twice')
        bags[t] = _vertex_list(node.get('bag', []), 'bag')
        apex[t] = _vertex_list(node.get('apex', []), 'apex')
        rotation = node.get('rotation')
        if rotation is not None:
            if not isinstance(rotation, dict):
                raise FormatError(f"{invoker}: the 'rotation' of node {t} must map vertices to neighbour lists")
            try:
                embeddings[t] = RotationSystem({int(v): [int(u) for u in nbrs] for v, nbrs in rotation.items()})
            except (TypeError, ValueError) as e:
                raise FormatError(f"{invoker}: malformed 'rotation' of node {t}: {e}") from e
    edges = document.get('edges', [])
    if not isinstance(edges, list) or not all(isinstance(e, list) and len(e) == 2 for e in edges):
        raise FormatError(f"{invoker}: 'edges' must be an array of [parent, child] pairs")
    root = document.get('root')
    if root is not None and not isinstance(root, int):
        raise FormatError(f"{invoker}: 'root' must be a node id")
    return ApexTreeDecomposition(bags, edges, root, apex, embeddings)


def decomposition_document(d):
    nodes = []
    for t in d.nodes:
        node = {'id': t, 'bag': sorted(d.bag(t)), 'apex': sorted(d.apex(t))}
        if d.embedding(t) is not None:
            node['rotation'] = {str(v): list(nbrs) for v, nbrs in d.embedding(t).as_dict().items()}
        nodes.append(node)
    return {'nodes': nodes, 'edges': [list(e) for e in d.edges], 'root': d.root}


def write_decomposition(d):
    return json.dumps(decomposition_document(d))


def _apex_candidates(g, budget, counter):
    '''An apex set of at most ``budget`` vertices leaving g planar, branching on Kuratowski branch vertices.'''
    counter.tick()
    planar, certificate = nx.check_planarity(g.to_networkx(), counterexample=True)
    if planar:
        return []
    if not budget:
        return None
    for v in sorted(v for v in certificate.nodes if certificate.degree(v) >= 3):
        rest = _apex_candidates(g.delete_vertices([v]), budget - 1, counter)
        if rest is not None:
            return [v] + rest
    return None


def auto_decomposition(g, k=4, work_limit=1_000_000):
    '''
    The trivial decomposition if it is valid, otherwise a single bag whose apex
    set of at most ``k`` vertices leaves a planar graph. Apex vertices are
    searched among the branch vertices of Kuratowski subgraphs, so the search
    can miss apex sets made of subdivision vertices. Returns None when nothing
    is found.
    '''
    d = trivial_decomposition(g, k)
    if validate_decomposition(g, d, k).ok:
        return d
    counter = WorkCounter(work_limit, 'auto_decomposition')
    for budget in range(1, k + 1):
        apex = _apex_candidates(g, budget, counter)
        if apex is not None:
            logger.info('apex set %s leaves a planar graph', apex)
            return apex_planar_decomposition(g, apex)
    return None
