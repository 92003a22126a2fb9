'''
Bottom-up evaluation of the generating function over an apex tree
decomposition.

Every edge belongs to the topmost node whose bag holds both endpoints. The
subtree graph G_t of a node has the vertices of all bags below it and the
edges owned there; its boundary is the adhesion X_t to the parent. Small bags
are resolved by table_small_bag over the merged children, large leaves by
table_genus_apex, and large inner nodes by table_branching with one branch
per group of children sharing a residual adhesion.
'''
import logging
from concurrent.futures import ThreadPoolExecutor

from ._boundary import BoundaryGraph, dump_table, merge_tables, pad_boundary, table_genus_apex, table_small_bag
from ._branching import Branching, table_branching
from ._common import ValidationFailed, process_options
from ._decomposition import trivial_decomposition, validate_decomposition
from ._graph import Graph, weight_labels
from ._poly import ONE, ZERO

logger = logging.getLogger(__name__)


class _SubtreeGraphs:
    def __init__(self, g, d):
        depth = {}
        for level, nodes in enumerate(d.levels()):
            for t in nodes:
                depth[t] = level
        owner = {}
        for u, v in g.edges:
            holders = [t for t in d.nodes if u in d.bag(t) and v in d.bag(t)]
            owner[(u, v)] = min(holders, key=lambda t: (depth[t], t))
        owned = {t: [] for t in d.nodes}
        for e, t in owner.items():
            owned[t].append(e)
        self.vertices, self.edges = {}, {}
        for t in d.post_order():
            vertices, edges = set(d.bag(t)), set(owned[t])
            for c in d.children(t):
                vertices |= self.vertices[c]
                edges |= self.edges[c]
            self.vertices[t], self.edges[t] = vertices, edges
        self.g = g

    def graph(self, t):
        return Graph(vertices=self.vertices[t], edges={e: self.g.weight(*e) for e in self.edges[t]})


def merge_all(items, options=None):
    '''Fold merge_tables over ``items``, padding each side with the other's missing boundary vertices.'''
    (b, table), rest = items[0], items[1:]
    for other, other_table in rest:
        left = pad_boundary(b, table, other.boundary - b.boundary)
        right = pad_boundary(other, other_table, b.boundary - other.boundary)
        b, table = merge_tables(left, right, options)
    return b, table


def _branch_groups(children, residual):
    '''
    Children grouped by residual adhesion: equal residuals share a group and a
    residual inside another joins the first group whose residual contains it.
    '''
    distinct = []
    for c in children:
        if residual[c] not in distinct:
            distinct.append(residual[c])
    maximal = [r for r in distinct if not any(r < s for s in distinct)]
    groups = {r: [] for r in maximal}
    for c in children:
        target = next(r for r in maximal if residual[c] <= r)
        groups[target].append(c)
    return [groups[r] for r in maximal]


def _resolve(t, g, d, subtrees, labels, tables, options, on_table):
    k = options['k']
    host = BoundaryGraph(subtrees.graph(t), d.adhesion(t), labels)
    children = d.children(t)
    items = {c: (BoundaryGraph(subtrees.graph(c), d.adhesion(c), labels), tables[c]) for c in children}
    if len(d.bag(t)) <= k:
        if children:
            child = merge_all([items[c] for c in children], options)
        else:
            child = (BoundaryGraph(Graph()), {(): ONE})
        table = table_small_bag(child, host, d.bag(t), options)
        how = 'small bag'
    elif not children:
        table = table_genus_apex(host, d.apex(t), 0, options)
        how = 'genus/apex'
    else:
        residual = {c: d.adhesion(c) - d.apex(t) for c in children}
        groups = _branch_groups(children, residual)
        merged = [merge_all([items[c] for c in group], options) for group in groups]
        branching = Branching(host, d.apex(t), tuple(b for b, _ in merged), d.embedding(t))
        table = table_branching(branching, {i: tb for i, (_, tb) in enumerate(merged)}, options)
        how = f'branching ({len(groups)} branches)'
    logger.debug('node %s resolved by %s: %d entries', t, how, len(table))
    if on_table is not None:
        on_table(t, host, table)
    return table


def genpm_decomposed(g, weights=None, d=None, k=None, options=None, on_table=None):
    '''
    The generating function of the perfect matchings of ``g`` under
    x**weights, computed over the decomposition ``d``. ``on_table(t, host,
    table)`` is called after every node is resolved.
    '''
    options = process_options(options)
    if k is not None:
        options['k'] = k
    if d is None:
        d = trivial_decomposition(g, options['k'])
    report = validate_decomposition(g, d, options['k'])
    if not report.ok:
        raise ValidationFailed(report)
    labels = weight_labels(g, weights)
    subtrees = _SubtreeGraphs(g, d)
    tables = {}
    with ThreadPoolExecutor(max_workers=options['threads']) as executor:
        for level in reversed(d.levels()):
            results = executor.map(lambda t: _resolve(t, g, d, subtrees, labels, tables, options, on_table), level)
            tables.update(zip(level, results))
    root_table = tables[d.root]
    logger.info('decomposition with %d nodes evaluated; root table %s', len(d.nodes), dump_table(root_table) or 'empty')
    return root_table.get((), ZERO)
