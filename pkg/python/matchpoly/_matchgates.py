'''
Matchgates: planar gadgets on at most three boundary vertices whose internal
matchings reproduce the partial generating functions p_S of a branch.

For the surviving boundary Y (sorted, ``a`` its smallest vertex) and every
S in Y, p_S is the generating function of the perfect matchings of the
branch with S removed, i.e. with S matched outside the branch. A gadget is
representative when, for every S, the matchings of J - S covering every
fresh vertex sum to p_S (times the scalar).
'''
import logging
from dataclasses import dataclass, field
from itertools import combinations

from ._common import MissingPs, PreconditionViolated, invoker
from ._graph import Graph, edge_key, genpm_bruteforce
from ._poly import ONE, ZERO, PolyFrac

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Matchgate:
    case: int
    boundary: tuple
    fresh: tuple = ()
    labels: dict = field(default_factory=dict)
    scalar: PolyFrac = ONE

    def graph(self):
        return Graph(vertices=self.boundary + self.fresh, edges={e: 0 for e in self.labels})

    def exposure(self, exposed):
        '''The scalar times the sum of prod(labels) over the perfect matchings of J - exposed.'''
        exposed = set(exposed)
        if not exposed <= set(self.boundary):
            raise PreconditionViolated('exposure', f'{sorted(exposed - set(self.boundary))} are not boundary vertices')
        return self.scalar * genpm_bruteforce(self.graph().delete_vertices(exposed), self.labels)


def _parity(parity):
    if parity in ('even', 0):
        return 0
    if parity in ('odd', 1):
        return 1
    raise ValueError(f"{invoker}: parity must be 'even' or 'odd', not {parity!r}")


def build_matchgate(surviving, parity, ps, fresh_start=None):
    '''
    The gadget of the applicable case for the surviving boundary vertices.

    ``parity`` is the parity of the number of vertices of the reduced branch;
    ``ps`` maps subsets of ``surviving`` to p_S and must contain every subset
    whose size has that parity. Fresh vertices are numbered from
    ``fresh_start`` (by default one above the largest surviving vertex).
    '''
    surviving = tuple(sorted(set(surviving)))
    if len(surviving) > 3:
        raise PreconditionViolated('surviving', f'a matchgate has at most 3 boundary vertices, not {len(surviving)}')
    odd = _parity(parity)
    ps = {frozenset(s): PolyFrac.constant(value) for s, value in ps.items()}
    for s in ps:
        if not s <= set(surviving):
            raise PreconditionViolated('ps', f'p_S is given for {sorted(s)}, which is not a subset of {list(surviving)}')
    for size in range(odd, len(surviving) + 1, 2):
        for s in combinations(surviving, size):
            if frozenset(s) not in ps:
                raise MissingPs(f'{invoker}: p_S is missing for S = {list(s)}')

    def p(*vertices):
        return ps[frozenset(vertices)]

    if fresh_start is None:
        fresh_start = max(surviving, default=-1) + 1
    u, v, w = fresh_start, fresh_start + 1, fresh_start + 2

    def gate(case, fresh=(), labels=None, scalar=ONE):
        labels = {edge_key(*e): value for e, value in (labels or {}).items()}
        logger.debug('matchgate case %d on %s', case, surviving)
        return Matchgate(case, surviving, tuple(fresh), labels, scalar)

    if not surviving:
        return gate(1, scalar=ZERO if odd else p())
    if len(surviving) == 1:
        (a,) = surviving
        if odd:
            return gate(2, scalar=p(a))
        return gate(2, (u,), {(a, u): p()})
    if len(surviving) == 2:
        a, b = surviving
        if odd:
            return gate(4, (u,), {(a, u): p(b), (b, u): p(a)})
        return gate(3, (u, v), {(a, u): p(), (u, v): p(a, b), (b, v): ONE})
    a, b, c = surviving
    if not odd:
        if p():
            return gate(5, (u, v, w), {(a, u): p(), (b, v): ONE, (c, w): ONE,
                                       (u, v): p(a, b), (v, w): p(b, c) / p(), (u, w): p(a, c)})
        return gate(6, (u,), {(a, u): p(b, c), (b, u): p(a, c), (c, u): p(a, b)})
    v, w = u, v
    if p(a):
        return gate(7, (v, w), {(c, w): ONE, (v, w): p(a, b, c), (a, v): p(b), (b, v): p(a), (a, w): p(c) / p(a)})
    return gate(8, (v, w), {(c, w): p(b), (v, w): p(a, b, c), (a, v): ONE, (b, w): p(c)})
