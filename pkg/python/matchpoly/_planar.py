import logging

import networkx as nx

from ._common import FormatError, MalformedRotation, NotPlanarEmbedding, invoker
from ._graph import Graph, _load_json, connected_components, edge_key

logger = logging.getLogger(__name__)


class RotationSystem:
    '''
    A combinatorial embedding: for every vertex, the clockwise cyclic order of
    its neighbours. ``to_networkx`` gives the same rotations as a
    networkx.PlanarEmbedding, which also holds non-planar rotations; only
    ``check_structure`` on it insists on genus 0.
    '''
    __slots__ = ('_rotation',)

    def __init__(self, rotation):
        self._rotation = {int(v): tuple(int(u) for u in nbrs) for v, nbrs in sorted(rotation.items(), key=lambda i: int(i[0]))}

    @property
    def vertices(self):
        return tuple(self._rotation)

    def rotation(self, v):
        return self._rotation[v]

    def as_dict(self):
        return {v: list(nbrs) for v, nbrs in self._rotation.items()}

    def to_networkx(self):
        embedding = nx.PlanarEmbedding()
        embedding.add_nodes_from(self._rotation)
        embedding.set_data(self.as_dict())
        return embedding

    def graph(self):
        return Graph(vertices=self._rotation, edges={edge_key(v, u): 1 for v, nbrs in self._rotation.items() for u in nbrs})

    def restrict(self, vertices, edges=None):
        '''
        The embedding induced on ``vertices``, keeping only the edges keyed in
        ``edges`` when given; deleting vertices and edges keeps an embedding planar.
        '''
        keep = set(vertices)
        return RotationSystem({v: [u for u in nbrs if u in keep and (edges is None or edge_key(v, u) in edges)]
                               for v, nbrs in self._rotation.items() if v in keep})

    def check(self, g=None):
        '''Raise MalformedRotation unless every edge appears once in each endpoint's rotation.'''
        for v, nbrs in self._rotation.items():
            if len(set(nbrs)) != len(nbrs):
                raise MalformedRotation(f'{invoker}: the rotation at {v} repeats a neighbour')
            if v in nbrs:
                raise MalformedRotation(f'{invoker}: the rotation at {v} contains a self-loop')
        embedding = self.to_networkx()
        for v, u in embedding.edges:
            if not embedding.has_edge(u, v):
                raise MalformedRotation(f'{invoker}: edge ({v}, {u}) appears in the rotation at {v} only')
        if g is not None:
            if set(self._rotation) != set(g.vertices):
                raise MalformedRotation(f'{invoker}: the rotation system and the graph have different vertex sets')
            for v in g.vertices:
                if set(self._rotation[v]) != set(g.neighbors(v)):
                    raise MalformedRotation(f'{invoker}: the rotation at {v} does not list exactly its neighbours')

    def __eq__(self, other):
        if not isinstance(other, RotationSystem):
            return NotImplemented
        return self._rotation == other._rotation

    def __repr__(self):
        return f'RotationSystem({self.as_dict()})'


def faces(r):
    '''
    The face walks of ``r`` as tuples of darts (u, v), in a deterministic order.
    Every dart lies on exactly one face, and the dart after (u, v) leaves v
    along the neighbour that follows u in the rotation at v.
    '''
    r.check()
    embedding = r.to_networkx()
    traversed = set()
    result = []
    for v in r.vertices:
        for u in r.rotation(v):
            if (u, v) in traversed:
                continue
            # networkx walks the face on the right of (u, v), which is ours reversed
            nodes = embedding.traverse_face(u, v, traversed)
            walk = [v, u] + nodes[:1:-1]
            result.append(tuple(zip(walk, walk[1:] + walk[:1])))
    return result


def face_vertices(face):
    return tuple(a for a, _ in face)


def euler_genus(r):
    '''Sum over components with edges of 2 - V + E - F; zero iff ``r`` is planar.'''
    face_list = faces(r)
    g = r.graph()
    components = connected_components(g)
    component_of = {v: i for i, component in enumerate(components) for v in component}
    face_count = {}
    for face in face_list:
        c = component_of[face[0][0]]
        face_count[c] = face_count.get(c, 0) + 1
    genus = 0
    for i, component in enumerate(components):
        edges = sum(g.degree(v) for v in component) // 2
        if edges:
            genus += 2 - len(component) + edges - face_count.get(i, 0)
    return genus


def check_embedding(g, r):
    '''Raise NotPlanarEmbedding unless ``r`` is a planar rotation system of ``g``.'''
    try:
        r.check(g)
    except MalformedRotation as e:
        raise NotPlanarEmbedding(str(e)) from e
    try:
        r.to_networkx().check_structure()
    except nx.NetworkXException as e:
        raise NotPlanarEmbedding(f'{invoker}: the rotation system is not planar (Euler genus {euler_genus(r)}): {e}') from e


def planar_embed(g):
    '''A planar rotation system of ``g``, or None when ``g`` is not planar.'''
    is_planar, embedding = nx.check_planarity(g.to_networkx())
    if not is_planar:
        logger.debug('graph with %d vertices and %d edges is not planar', g.vertex_count, g.edge_count)
        return None
    return RotationSystem({v: list(embedding.neighbors_cw_order(v)) if embedding.has_node(v) else [] for v in g.vertices})


def is_planar(g):
    return nx.check_planarity(g.to_networkx())[0]


def embeds_with_faces(g, vertex_sets):
    '''
    True iff ``g`` has a planar embedding in which every set of
    ``vertex_sets`` lies on one face: a fresh witness vertex joined to each
    set keeps the graph planar exactly then.
    '''
    nx_graph = g.to_networkx()
    witness = max(g.vertices, default=-1) + 1
    for vertex_set in vertex_sets:
        if len(vertex_set) < 2:
            continue
        nx_graph.add_edges_from((witness, v) for v in vertex_set)
        witness += 1
    return nx.check_planarity(nx_graph)[0]


def cofacial(r, vertex_set):
    '''True iff some face of ``r`` meets every vertex of ``vertex_set``.'''
    wanted = set(vertex_set)
    if len(wanted) <= 1:
        return all(v in r.vertices for v in wanted)
    return any(wanted <= set(face_vertices(face)) for face in faces(r))


def splice(r, boundary, gadget, within=None):
    '''
    ``r`` with the graph ``gadget`` drawn inside one face of ``r`` and glued to
    it at one corner per vertex of ``boundary``; every other gadget vertex must
    be new to ``r``. The face must meet every vertex of ``within`` (by default
    the boundary). Return None when no face qualifies or ``gadget`` has no
    drawing with the boundary on one face.
    '''
    boundary = list(boundary)
    wanted = set(boundary) | set(within or ())
    rotation = r.as_dict()
    corner, order = {}, []
    if boundary and len(wanted) == 1 and not rotation[boundary[0]]:
        corner, order = {boundary[0]: None}, boundary
    elif boundary:
        for face in faces(r):
            if not wanted <= set(face_vertices(face)):
                continue
            for u, v in face:
                if v in boundary and v not in corner:
                    corner[v] = u
                    order.append(v)
            break
        else:
            return None

    witness = max([*rotation, *gadget.vertices], default=-1) + 1
    nx_graph = gadget.to_networkx()
    nx_graph.add_edges_from((witness, s) for s in boundary)
    is_planar, embedding = nx.check_planarity(nx_graph)
    if not is_planar:
        return None
    drawn = {v: list(embedding.neighbors_cw_order(v)) if embedding.has_node(v) else [] for v in nx_graph}
    if len(order) == 3:
        # the witness must see the boundary in the order the face walk meets it
        around = drawn[witness]
        i = around.index(order[0])
        if around[i:] + around[:i] != order:
            drawn = {v: nbrs[::-1] for v, nbrs in drawn.items()}

    for v, nbrs in drawn.items():
        if v == witness:
            continue
        if v not in corner:
            rotation[v] = nbrs
            continue
        i = nbrs.index(witness)
        j = rotation[v].index(corner[v]) + 1 if corner[v] is not None else 0
        rotation[v][j:j] = nbrs[i + 1:] + nbrs[:i]
    return RotationSystem(rotation)


def read_rotation(document):
    '''The optional ``rotation`` field of a JSON document, or None.'''
    document = _load_json(document)
    rotation = document.get('rotation') if isinstance(document, dict) else None
    if rotation is None:
        return None
    if not isinstance(rotation, dict):
        raise FormatError(f"{invoker}: 'rotation' must map vertices to clockwise neighbour lists")
    try:
        return RotationSystem({int(v): [int(u) for u in nbrs] for v, nbrs in rotation.items()})
    except (TypeError, ValueError) as e:
        raise FormatError(f"{invoker}: malformed 'rotation' field: {e}") from e
