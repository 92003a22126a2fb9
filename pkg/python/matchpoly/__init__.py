from ._boundary import (BoundaryGraph, aligned_matchings, dump_table, merge_tables, pad_boundary, table_genus_apex,
                        table_of, table_small_bag)
from ._branching import Branching, reduce_branching, table_branching
from ._common import (DivisionByZero, EmbeddingBroken, FormatError, GlueNotClique, InvalidDecomposition, InvalidDrawing,
                      LabelMismatch, MalformedRotation, MatchpolyError, MissingPs, NotAMatching, NotLaurent, NotPerfect,
                      NotPlanar, NotPlanarAfterApex, NotPlanarEmbedding, NotSkewSymmetric, OverlapViolated,
                      PoleAtPoint, PreconditionViolated, TooLarge, TooLargeForFallback, ValidationFailed,
                      WorkLimitExceeded, default_options, process_options)
from ._decomposition import (ApexTreeDecomposition, ValidationReport, apex_planar_decomposition, auto_decomposition,
                             clique_sum_decomposition, decomposition_document, read_decomposition, torso,
                             trivial_decomposition, validate_decomposition, write_decomposition)
from ._driver import genpm_decomposed, merge_all
from ._generators import (DiskDrawing, complete, complete_bipartite, cylindrical_drawing, cylindrical_grid,
                          cylindrical_grid_ring_blowup, cylindrical_grid_rotation, disk_drawing, grid, grid_rotation,
                          q_graph, random_apex_planar, random_planar, random_planar_embedded, ring_blowup,
                          segregated_shallow_vortex_grid, shallow_vortex_grid)
from ._graph import (Graph, as_matching, connected_components, edge_key, enumerate_perfect_matchings,
                     genpm_bruteforce, graph_document, has_perfect_matching, is_extendable, matched_vertices,
                     max_matching, read_graph, warn_on_weights, weight_labels, write_graph)
from ._matchgates import Matchgate, build_matchgate
from ._pfaffian import (Orientation, SkewMatrix, genpm_planar, genpm_surface, kasteleyn_orient, matching_sign,
                        pfaffian, skew_matrix)
from ._planar import (RotationSystem, check_embedding, cofacial, embeds_with_faces, euler_genus, face_vertices, faces,
                      is_planar, planar_embed, read_rotation, splice)
from ._poly import ONE, X, ZERO, PolyFrac, as_laurent, evaluate, format_polyfrac, monomial, parse_polyfrac

try:
    from ._version import version as __version__
except ImportError:
    __version__ = '0.0.0'


def genpm(g, weights=None, method=None, decomposition=None, options=None):
    '''
    The generating function of the perfect matchings of ``g``: the sum over
    perfect matchings M of x**w(M), with w the graph's weights overridden by
    ``weights`` where given.
    '''
    options = process_options(options)
    quiet = options['quiet']
    warn_on_weights(g, weights)

    if method is None:
        if decomposition is not None:
            if not quiet: print("Decomposition provided, applying the decomposition driver")
            method = 'decomposition'
        elif g.vertex_count <= options['oracle_cap']:
            if not quiet: print("Graph within the oracle cap, applying BRUTEFORCE")
            method = 'bruteforce'
        elif is_planar(g):
            if not quiet: print("Planar graph above the oracle cap, applying PFAFFIAN")
            method = 'pfaffian'
        else:
            raise TooLarge(f"The graph has {g.vertex_count} vertices, more than the oracle cap of "
                           f"{options['oracle_cap']}, and is not planar; provide a decomposition")
    else:
        method = method.lower()
        if method not in ('bruteforce', 'pfaffian', 'decomposition'):
            raise ValueError(f"Method must be one of BRUTEFORCE, PFAFFIAN, or DECOMPOSITION, not '{method}'")
        if method != 'decomposition' and decomposition is not None:
            raise ValueError("A decomposition was provided for a method that cannot use it")

    if method == 'bruteforce':
        return genpm_bruteforce(g, weight_labels(g, weights), options)
    if method == 'pfaffian':
        return genpm_planar(g, weight_labels(g, weights))
    if decomposition is None:
        decomposition = trivial_decomposition(g, options['k'])
    return genpm_decomposed(g, weights, decomposition, options=options)


def count_perfect_matchings(g, decomposition=None, method=None, options=None):
    '''The number of perfect matchings: the unit-weight generating function at x = 1.'''
    unit = {e: 0 for e in g.edges}
    value = evaluate(genpm(g, unit, method, decomposition, options), 1)
    return int(value)


def matching_weights(g, weights=None, decomposition=None, method=None, options=None):
    '''The number of perfect matchings of every total weight that occurs, as a map weight -> count.'''
    return dict(sorted(as_laurent(genpm(g, weights, method, decomposition, options)).items()))


def exact_matching(g, weights, target, decomposition=None, method=None, options=None):
    '''
    Whether ``g`` has a perfect matching of total weight ``target``, and how
    many it has. For several targets, read them off ``matching_weights``.
    '''
    count = matching_weights(g, weights, decomposition, method, options).get(target, 0)
    return count > 0, count
