'''
Command-line front end.

Exit codes: 0 success, 1 unreadable input, 2 validation failure, 3 resource
limit, 4 internal invariant violation.
'''
import argparse
import json
import logging
import sys

from ._graph import genpm_bruteforce, read_graph, warn_on_weights, weight_labels, write_graph
from ._boundary import dump_table
from ._common import (EmbeddingBroken, FormatError, InvalidDecomposition, MatchpolyError, TooLarge, ValidationFailed,
                      WorkLimitExceeded, default_options, invoker, process_options)
from ._driver import genpm_decomposed
from ._decomposition import (apex_planar_decomposition, auto_decomposition, read_decomposition, trivial_decomposition,
                             validate_decomposition)
from ._generators import (complete, complete_bipartite, cylindrical_grid, cylindrical_grid_ring_blowup,
                          cylindrical_grid_rotation, grid, grid_rotation, q_graph, random_apex_planar,
                          random_planar_embedded, segregated_shallow_vortex_grid, shallow_vortex_grid)
from ._planar import read_rotation
from ._pfaffian import genpm_surface
from ._poly import as_laurent, evaluate, format_polyfrac

logger = logging.getLogger(__name__)

# family -> (parameter names, constructor)
FAMILIES = {
    'shallow-vortex-grid': (('k',), shallow_vortex_grid),
    'segregated-shallow-vortex-grid': (('k',), segregated_shallow_vortex_grid),
    'cylindrical-grid': (('t', 's'), cylindrical_grid),
    'cylindrical-grid-ring-blowup': (('t', 's'), cylindrical_grid_ring_blowup),
    'q-graph': (('s', 'r'), q_graph),
    'grid': (('n', 'm'), grid),
    'complete': (('n',), complete),
    'complete-bipartite': (('a', 'b'), complete_bipartite),
    'random-planar': (('n',), None),
    'random-apex-planar': (('n', 'apexes'), None),
}


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--k', type=int, default=default_options['k'], help='bound on boundary, apex and adhesion sizes')
    common.add_argument('--oracle-cap', type=int, default=default_options['oracle_cap'],
                        help='largest graph the enumeration oracle accepts')
    common.add_argument('--work-limit', type=int, default=default_options['work_limit'],
                        help='candidate matchings per table operation')
    common.add_argument('--threads', type=int, default=default_options['threads'], help='subtrees resolved in parallel')
    common.add_argument('--json', action='store_true', help='machine-readable output')
    common.add_argument('-v', '--verbose', action='count', default=0, help='log progress to standard error')

    decomposition = argparse.ArgumentParser(add_help=False)
    source = decomposition.add_mutually_exclusive_group()
    source.add_argument('--decomposition', metavar='FILE', help='decomposition JSON file')
    source.add_argument('--auto', action='store_true', help='find a single-bag apex decomposition')
    source.add_argument('--apex', metavar='LIST', help='apex vertices, e.g. "v0,v1" or "0,1"')
    decomposition.add_argument('--dump-tables', action='store_true', help='write every node table to standard error')

    parser = argparse.ArgumentParser(prog='matchpoly', description='Generating functions of weighted perfect matchings.')
    commands = parser.add_subparsers(dest='command', required=True)
    for name, text in (('genpm', 'generating function over a decomposition'),
                       ('count', 'number of perfect matchings')):
        sub = commands.add_parser(name, parents=[common, decomposition], help=text)
        sub.add_argument('graph', help='graph JSON file, - for standard input')
    sub = commands.add_parser('exact', parents=[common, decomposition], help='perfect matchings of a given weight')
    sub.add_argument('graph')
    sub.add_argument('--target', type=int, required=True)
    sub = commands.add_parser('validate', parents=[common, decomposition], help='check a decomposition')
    sub.add_argument('graph')
    for name, text in (('oracle', 'generating function by enumeration'),
                       ('fkt', 'generating function of a planar graph by the Pfaffian kernel')):
        sub = commands.add_parser(name, parents=[common], help=text)
        sub.add_argument('graph')
    sub = commands.add_parser('gen', parents=[common], help='generate a graph family')
    sub.add_argument('family', choices=sorted(FAMILIES))
    sub.add_argument('params', type=int, nargs='*')
    sub.add_argument('--seed', type=int, default=0)
    sub.add_argument('--with-embedding', action='store_true', help='add the canonical rotation system')
    return parser


def _read_text(path):
    if path == '-':
        return sys.stdin.read()
    try:
        with open(path, encoding='utf-8') as f:
            return f.read()
    except OSError as e:
        raise FormatError(f'cannot read {path}: {e.strerror}') from e


def _parse_apex(text):
    try:
        return [int(v.strip().lstrip('v')) for v in text.split(',') if v.strip()]
    except ValueError as e:
        raise FormatError(f"--apex must list vertices as 'v0,v1' or '0,1', not '{text}'") from e


def _decomposition(args, g):
    if args.decomposition:
        return read_decomposition(_read_text(args.decomposition))
    if args.apex is not None:
        return apex_planar_decomposition(g, _parse_apex(args.apex))
    if args.auto:
        d = auto_decomposition(g, args.k, args.work_limit)
        if d is None:
            raise InvalidDecomposition(f'no apex set of at most {args.k} vertices leaves the graph planar')
        return d
    return trivial_decomposition(g, args.k)


def _emit(args, key, value, text=None):
    if args.json:
        print(json.dumps({key: value}, sort_keys=True))
    else:
        print(value if text is None else text)


def _run(args):
    options = process_options({'k': args.k, 'oracle_cap': args.oracle_cap, 'work_limit': args.work_limit,
                               'threads': args.threads})
    if args.command == 'gen':
        return _generate(args)
    document = _read_text(args.graph)
    g = read_graph(document)
    warn_on_weights(g)

    if args.command == 'oracle':
        _emit(args, 'genpm', format_polyfrac(genpm_bruteforce(g, weight_labels(g), options)))
        return 0
    if args.command == 'fkt':
        _emit(args, 'genpm', format_polyfrac(genpm_surface(g, weight_labels(g), 0, read_rotation(document), options)))
        return 0

    d = _decomposition(args, g)
    if args.command == 'validate':
        report = validate_decomposition(g, d, args.k)
        _emit(args, 'report', report.as_dict(), 'ok' if report.ok else report.describe())
        return 0 if report.ok else 2

    on_table = None
    if args.dump_tables:
        def on_table(t, host, table):
            print(f'# node {t}, boundary {sorted(host.boundary)}', file=sys.stderr)
            if table:
                print(dump_table(table), file=sys.stderr)

    if args.command == 'genpm':
        _emit(args, 'genpm', format_polyfrac(genpm_decomposed(g, None, d, options=options, on_table=on_table)))
    elif args.command == 'count':
        unit = {e: 0 for e in g.edges}
        value = genpm_decomposed(g, unit, d, options=options, on_table=on_table)
        _emit(args, 'count', int(evaluate(value, 1)))
    else:
        value = genpm_decomposed(g, None, d, options=options, on_table=on_table)
        count = as_laurent(value).get(args.target, 0)
        found = count > 0
        _emit(args, 'exact', {'exists': found, 'count': count}, f'{str(found).lower()} {count}')
    return 0


def _generate(args):
    names, constructor = FAMILIES[args.family]
    if len(args.params) != len(names):
        raise FormatError(f"{args.family} takes the parameters {', '.join(names)}")
    params = dict(zip(names, args.params))
    rotation = None
    if args.family == 'random-planar':
        g, r = random_planar_embedded(params['n'], args.seed)
        rotation = r.as_dict()
    elif args.family == 'random-apex-planar':
        g = random_apex_planar(params['n'], params['apexes'], args.seed)
    else:
        g = constructor(*args.params)
    if args.with_embedding:
        if args.family == 'grid':
            rotation = grid_rotation(*args.params).as_dict()
        elif args.family == 'cylindrical-grid':
            rotation = cylindrical_grid_rotation(*args.params).as_dict()
        elif rotation is None:
            logger.warning('%s has no canonical embedding; writing the graph only', args.family)
    print(write_graph(g, rotation if args.with_embedding else None))
    return 0


def _fail(e, code, what=''):
    message = str(e)
    if message.startswith(f'{invoker}: '):
        message = message[len(invoker) + 2:]
    print(f'{invoker}: {what}{message}', file=sys.stderr)
    return code


def main(argv=None):
    args = _parser().parse_args(argv)
    logging.basicConfig(stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s',
                        level=logging.DEBUG if args.verbose > 1 else logging.INFO if args.verbose else logging.WARNING)
    try:
        return _run(args)
    except FormatError as e:
        return _fail(e, 1)
    except ValidationFailed as e:
        return _fail(e, 2, 'invalid decomposition: ')
    except (TooLarge, WorkLimitExceeded) as e:
        return _fail(e, 3)
    except EmbeddingBroken as e:
        return _fail(e, 4, 'internal error: ')
    except ValueError as e:
        return _fail(e, 2)
    except MatchpolyError as e:
        return _fail(e, 4, 'internal error: ')


if __name__ == '__main__':
    raise SystemExit(main())
