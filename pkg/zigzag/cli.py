"""``zz``: command line front end to the zigzag calculus.

Pairs, words and graphs are passed as JSON, inline or as a file path (``-``
reads stdin). Rationals are ``"p/q"`` strings. Output goes to stdout or
``--output``; logging goes to stderr.

Exit codes: 0 on success, 1 when a domain precondition fails (or a free
family is not certified), 2 on malformed input or usage errors.
"""

import argparse
import sys

from zigzag.errors import ZigzagError, SerializationError
from zigzag.PairClass import PairClass
from zigzag.ZigzagType import ZigzagType, reversion_trace
from zigzag.construction import dual_graph, section_augmented_graph, surface_report, emit_equations
from zigzag.moduli import pairs_isomorphic, apply_reversion
from zigzag.words import BirWord, WordReducer, certify_free_family, repair_shift, pi1_loop_profile
from zigzag.network import FibrationGraph, build_graph
from zigzag.automorphisms import aut_structure
from zigzag.util.config import DEFAULT_FAMILY
from zigzag.util.jsonio import dumps, loads
from zigzag.util.rationals import parse_rational, parse_rational_list

import logging
logger = logging.getLogger(__name__)


EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _read_json(value, what):
    """Inline JSON, ``-`` for stdin, or a path to a JSON file."""
    if value == '-':
        text = sys.stdin.read()
    elif value.lstrip().startswith(('{', '[')):
        text = value
    else:
        try:
            with open(value) as f:
                text = f.read()
        except OSError as e:
            raise SerializationError("Can't read %s from `%s`: %s" % (what, value, e))
    return loads(text, what)


def _pair(value):
    return PairClass.from_json(_read_json(value, "pair"))


def _type(text):
    try:
        return ZigzagType(int(x) for x in text.split(',') if x.strip())
    except ValueError:
        raise SerializationError("Malformed zigzag type `%s`; expected comma separated integers." % text)


def _need(args, name):
    if getattr(args, name) is None:
        raise UsageError("--%s is required for `%s`." % (name.replace('_', '-'), args.command))
    return getattr(args, name)


# -- Subcommands; each returns (text, exit code)

def cmd_classify(args):
    pair = _pair(_need(args, 'pair'))
    if args.format == 'json':
        return dumps({
            'pair' : pair.to_json(),
            'zigzag_type' : pair.zigzag_type.to_json(),
        }), EXIT_OK
    return pair.case + "\n", EXIT_OK


def cmd_graph_dual(args):
    pair = _pair(_need(args, 'pair'))
    if args.format == 'text':
        if args.center is not None:
            raise UsageError("--lambda only applies to the dot and json formats of `graph-dual`.")
        return surface_report(pair.P, pair.Q).to_text(), EXIT_OK
    if args.center is None:
        g = dual_graph(pair.P, pair.Q)
    else:
        g = section_augmented_graph(pair.P, pair.Q, parse_rational(args.center))
    if args.format == 'json':
        out = g.to_json()
        out['surface'] = surface_report(pair.P, pair.Q).to_json()
        return dumps(out), EXIT_OK
    return g.to_dot(), EXIT_OK


def cmd_graph_fibrations(args):
    if args.graph is not None:
        g = FibrationGraph.from_json(_read_json(args.graph, "fibration graph"))
    else:
        seed = _pair(_need(args, 'pair'))
        g = build_graph(seed, parse_rational_list(args.centers), args.depth)
    out = g.export(args.format)
    if args.format == 'dot' and not out.endswith("\n"):
        out += "\n"
    return out, EXIT_OK


def cmd_iso(args):
    first = _pair(_need(args, 'pair'))
    second = _pair(_need(args, 'other'))
    witness = pairs_isomorphic(first, second)
    if args.format == 'json':
        return dumps({
            'isomorphic' : witness is not None,
            'witness' : None if witness is None else witness.to_json(),
        }), EXIT_OK
    if witness is None:
        return "not isomorphic\n", EXIT_OK
    return "isomorphic: %r\n" % witness, EXIT_OK


def cmd_revert(args):
    pair = _pair(_need(args, 'pair'))
    target = apply_reversion(pair, parse_rational(_need(args, 'center')))
    if args.format == 'json':
        return dumps(target.to_json()), EXIT_OK
    return "%s\n" % target, EXIT_OK


def cmd_reduce(args):
    word = BirWord.from_json(_read_json(_need(args, 'word'), "word"))
    reduced = WordReducer(args.strategy, args.seed).run(word)
    if args.format == 'json':
        out = reduced.to_json()
        out['length'] = reduced.length
        if reduced.is_closed():
            out['loop_profile'] = pi1_loop_profile(reduced).to_json()
        return dumps(out), EXIT_OK
    return "%r\nlength %i\n" % (reduced, reduced.length), EXIT_OK


def _family(args):
    return parse_rational_list(args.family if args.family is not None else DEFAULT_FAMILY)


def cmd_aut(args):
    pair = _pair(_need(args, 'pair'))
    report = aut_structure(pair, _family(args), max_syllables = args.max_syllables, jobs = args.jobs)
    if args.format == 'json':
        return dumps(report.to_json()), EXIT_OK
    return report.to_text(), EXIT_OK


def cmd_certify_free(args):
    base = _pair(_need(args, 'pair'))
    if args.repair:
        cert = repair_shift(base, _family(args), max_syllables = args.max_syllables, jobs = args.jobs)
    else:
        cert = certify_free_family(base, _family(args), max_syllables = args.max_syllables, jobs = args.jobs)
    if not cert.ok:
        print("zz: %s" % cert.failure, file = sys.stderr)
    return dumps(cert.to_json()), EXIT_OK if cert.ok else EXIT_DOMAIN


def cmd_equations(args):
    pair = _pair(_need(args, 'pair'))
    eqs = emit_equations(pair.P, pair.Q)
    if args.format == 'json':
        return dumps(eqs.to_json()), EXIT_OK
    return eqs.to_text(factored = args.factored), EXIT_OK


def cmd_trace_type(args):
    trace = reversion_trace(_type(_need(args, 'type')))
    if args.format == 'json':
        return dumps(trace.to_json()), EXIT_OK
    return trace.to_text(), EXIT_OK


COMMANDS = {
    'classify' : (cmd_classify, ('text', 'json'), "Print the construction case of a pair."),
    'graph-dual' : (cmd_graph_dual, ('dot', 'json', 'text'), "Dual graph of the boundary and degenerate fibre; text gives the singularity report."),
    'graph-fibrations' : (cmd_graph_fibrations, ('dot', 'json'), "Explore the fibration graph around a pair, or re-export a saved one."),
    'iso' : (cmd_iso, ('json', 'text'), "Decide whether two pairs are isomorphic."),
    'revert' : (cmd_revert, ('json', 'text'), "Apply a reversion to a pair."),
    'reduce' : (cmd_reduce, ('json', 'text'), "Reduce a birational word."),
    'aut' : (cmd_aut, ('text', 'json'), "Describe the automorphism group of the surface of a pair."),
    'certify-free' : (cmd_certify_free, ('json',), "Certify that a family of zeta words generates a free group."),
    'equations' : (cmd_equations, ('text', 'json'), "Print the equations of the surface in affine 4-space."),
    'trace-type' : (cmd_trace_type, ('text', 'json'), "Trace the moves of a reversion on a zigzag type."),
}


def build_parser():
    ap = argparse.ArgumentParser(prog = 'zz', description = __doc__,
                                 formatter_class = argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest = 'command', metavar = 'command')
    sub.required = True
    for name, (_, formats, summary) in COMMANDS.items():
        p = sub.add_parser(name, help = summary, description = summary)
        p.add_argument("-v", "--verbose", action = "count", default = 0,
                       help = "-v for progress messages, -vv for every step")
        p.add_argument("--format", choices = formats, default = formats[0])
        p.add_argument("--output", default = None, help = "Write to this file instead of stdout")
        if name != 'trace-type' and name != 'reduce':
            p.add_argument("--pair", default = None,
                           help = 'Pair JSON, e.g. \'{"P":["0/1","1/1"],"Q":["0/1","1/1"]}\', a file or -')
        if name == 'graph-dual':
            p.add_argument("--lambda", dest = 'center', default = None,
                           help = "Add the sections through this point of F")
        elif name == 'graph-fibrations':
            p.add_argument("--centers", default = "0,1", help = "Comma separated reversion centers")
            p.add_argument("--depth", type = int, default = 2)
            p.add_argument("--graph", default = None, help = "Re-export a graph saved as JSON")
        elif name == 'iso':
            p.add_argument("--other", default = None, help = "The second pair")
        elif name == 'revert':
            p.add_argument("--center", "--lambda", dest = 'center', default = None)
        elif name == 'reduce':
            p.add_argument("--word", default = None, help = "Word JSON, a file or -")
            p.add_argument("--strategy", choices = WordReducer.STRATEGIES, default = WordReducer.LEFTMOST)
            p.add_argument("--seed", type = int, default = None)
        elif name in ('aut', 'certify-free'):
            p.add_argument("--family", default = None,
                           help = "Comma separated parameters (default $ZIGZAG_DEFAULT_FAMILY or 0,...,10)")
            p.add_argument("--max-syllables", type = int, default = 2 if name == 'aut' else 3)
            p.add_argument("--jobs", type = int, default = 1)
            if name == 'certify-free':
                p.add_argument("--repair", action = "store_true",
                               help = "Replace Q(w) by Q(w + t) until the family is certified")
        elif name == 'equations':
            p.add_argument("--factored", action = "store_true")
        elif name == 'trace-type':
            p.add_argument("--type", default = None, help = "Standard type, e.g. 0,-1,-3,-4")
    return ap


def _configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level = level, stream = sys.stderr, format = "%(levelname)s %(name)s: %(message)s")


def main(argv = None):
    """Run ``zz`` and return its exit code."""
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return e.code
    _configure_logging(args.verbose)
    handler = COMMANDS[args.command][0]

    try:
        text, code = handler(args)
    except UsageError as e:
        print("zz %s: %s" % (args.command, e), file = sys.stderr)
        return EXIT_USAGE
    except SerializationError as e:
        print("zz %s: malformed input: %s" % (args.command, e), file = sys.stderr)
        return EXIT_USAGE
    except ZigzagError as e:
        print("zz %s: %s" % (args.command, e), file = sys.stderr)
        return EXIT_DOMAIN
    except ValueError as e:
        print("zz %s: %s" % (args.command, e), file = sys.stderr)
        return EXIT_USAGE

    if args.output is None:
        sys.stdout.write(text)
    else:
        with open(args.output, 'w') as f:
            f.write(text)
    return code