import argparse
import logging
import sys
from contextlib import redirect_stderr, redirect_stdout, suppress
from pathlib import Path
from typing import Callable, List, Optional, Sequence, TextIO

from .__version__ import __version__
from .axioms import is_clone_structure
from .clones import all_clone_sets, brute_force_clone_sets
from .config import DEFAULT_CONFIG, AnalysisConfig, load_config
from .exceptions import CloneLabError, NotACloneStructure, SerializerError
from .family import SetFamily
from .generators import random_profile, random_tree
from .pqtree import build_tree, to_dot, tree_to_family
from .profile import DecloneResult, Profile
from .serializers import (
    PROFILE_SERIALIZER, AxisModel, VoterOrderModel, declone_to_json, dump_profile, family_from_json,
    family_to_json, profile_to_json, reduction_to_json, report_to_json, to_json, tree_from_json, tree_to_json,
)
from .single_crossing import (
    brute_force_sc, brute_force_sc_declone_fixed, is_single_crossing, parse_x3c, sc_declone_exact, sc_declone_fixed,
    x3c_reduction,
)
from .single_peaked import (
    Color, basic_declone_sp, brute_force_axis, brute_force_optimal_sp_declone, clone_tree, declone_sp,
    is_single_peaked,
)
from .synthesis import (
    implement_family, implement_fat, implement_single_crossing, implement_single_peaked_tree, implement_string, slide,
)

__all__ = 'run', 'main'

logger = logging.getLogger(__name__)

SUCCESS, NEGATIVE, FAILURE = 0, 1, 2


class Negative(Exception):
    """ The analysis answered "no" """


class Context:
    def __init__(self, args: argparse.Namespace, stdin: TextIO, stdout: TextIO):
        self.args = args
        self.stdin = stdin
        self.stdout = stdout
        self.config: AnalysisConfig = DEFAULT_CONFIG if args.config is None else load_config(args.config)

    @property
    def text(self) -> bool:
        return self.args.format == 'text'

    def read(self, path: str) -> str:
        if path == '-':
            return self.stdin.read()
        return Path(path).read_text(encoding='utf-8')

    def profile(self) -> Profile:
        return PROFILE_SERIALIZER.loads(self.read(self.args.input))

    def family(self) -> SetFamily:
        return family_from_json(self.read(self.args.input))

    def write(self, value: str):
        self.stdout.write(value)

    def write_profile(self, profile: Profile):
        self.write(dump_profile(profile) if self.text else to_json(profile_to_json(profile)))

    def write_family(self, family: SetFamily, names: Optional[Sequence[str]] = None):
        if not self.text:
            return self.write(to_json(family_to_json(family)))
        for members in family.to_lists():
            self.write(','.join(str(c) if names is None else names[c] for c in members) + '\n')

    def write_declone(self, result: DecloneResult):
        if self.text:
            return self.write_profile(result.profile)
        self.write(to_json(declone_to_json(result)))

    def write_report(self, report):
        if not self.text:
            return self.write(to_json(report_to_json(report)))
        if report.verdict:
            return self.write('clone structure\n')
        for violation in report.violations:
            self.write(f'{violation.axiom}: ' + ' '.join(str(sorted(s)) for s in violation.witness) + '\n')


def _clones(ctx: Context):
    profile = ctx.profile()
    if ctx.args.oracle:
        family = brute_force_clone_sets(profile, ctx.config.clone_oracle_limit)
    else:
        family = all_clone_sets(profile)
    ctx.write_family(family, profile.names)


def _check_family(ctx: Context):
    report = is_clone_structure(ctx.family())
    ctx.write_report(report)
    if not report.verdict:
        raise Negative('The family is not a clone structure')


def _family_or_profile(ctx: Context) -> SetFamily:
    data = ctx.read(ctx.args.input)
    with suppress(SerializerError):
        return family_from_json(data)
    return all_clone_sets(PROFILE_SERIALIZER.loads(data))


def _pqtree(ctx: Context):
    family = _family_or_profile(ctx)
    try:
        tree = build_tree(family)
    except NotACloneStructure as e:
        ctx.write_report(e.report)
        raise Negative(str(e)) from e

    if ctx.args.dot:
        ctx.write(to_dot(tree))
    elif ctx.text:
        ctx.write(repr(tree.root) + '\n')
    else:
        ctx.write(to_json(tree_to_json(tree)))


def _implement(ctx: Context):
    family = ctx.family()
    mode = ctx.args.mode
    if mode == 'generic':
        profile = implement_family(family)
    elif mode == 'single-crossing':
        profile = implement_single_crossing(family)
    else:
        profile = implement_single_peaked_tree(build_tree(family))
    ctx.write_profile(profile)


def _sp_check(ctx: Context):
    profile = ctx.profile()
    if ctx.args.oracle:
        axis = brute_force_axis(profile, ctx.config.axis_oracle_limit)
    else:
        axis = is_single_peaked(profile)
    if axis is None:
        raise Negative('The profile is not single-peaked')

    if ctx.text:
        ctx.write(','.join(map(profile.name, axis)) + '\n')
    else:
        ctx.write(to_json(AxisModel(axis=list(axis))))


def _sp_declone(ctx: Context):
    profile = ctx.profile()
    colors = None
    if ctx.args.oracle:
        result = brute_force_optimal_sp_declone(profile, ctx.config.sp_declone_oracle_limit)
    elif ctx.args.algorithm == 'basic':
        result, colors = basic_declone_sp(profile)
    else:
        result = declone_sp(profile)

    if not ctx.args.dot:
        return ctx.write_declone(result)

    tree = clone_tree(profile)
    if colors is None:
        # the nodes entirely inside a collapsed block are black
        colors = {
            index: Color.BLACK if any(node.leaves() <= block for block in result.blocks) else Color.WHITE
            for index, node in enumerate(tree.nodes)
        }
    ctx.write(to_dot(tree, profile.names, colors))


def _voter_order(value: str) -> List[int]:
    try:
        return [int(x) for x in value.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError(f'Expected comma separated voter indices, got {value!r}') from None


def _sc_check(ctx: Context):
    profile = ctx.profile()
    if ctx.args.oracle:
        order = brute_force_sc(profile, ctx.config.sc_oracle_limit)
    else:
        order = is_single_crossing(profile)
    if order is None:
        raise Negative('The profile is not single-crossing')

    if ctx.text:
        ctx.write(','.join(map(str, order)) + '\n')
    else:
        ctx.write(to_json(VoterOrderModel(order=list(order))))


def _sc_declone_fixed(ctx: Context):
    profile = ctx.profile()
    order = ctx.args.order
    if order is None:
        order = list(range(profile.n))
    if ctx.args.oracle:
        result = brute_force_sc_declone_fixed(profile, order, ctx.config.exact_search_limit)
    else:
        result = sc_declone_fixed(profile, order)
    ctx.write_declone(result)


def _sc_declone_exact(ctx: Context):
    result = sc_declone_exact(ctx.profile(), ctx.args.k, ctx.config.exact_search_limit)
    if result is None:
        raise Negative(f'No single-crossing decloning keeps {ctx.args.k} candidates')
    ctx.write_declone(result)


def _gen(ctx: Context):
    args = ctx.args
    kind = args.kind
    simple = {'string': implement_string, 'fat': implement_fat, 'slide': slide}
    if kind in simple:
        return ctx.write_profile(simple[kind](args.m))
    if kind == 'compose-from-tree':
        return ctx.write_profile(implement_family(tree_to_family(tree_from_json(ctx.read(args.tree)))))
    if kind == 'random':
        return ctx.write_profile(random_profile(args.m, args.n, args.seed))
    if kind == 'random-structure':
        return ctx.write_family(tree_to_family(random_tree(args.m, args.seed)))

    reduction = x3c_reduction(parse_x3c(ctx.read(args.file), args.k))
    if ctx.text:
        ctx.write(f'# target {reduction.target}\n')
        ctx.write_profile(reduction.profile)
    else:
        ctx.write(to_json(reduction_to_json(reduction)))


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=['json', 'text'], default='json', help='Output format')
    common.add_argument('--config', type=Path, default=None, help='YAML file with the analysis limits')
    common.add_argument('-v', '--verbose', action='count', default=0, help='More logging, may be repeated')

    oracle = argparse.ArgumentParser(add_help=False)
    oracle.add_argument('--oracle', action='store_true', help='Use the brute-force implementation')

    parser = argparse.ArgumentParser(prog='clonelab', description='Clone structures in elections')
    parser.add_argument('--version', action='version', version=__version__)
    subparsers = parser.add_subparsers(dest='command', required=True)

    def command(name: str, func: Callable, description: str, *parents):
        sub = subparsers.add_parser(name, help=description, parents=[common, *parents])
        sub.add_argument('input', help='Input file, "-" for stdin')
        sub.set_defaults(func=func)
        return sub

    command('clones', _clones, 'List all the clone sets of a profile', oracle)
    command('check-family', _check_family, 'Check whether a set family is a clone structure')
    sub = command('pqtree', _pqtree, 'Build the PQ-tree of a clone structure or a profile')
    sub.add_argument('--dot', action='store_true', help='Emit Graphviz source')
    sub = command('implement', _implement, 'Build a profile with the given clone structure')
    sub.add_argument('--mode', choices=['generic', 'single-crossing', 'single-peaked'], default='generic')
    command('sp-check', _sp_check, 'Find a single-peaked axis', oracle)
    sub = command('sp-declone', _sp_declone, 'Declone a profile until it is single-peaked', oracle)
    sub.add_argument('--algorithm', choices=['basic', 'full'], default='full')
    sub.add_argument('--dot', action='store_true', help='Emit the colored PQ-tree as Graphviz source')
    command('sc-check', _sc_check, 'Find a single-crossing voters order', oracle)
    sub = command('sc-declone-fixed', _sc_declone_fixed, 'Declone until single-crossing w.r.t. a voters order', oracle)
    sub.add_argument('--order', type=_voter_order, default=None, help='e.g. 0,2,1; the identity by default')
    sub = command('sc-declone-exact', _sc_declone_exact, 'Find a single-crossing decloning with at least K candidates')
    sub.add_argument('--k', type=int, required=True)

    gen = subparsers.add_parser('gen', help='Generate profiles and families')
    gen.set_defaults(func=_gen)
    kinds = gen.add_subparsers(dest='kind', required=True)
    for kind in ['string', 'fat', 'slide']:
        kinds.add_parser(kind, parents=[common]).add_argument('m', type=int)
    kinds.add_parser('compose-from-tree', parents=[common]).add_argument('tree')
    sub = kinds.add_parser('x3c', parents=[common])
    sub.add_argument('file')
    sub.add_argument('--k', type=int, default=None)
    sub = kinds.add_parser('random', parents=[common])
    sub.add_argument('m', type=int)
    sub.add_argument('n', type=int)
    sub.add_argument('--seed', type=int, required=True)
    sub = kinds.add_parser('random-structure', parents=[common])
    sub.add_argument('m', type=int)
    sub.add_argument('--seed', type=int, required=True)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    """ Executes one command, returns the exit code: 0 on success, 1 on a negative answer, 2 on errors """
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr

    try:
        with redirect_stdout(stdout), redirect_stderr(stderr):
            args = _parser().parse_args(argv)
    except SystemExit as e:
        return SUCCESS if e.code is None else int(e.code)

    # attached for the duration of this call only
    package = logging.getLogger(__package__)
    handler = logging.StreamHandler(stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    previous = package.level
    package.setLevel([logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)])
    package.addHandler(handler)

    try:
        args.func(Context(args, stdin, stdout))
    except Negative as e:
        stderr.write(f'{e}\n')
        return NEGATIVE
    except NotACloneStructure as e:
        stderr.write(f'{e}\n')
        return NEGATIVE
    except (CloneLabError, OSError, ValueError) as e:
        logger.debug('The command failed', exc_info=True)
        stderr.write(f'error: {e}\n')
        return FAILURE
    finally:
        package.removeHandler(handler)
        package.setLevel(previous)
    return SUCCESS


def main():
    sys.exit(run())
