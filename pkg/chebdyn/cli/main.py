import argparse
import logging
import sys

from ..chebyshev import lemma31_check, verify_theorem
from ..decomposition import decompose, minimality_oracle
from ..dynamics import DEFAULT_LEVEL_LIMIT, classify, cycles_at_level
from ..errors import ChebdynError, ContractError, UsageError
from ..polynomial import chebyshev_recurrence
from ..report import (Report, ReportDocument, cycles_to_dict, decomposition_to_dict, lemma_to_dict,
                      oracle_to_dict, verdict_to_dict)
from .expr import parse_balls, parse_poly

logger = logging.getLogger('chebdyn')

EXIT_OK = 0
EXIT_FAIL = 1


class ArgumentParser(argparse.ArgumentParser):
    """Reports bad command lines as UsageError instead of exiting from inside argparse."""

    def error(self, message):
        raise UsageError(message)


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} is not a positive integer")
    return value


def polynomial_of(args):
    if getattr(args, 'poly', None) is not None:
        return parse_poly(args.poly)
    return chebyshev_recurrence(args.m)


def cmd_coeffs(args):
    report = lemma31_check(args.m)
    payload = lemma_to_dict(report, args.check_lemma)
    failed = args.check_lemma and not report.passed
    return ReportDocument('coefficients', payload), EXIT_FAIL if failed else EXIT_OK


def cmd_decompose(args):
    f = polynomial_of(args)
    decomposition = decompose(f, args.max_level, args.level_cap)
    return ReportDocument('decomposition', decomposition_to_dict(decomposition, f)), EXIT_OK


def cmd_verify(args):
    verdict = verify_theorem(args.m, args.max_level, args.level_cap)
    return ReportDocument('verdict', verdict_to_dict(verdict)), EXIT_OK if verdict.passed else EXIT_FAIL


def cmd_classify(args):
    f = parse_poly(args.poly)
    classified = [(c, classify(f, c)) for c in cycles_at_level(f, args.level, args.level_cap)]
    return ReportDocument('cycles', cycles_to_dict(f, args.level, classified)), EXIT_OK


def cmd_oracle_minimal(args):
    f = parse_poly(args.poly)
    balls = parse_balls(args.balls)
    minimal = minimality_oracle(f, balls, args.check_level, args.level_cap)
    return ReportDocument('oracle', oracle_to_dict(f, balls, args.check_level, minimal)), EXIT_OK


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog='chebdyn', description="2-adic dynamics of integer polynomials")
    parser.add_argument('--format', default='json', help="Report format: json (default) or text")
    parser.add_argument('--debug', action='store_true', help="Enable debugging")
    parser.add_argument('--level-cap', type=positive_int, default=DEFAULT_LEVEL_LIMIT,
                        help=f"Largest level n whose 2^n residues may be enumerated (default {DEFAULT_LEVEL_LIMIT})")
    # subcommands accept --format too; SUPPRESS keeps the global value when it is absent
    format_option = ArgumentParser(add_help=False)
    format_option.add_argument('--format', default=argparse.SUPPRESS, help="Report format: json or text")

    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    cheb = commands.add_parser('cheb', help="Chebyshev polynomial data")
    cheb_commands = cheb.add_subparsers(dest='cheb_command', metavar='command')
    cheb_commands.required = True
    coeffs = cheb_commands.add_parser('coeffs', parents=[format_option],
                                      help="Odd coefficients of T_m and their valuations")
    coeffs.add_argument('--m', type=int, required=True)
    coeffs.add_argument('--check-lemma', action='store_true',
                        help="Check the valuation pattern of the coefficients")
    coeffs.set_defaults(handler=cmd_coeffs)

    dec = commands.add_parser('decompose', parents=[format_option],
                               help="Minimal decomposition of Z_2 up to a level")
    source = dec.add_mutually_exclusive_group(required=True)
    source.add_argument('--m', type=int, help="Use the Chebyshev polynomial T_m")
    source.add_argument('--poly', help="Integer polynomial in x, e.g. '4*x^3 - 3*x'")
    dec.add_argument('--max-level', type=positive_int, required=True)
    dec.set_defaults(handler=cmd_decompose)

    verify = commands.add_parser('verify', parents=[format_option],
                                  help="Compare the computed decomposition of T_m with the predicted one")
    verify.add_argument('--m', type=int, required=True)
    verify.add_argument('--max-level', type=positive_int, required=True)
    verify.set_defaults(handler=cmd_verify)

    cls = commands.add_parser('classify', parents=[format_option],
                               help="Cycles of f mod 2^n and their behavior")
    cls.add_argument('--poly', required=True)
    cls.add_argument('--level', type=positive_int, required=True)
    cls.set_defaults(handler=cmd_classify)

    oracle = commands.add_parser('oracle', help="Brute-force checks on Z/2^n Z")
    oracle_commands = oracle.add_subparsers(dest='oracle_command', metavar='command')
    oracle_commands.required = True
    minimal = oracle_commands.add_parser('minimal', parents=[format_option],
                                         help="Is f minimal on a union of balls?")
    minimal.add_argument('--poly', required=True)
    minimal.add_argument('--balls', required=True, help="Comma-separated balls like '5+2^5,13+2^5'")
    minimal.add_argument('--check-level', type=positive_int, required=True)
    minimal.set_defaults(handler=cmd_oracle_minimal)

    return parser


def command_of(args) -> dict:
    return {key: value for key, value in sorted(vars(args).items())
            if key not in ('handler', 'debug') and value is not None}


def main(argv=None) -> int:
    report = Report('json')
    try:
        args = build_parser().parse_args(argv)

        if args.debug:
            logging.basicConfig(level=logging.DEBUG)
        else:
            logging.basicConfig(level=logging.WARNING)

        report = Report(args.format)
        if getattr(args, 'm', None) is not None and args.m < 2:
            raise ContractError(f"m must be at least 2, got {args.m}")
        document, status = args.handler(args)
        document = ReportDocument(document.kind, document.payload, command_of(args))
    except ChebdynError as e:
        logger.error("%s", e.message)
        print(report.render(ReportDocument('error', e.asdict())))
        return e.exit_status

    print(report.render(document))
    return status


if __name__ == '__main__':
    sys.exit(main())
