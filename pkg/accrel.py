#!/usr/bin/env python3

"""AccRel command-line tool

This is the execution entry point. Every subcommand runs one family of checks (or evaluates an
expression), builds a Report, and writes it as canonical JSON: to --out if given, else to
stdout. The exit code is 0 when every check passed, 1 when some check failed (the report holds
the witnesses), and 2 for usage and input errors.
"""

import argparse
from fractions import Fraction
import sys
import traceback
from PyQt5.QtCore import QElapsedTimer
import common
import defaults
from accelerated import WitnessStatus, WorldlineError, check_comoving_frame, \
    check_exp_properties, check_hyperbolic_identities, check_unifob_axiom, certified_sinh, \
    default_grid, reparam_check, reparametrize_curve, transcendence_witness, unif_lifecurve
from analysis import AnalysisError, derivative_uniqueness_check
from exprparser import ExpressionError, ExpressionSyntaxError, evaluate_program, evaluate_text
from journal import DatabaseError, Journal, JournalDatabase, MemoryJournal
from minkowski import MinkowskiError
from ordered_field import FieldError, SampleConfig, check_ordered_field_axioms, context_by_name
from polynomial import PolynomialError
from preferences import Preferences, PreferencesError
from realalgebraic import RealAlgebraicError, check_real_closed, ra_decimal
from reports import AxiomReport, Report, ReportError, emit_report
from specrel import AXIOMS, ModelError, check_accelerated_axioms, check_axioms, default_model, \
    load_model

__copyright__ = '''
    Copyright (C) 2019 AccRel developers

    This program is free software: you can redistribute it and/or modify
    it under the terms of the GNU General Public License as published by
    the Free Software Foundation, either version 3 of the License, or
    (at your option) any later version.

    This program is distributed in the hope that it will be useful,
    but WITHOUT ANY WARRANTY; without even the implied warranty of
    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
    GNU General Public License for more details.

    You should have received a copy of the GNU General Public License
    along with this program.  If not, see <https://www.gnu.org/licenses/>.
'''
__author__ = common.AUTHOR
__credits__ = common.CREDITS
__license__ = common.LICENSE
__version__ = common.VERSION
__maintainer__ = common.MAINTAINER
__email__ = common.EMAIL
__status__ = common.STATUS

EXIT_PASSED = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# Usage and parse errors: bad flags, files, preferences or expression syntax.
INPUT_ERRORS = (AnalysisError, DatabaseError, ExpressionSyntaxError, MinkowskiError, ModelError,
                PreferencesError, ReportError, WorldlineError)

# Evaluation errors: the input parsed but its value does not exist in the field.
EVALUATION_ERRORS = (ExpressionError, FieldError, PolynomialError, RealAlgebraicError)

def excepthook(exc_type, exc_value, exc_traceback):
    """Ask for a bug report on unhandled exceptions.

    Also, call the old except hook to get the normal behavior as well.
    """
    exception_str = ''.join(traceback.format_exception(exc_type, exc_value, exc_traceback))
    sys.stderr.write('Unhandled exception (please send to %s)!\n\n%s\n' % (common.EMAIL,
                                                                          exception_str))

    sys.excepthook = sys.__excepthook__
    sys.excepthook(exc_type, exc_value, exc_traceback)

def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError('"%s" is not a rational number' % text)

def _positive_int(text):
    try:
        number = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError('"%s" is not an integer' % text)
    if number < 1:
        raise argparse.ArgumentTypeError('%s must be at least 1' % number)
    return number

class CommandLineTool():
    """Class that supports the AccRel command-line tools."""
    def __init__(self, argv=None, stdout=None):
        """Define the parsers and parse argv (sys.argv[1:] if None).

        Raises SystemExit(2) on usage errors, like argparse does.
        """
        self.stdout = stdout or sys.stdout

        # Flags every subcommand understands.
        options = argparse.ArgumentParser(add_help=False)
        options.add_argument('--context', choices=('rational', 'realalgebraic'),
                             help='Field context (default: realalgebraic for eval, else rational)')
        options.add_argument('--dim', type=int, help='Spacetime dimension d (default 3)')
        options.add_argument('--seed', type=int, help='Sampling seed')
        options.add_argument('--digits', type=_positive_int, help='Certified decimal digits')
        options.add_argument('--samples', type=_positive_int, help='Sample count override')
        options.add_argument('--threads', type=_positive_int, help='Worker threads')
        options.add_argument('--out', help='Write the JSON report here instead of stdout')
        options.add_argument('--journal', help='Also keep the journal in this SQLite file')
        options.add_argument('--settings', help='Preferences ini file (instead of the native one)')
        options.add_argument('--verbose', action='store_true', help='Echo the journal to stderr')
        options.add_argument('--timings', action='store_true',
                             help='Include wall-clock timings in the report')

        # Define top-level parser.
        parser = argparse.ArgumentParser(prog='accrel', description=common.APPLICATION_NAME)
        parser.add_argument('--version', '-v', action='version',
                            version=common.APPLICATION_NAME + ' v' + common.VERSION)
        parser.set_defaults(func=None)
        subparsers = parser.add_subparsers(dest='command')

        eval_parser = subparsers.add_parser('eval', parents=[options],
                                            help='Evaluate "name = expr; ... expr" exactly')
        eval_parser.set_defaults(func=self.evaluate)
        eval_parser.add_argument('expression')

        field_parser = subparsers.add_parser('verify-field', parents=[options],
                                             help='Check the ordered field axioms')
        field_parser.set_defaults(func=self.verify_field)

        rcf_parser = subparsers.add_parser('verify-rcf', parents=[options],
                                           help='Check that real algebraic numbers are real closed')
        rcf_parser.set_defaults(func=self.verify_rcf)

        specrel_parser = subparsers.add_parser('verify-specrel', parents=[options],
                                               help='Check the special relativity axioms')
        specrel_parser.set_defaults(func=self.verify_specrel)
        specrel_parser.add_argument('--model', help='Model description (JSON)')
        specrel_parser.add_argument('--axioms', nargs='+', choices=AXIOMS, default=list(AXIOMS))
        specrel_parser.add_argument('--accelerated', action='store_true',
                                    help='Also check the accelerated observers of the model')

        unifob_parser = subparsers.add_parser('verify-unifob', parents=[options],
                                              help='Check uniformly accelerated observers')
        unifob_parser.set_defaults(func=self.verify_unifob)
        unifob_parser.add_argument('--acceleration', type=_rational, default=Fraction(1))
        unifob_parser.add_argument('--offset', type=_rational, nargs='+')

        witness_parser = subparsers.add_parser('witness-e', parents=[options],
                                               help='Search for an integer polynomial root')
        witness_parser.set_defaults(func=self.witness)
        witness_parser.add_argument('--max-degree', type=int)
        witness_parser.add_argument('--max-height', type=int)
        witness_parser.add_argument('--value', help='Exact expression to test instead of e')
        witness_parser.add_argument('--precision-cap', type=_positive_int,
                                    default=defaults.WITNESS_PRECISION_CAP)

        reparam_parser = subparsers.add_parser('reparam', parents=[options],
                                               help='Fit delta(t) = gamma(epsilon t + c)')
        reparam_parser.set_defaults(func=self.reparam)
        reparam_parser.add_argument('--acceleration', type=_rational, default=Fraction(1))
        reparam_parser.add_argument('--epsilon', type=_rational, default=Fraction(1))
        reparam_parser.add_argument('--shift', type=_rational, default=Fraction(0))
        reparam_parser.add_argument('--delta-acceleration', type=_rational,
                                    help='Compare against another hyperbola instead')

        preferences_parser = subparsers.add_parser('preferences', parents=[options],
                                                   help='List, set or reset stored defaults')
        preferences_parser.set_defaults(func=self.preferences)
        preferences_parser.add_argument('action', choices=('list', 'set', 'reset'))
        preferences_parser.add_argument('key', nargs='?')
        preferences_parser.add_argument('value', nargs='?')

        self.parser = parser
        self.args = parser.parse_args(argv)
        if self.args.func is None:
            parser.print_usage(sys.stderr)
            parser.exit(EXIT_USAGE, '%s: error: a subcommand is required\n' % parser.prog)

        self.journal = None
        self.prefs = None

    def run(self):
        """Run the subcommand. Returns the exit code."""
        try:
            self.prefs = Preferences(common.settings(self.args.settings))
            if self.args.journal:
                sink = JournalDatabase(self.args.journal, echo=self.args.verbose)
            else:
                sink = MemoryJournal(echo=self.args.verbose)
        except INPUT_ERRORS as e:
            sys.stderr.write('%s: error: %s\n' % (self.parser.prog, e))
            return EXIT_USAGE

        self.journal = Journal(self.args.command, sink)
        try:
            return self.args.func()
        except INPUT_ERRORS as e:
            self.journal.log('Error: %s' % e)
            sys.stderr.write('%s: error: %s\n' % (self.parser.prog, e))
            return EXIT_USAGE
        except EVALUATION_ERRORS as e:
            self.journal.log('Error: %s' % e)
            sys.stderr.write('%s: error: %s\n' % (self.parser.prog, e))
            return EXIT_FAILED
        finally:
            sink.close()

    def option(self, key):
        """A flag value, or the stored preference for it."""
        flag = {Preferences.SEED: self.args.seed, Preferences.DIM: self.args.dim,
                Preferences.DIGITS: self.args.digits, Preferences.THREADS: self.args.threads,
                Preferences.MAX_DEGREE: getattr(self.args, 'max_degree', None),
                Preferences.MAX_HEIGHT: getattr(self.args, 'max_height', None)}[key]
        return self.prefs.resolve(key, flag)

    def context(self, fallback='rational'):
        """The field context the flags ask for."""
        return context_by_name(self.args.context or fallback)

    def dimension(self):
        """--dim, validated."""
        dimension = self.option(Preferences.DIM)
        if dimension < 2:
            raise MinkowskiError('Dimension must be at least 2, not %s' % dimension)
        return dimension

    def new_report(self, **config):
        """A report that echoes the configuration it ran with."""
        report = Report(self.args.command, config)
        report.include_timings = self.args.timings
        return report

    def finish(self, report, timer, write=True):
        """Record the total time, write the report, and return the exit code."""
        report.set_timing('total', timer.elapsed())
        self.journal.log(report.summary())
        if self.args.out:
            emit_report(report, self.args.out)
            if write:
                self.stdout.write(report.summary() + '\n')
        elif write:
            emit_report(report, stream=self.stdout)
        return report.exit_code()

    @staticmethod
    def start_timer():
        """A started wall-clock timer."""
        timer = QElapsedTimer()
        timer.start()
        return timer

    def evaluate(self):
        """Evaluate statements and print the value of the last one."""
        timer = self.start_timer()
        ctx = self.context('realalgebraic')
        digits = self.option(Preferences.DIGITS)
        bindings, value = evaluate_program(self.args.expression, ctx)

        text = ctx.format(value)
        self.stdout.write(text + '\n')
        report = self.new_report(context=ctx.name, digits=digits)
        report.set_result('value', ctx.to_json(value))
        report.set_result('bindings', {name: ctx.to_json(bound)
                                       for name, bound in bindings.items()})
        if ctx.real_closed and not value.is_rational:
            decimal = ra_decimal(value, digits)
            self.stdout.write('~ %s\n' % decimal)
            report.set_result('decimal', decimal)
        self.journal.log('%s = %s' % (self.args.expression, text))

        if self.args.out:
            self.finish(report, timer, write=False)
        return EXIT_PASSED

    def verify_field(self):
        """Ordered field axioms on samples of the chosen context."""
        timer = self.start_timer()
        ctx = self.context()
        fallback = (defaults.REAL_ALGEBRAIC_SAMPLES if ctx.real_closed else
                    defaults.ORDERED_FIELD_SAMPLES)
        config = SampleConfig(self.option(Preferences.SEED), self.args.samples or fallback)
        report = self.new_report(context=ctx.name, seed=config.seed, samples=config.count)

        report.add(check_ordered_field_axioms(ctx, config, self.journal))
        return self.finish(report, timer)

    def verify_rcf(self):
        """Square roots and odd-degree roots of real algebraic numbers."""
        timer = self.start_timer()
        config = SampleConfig(self.option(Preferences.SEED),
                              self.args.samples or defaults.RCF_SQRT_SAMPLES)
        report = self.new_report(context='realalgebraic', seed=config.seed,
                                 samples=config.count, odd_polynomials=defaults.RCF_ODD_POLYNOMIALS)

        certificates = []
        report.add(check_real_closed(config, defaults.RCF_ODD_POLYNOMIALS, self.journal,
                                     certificates))
        report.set_result('certificates', certificates)
        return self.finish(report, timer)

    def verify_specrel(self):
        """AxPh, AxEv, AxSelf and AxSymD on a model (the built-in one by default)."""
        timer = self.start_timer()
        if self.args.model:
            # The file names its own context unless --context overrides it.
            model = load_model(self.args.model, self.args.context and self.context())
        else:
            model = default_model(self.context(), self.dimension())
        ctx = model.ctx
        config = SampleConfig(self.option(Preferences.SEED),
                              self.args.samples or defaults.SPECREL_SAMPLES)
        report = self.new_report(context=ctx.name, dim=model.dimension, seed=config.seed,
                                 samples=config.count, model=self.args.model or 'default',
                                 photon_policy=model.photon_policy)
        self.journal.log('Model has %s' % common.pretty_list([
            common.pluralize('inertial observer', len(model.observers())),
            common.pluralize('photon', len(model.photons())),
            common.pluralize('accelerated observer', len(model.accelerated_observers()))]))

        for axiom_report in check_axioms(model, self.args.axioms, config, self.journal):
            report.add(axiom_report)
            report.set_timing(axiom_report.name, timer.elapsed())
        if self.args.accelerated:
            for axiom_report in check_accelerated_axioms(model, config, self.journal):
                report.add(axiom_report)
        return self.finish(report, timer)

    def verify_unifob(self):
        """The uniform acceleration axiom, the sinh/cosh/exp facts, and comoving frames."""
        timer = self.start_timer()
        digits = self.option(Preferences.DIGITS)
        dimension = self.dimension()
        curve = unif_lifecurve(self.args.acceleration, self.args.offset, dimension)
        report = self.new_report(acceleration=self.args.acceleration, dim=dimension,
                                 digits=digits, offset=list(curve.offset))

        report.add(check_unifob_axiom(curve, journal=self.journal))
        report.set_timing('AxExistsUnifOb', timer.elapsed())
        report.add(check_hyperbolic_identities(digits, journal=self.journal))
        report.add(check_exp_properties(digits, journal=self.journal))
        report.set_timing('identities', timer.elapsed())
        report.add(check_comoving_frame(curve, default_grid(defaults.REPARAM_GRID_POINTS),
                                        journal=self.journal))

        # Diff needs residuals far below epsilon |x - x0| at the finest schedule entry.
        fine = 2 * defaults.CURVE_DIGITS
        report.add(derivative_uniqueness_check(lambda point: certified_sinh(point, fine).enclosure,
                                               0, 1, Fraction(1, 10)))
        return self.finish(report, timer)

    def witness(self):
        """Exhaustive integer polynomial search at e (or at --value)."""
        timer = self.start_timer()
        value = evaluate_text(self.args.value) if self.args.value else None
        max_degree = self.option(Preferences.MAX_DEGREE)
        max_height = self.option(Preferences.MAX_HEIGHT)
        digits = self.args.digits or defaults.WITNESS_DIGITS
        threads = self.option(Preferences.THREADS)

        result = transcendence_witness(value, max_degree, max_height, digits,
                                       self.args.precision_cap, threads, self.journal)
        report = self.new_report(value=self.args.value or 'e', max_degree=max_degree,
                                 max_height=max_height, digits=digits,
                                 precision_cap=self.args.precision_cap, threads=threads)
        check = AxiomReport('transcendence witness', value=result.target.name)
        check.check('no polynomial in range vanishes', result.status == WitnessStatus.Certificate,
                    lambda: {'status': result.status,
                             'roots': [str(polynomial) for polynomial in result.roots],
                             'unresolved': [str(polynomial) for polynomial in result.unresolved]})
        report.add(check)
        report.set_result('witness', result.to_json(self.args.timings))
        return self.finish(report, timer)

    def reparam(self):
        """Reparametrization fit between a hyperbola and a reparametrized (or other) one."""
        timer = self.start_timer()
        dimension = self.dimension()
        gamma = unif_lifecurve(self.args.acceleration, None, dimension)
        if self.args.delta_acceleration is not None:
            delta = unif_lifecurve(self.args.delta_acceleration, None, dimension)
        else:
            delta = reparametrize_curve(gamma, self.args.epsilon, self.args.shift)
        report = self.new_report(acceleration=self.args.acceleration, dim=dimension,
                                 epsilon=self.args.epsilon, shift=self.args.shift,
                                 delta_acceleration=self.args.delta_acceleration)

        fit = reparam_check(gamma, delta, journal=self.journal)
        report.add(fit.report)
        report.set_result('fit', fit.to_json())
        return self.finish(report, timer)

    def preferences(self):
        """List, set or reset the stored defaults."""
        action = self.args.action
        if action == 'set':
            if self.args.key is None or self.args.value is None:
                raise PreferencesError('Usage: preferences set KEY VALUE')
            self.prefs.set_value(self.args.key, self.args.value)
        elif action == 'reset':
            self.prefs.reset()

        for key, value in self.prefs.items():
            self.stdout.write('%s = %s\n' % (key, value))
        return EXIT_PASSED

def main(argv=None, stdout=None):
    """Parse argv, run the subcommand, and return its exit code."""
    try:
        tool = CommandLineTool(argv, stdout)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    return tool.run()

if __name__ == '__main__':
    # Install our custom exception hook.
    sys.excepthook = excepthook
    sys.exit(main())
