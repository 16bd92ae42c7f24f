#!/usr/bin/env python3

"""Report Classes

This module contains the reports every command produces: a Report per command run, made of
AxiomReports (one per checked axiom or theorem), each made of Verdicts (one per law or item).

Reports are written as canonical JSON: sorted keys, two-space indent, newline-terminated. Exact
numbers are strings ("n/d", or "n" for integers) and enclosures are [lo, hi] pairs of such
strings, so no consumer ever rounds. Two runs with the same inputs and seed produce the same
bytes; wall-clock timings are therefore only included on request.
"""

from fractions import Fraction
import json
import common

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

class ReportError(Exception):
    """Report Error exception

    Thrown when a report cannot be written, or holds something that has no exact JSON form.
    """

def to_json_value(value):
    """Convert a value to its JSON-ready form.

    Anything with a to_json() method (intervals, algebraic numbers, maps) converts itself.
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, float):
        raise ReportError('Inexact value %r in report' % value)
    if hasattr(value, 'to_json'):
        return value.to_json()
    if isinstance(value, dict):
        return {str(key): to_json_value(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json_value(item) for item in value]
    raise ReportError('Cannot put %r in a report' % (value,))

class Verdict():
    """Outcome of one law over all the samples it was checked on.

    Only the first failing sample is kept as the witness.
    """
    def __init__(self, law, detail=None):
        """Initialize the Verdict instance."""
        self.law = law
        self.detail = detail
        self.checked = 0
        self.failures = 0
        self.witness = None

    @property
    def passed(self):
        """No sample failed."""
        return self.failures == 0

    def to_json(self):
        """JSON-ready form."""
        return {
            'law': self.law,
            'passed': self.passed,
            'checked': self.checked,
            'failures': self.failures,
            'witness': to_json_value(self.witness),
            'detail': to_json_value(self.detail),
        }

class AxiomReport():
    """The verdicts for one axiom (or theorem), in the order the laws were first checked."""
    def __init__(self, name, **info):
        """Initialize the AxiomReport instance.

        info is echoed into the report as is (for example the field context checked).
        """
        self.name = name
        self.info = info
        self.verdicts = {}

    def verdict(self, law, detail=None):
        """Returns the verdict of a law, creating it if needed."""
        if law not in self.verdicts:
            self.verdicts[law] = Verdict(law, detail)
        elif detail is not None:
            self.verdicts[law].detail = detail
        return self.verdicts[law]

    def check(self, law, passed, witness=None, detail=None):
        """Record one sample of a law.

        witness is called only when the sample failed (and is the first failure), so that
        building it costs nothing on the passing path. It may also be a plain value.
        """
        verdict = self.verdict(law, detail)
        verdict.checked += 1
        if not passed:
            verdict.failures += 1
            if verdict.witness is None:
                verdict.witness = witness() if callable(witness) else witness
        return passed

    @property
    def passed(self):
        """Every law passed."""
        return all(verdict.passed for verdict in self.verdicts.values())

    def failed_laws(self):
        """Names of the laws that failed."""
        return [verdict.law for verdict in self.verdicts.values() if not verdict.passed]

    def to_json(self):
        """JSON-ready form."""
        result = {
            'name': self.name,
            'passed': self.passed,
            'verdicts': [verdict.to_json() for verdict in self.verdicts.values()],
        }
        if self.info:
            result['info'] = to_json_value(self.info)
        return result

class Report():
    """Everything one command run produced."""
    def __init__(self, command, config=None):
        """Initialize the Report instance."""
        self.command = command
        self.config = dict(config or {})
        self.checks = []
        self.results = {}
        self.timings = {}
        self.include_timings = False

    def add(self, axiom_report):
        """Append an AxiomReport."""
        self.checks.append(axiom_report)
        return axiom_report

    def set_result(self, key, value):
        """Record a computed result (a value, a certificate, a fit)."""
        self.results[key] = value

    def set_timing(self, key, msecs):
        """Record a wall-clock duration in milliseconds."""
        self.timings[key] = int(msecs)

    @property
    def passed(self):
        """No check failed."""
        return all(check.passed for check in self.checks)

    def exit_code(self):
        """0 if every check passed, else 1."""
        return 0 if self.passed else 1

    def summary(self):
        """One human-readable line."""
        failed = [check.name for check in self.checks if not check.passed]
        if failed:
            return '%s: %s failed' % (self.command, common.pretty_list(failed))
        return '%s: %s passed' % (self.command,
                                  common.pluralize('check', len(self.checks)) or 'no checks')

    def to_json(self):
        """JSON-ready form."""
        result = {
            'command': self.command,
            'config': to_json_value(self.config),
            'passed': self.passed,
            'checks': [check.to_json() for check in self.checks],
            'results': to_json_value(self.results),
        }
        if self.include_timings:
            result['timings'] = to_json_value(self.timings)
        return result

    def dumps(self):
        """Canonical JSON text."""
        return json.dumps(self.to_json(), sort_keys=True, indent=2, ensure_ascii=True) + '\n'

def emit_report(report, path=None, stream=None):
    """Write the canonical JSON of a report to a file (or a stream if no path is given)."""
    text = report.dumps()
    if path is None:
        stream.write(text)
        return text

    try:
        with open(path, 'w', newline='\n') as report_file:
            report_file.write(text)
    except OSError as e:
        raise ReportError('Cannot write report to %s: %s' % (path, e))

    return text
