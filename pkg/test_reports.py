"""Tests for the report model and its JSON form."""

from fractions import Fraction
import json
import pytest
from reports import AxiomReport, Report, ReportError, emit_report, to_json_value

def test_to_json_value():
    assert to_json_value(Fraction(1, 3)) == '1/3'
    assert to_json_value(7) == '7'
    assert to_json_value(True) is True
    assert to_json_value({'a': [1, None]}) == {'a': ['1', None]}
    with pytest.raises(ReportError):
        to_json_value(0.5)
    with pytest.raises(ReportError):
        to_json_value(object())

def test_witness_only_built_on_first_failure():
    calls = []

    def witness():
        calls.append(1)
        return {'x': len(calls)}

    report = AxiomReport('AxTest')
    report.check('law', True, witness)
    assert not calls

    report.check('law', False, witness)
    report.check('law', False, witness)
    verdict = report.verdicts['law']
    assert verdict.checked == 3
    assert verdict.failures == 2
    assert verdict.witness == {'x': 1}
    assert report.failed_laws() == ['law']

def test_report_json_and_exit_code():
    report = Report('verify-test', {'seed': 7})
    good = report.add(AxiomReport('AxGood', context='rational'))
    good.check('holds', True)
    assert report.exit_code() == 0
    assert report.summary() == 'verify-test: 1 check passed'

    bad = report.add(AxiomReport('AxBad'))
    bad.check('fails', False, Fraction(2, 3))
    report.set_result('value', Fraction(5, 2))
    report.set_timing('total', 12.7)
    assert report.exit_code() == 1
    assert report.summary() == 'verify-test: AxBad failed'

    data = json.loads(report.dumps())
    assert data['passed'] is False
    assert data['config'] == {'seed': '7'}
    assert data['results'] == {'value': '5/2'}
    assert 'timings' not in data
    assert data['checks'][0]['info'] == {'context': 'rational'}
    assert data['checks'][1]['verdicts'][0]['witness'] == '2/3'

    report.include_timings = True
    assert json.loads(report.dumps())['timings'] == {'total': '12'}

def test_dumps_is_canonical():
    first = Report('eval')
    first.set_result('b', 1)
    first.set_result('a', 2)
    second = Report('eval')
    second.set_result('a', 2)
    second.set_result('b', 1)
    assert first.dumps() == second.dumps()

def test_emit_report(tmp_path):
    report = Report('eval')
    path = tmp_path / 'report.json'
    text = emit_report(report, str(path))
    assert path.read_text() == text

    with pytest.raises(ReportError):
        emit_report(report, str(tmp_path / 'missing' / 'report.json'))
