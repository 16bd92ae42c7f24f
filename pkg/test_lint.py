"""Tests for the pylint wrapper's command line."""

from lint import SPELLING_DICT, pylint_options

def test_options_with_dictionary(tmp_path):
    (tmp_path / SPELLING_DICT).write_text('Minkowski\n')
    options = pylint_options(str(tmp_path), 'accrel', ['--disable=fixme'])
    assert options[0] == '--max-line-length=100'
    assert '--spelling-private-dict-file=%s' % (tmp_path / SPELLING_DICT) in options
    assert options[-2:] == ['--disable=fixme', 'accrel']

def test_options_without_dictionary(tmp_path):
    assert pylint_options(str(tmp_path), 'accrel') == ['--max-line-length=100', 'accrel']
