"""Tests for the persistent preferences."""

import pytest
import common
import defaults
from preferences import Preferences, PreferencesError

def test_defaults(settings):
    preferences = Preferences(settings)
    assert preferences.value(Preferences.SEED) == defaults.SEED
    assert preferences.value(Preferences.DIM) == defaults.DIMENSION
    assert dict(preferences.items())[Preferences.MAX_HEIGHT] == defaults.MAX_HEIGHT

def test_set_value_persists(settings_file, settings):
    Preferences(settings).set_value('digits', '25')

    reloaded = Preferences(common.settings(settings_file))
    assert reloaded.value('digits') == 25

def test_default_values_are_not_stored(settings):
    preferences = Preferences(settings)
    preferences.set_value('seed', '3')
    preferences.set_value('seed', str(defaults.SEED))
    settings.beginGroup('Preferences')
    assert not settings.contains('seed')
    settings.endGroup()

def test_reset(settings):
    preferences = Preferences(settings)
    preferences.set_value('threads', '4')
    preferences.reset()
    assert preferences.value('threads') == defaults.THREADS

def test_resolve_prefers_flag(settings):
    preferences = Preferences(settings)
    assert preferences.resolve('dim', 4) == 4
    assert preferences.resolve('dim', None) == defaults.DIMENSION

@pytest.mark.parametrize('key, text', [
    ('colour', '1'),
    ('dim', 'four'),
    ('dim', '1'),
    ('threads', '0'),
])
def test_bad_values(settings, key, text):
    with pytest.raises(PreferencesError):
        Preferences(settings).set_value(key, text)
