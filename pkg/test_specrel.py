"""Tests for the worldview models and the axiom checkers."""

from fractions import Fraction
import json
import pytest
from accelerated import unif_lifecurve
from minkowski import InvalidMap, PoincareMap, SpacetimePoint, identity_map, rational_boost, \
    velocity_boost
from ordered_field import SampleConfig, SqrtUnavailableInContext
from specrel import AXIOMS, Body, BodyKind, ModelError, NotInertial, PhotonPolicy, \
    build_model, check_accelerated_axioms, check_axioms, default_model, dump_model, \
    load_model, model_from_json, model_to_json

def point(ctx, *coords):
    """Shorthand for a spacetime point."""
    return SpacetimePoint(ctx, coords)

@pytest.fixture
def model(rational):
    """The default rational model in dimension 3."""
    return default_model(rational, 3)

def test_default_model_bodies(model):
    assert [body.id for body in model.observers()] == ['m0', 'm1', 'm2', 'm3', 'm4', 'm5']
    assert [body.id for body in model.photons()] == ['p0', 'p1']
    assert [body.id for body in model.accelerated_observers()] == ['a0']
    assert model.body('m0').transform.is_identity()
    assert model.body(model.body('p0')).kind == BodyKind.Photon

    with pytest.raises(ModelError):
        model.body('m9')

def test_default_model_in_dimension_2(rational):
    model = default_model(rational, 2)
    assert len(model.observers()) == 5
    assert not model.accelerated_observers()
    reports = check_axioms(model, config=SampleConfig(seed=7, count=30))
    assert all(report.passed for report in reports), [report.failed_laws() for report in reports]

def test_worldview_eval(model, rational):
    boost = rational_boost(Fraction(1, 3), dimension=3)
    assert model.worldview_eval('m1', 'm1', point(rational, 5, 0, 0))
    assert not model.worldview_eval('m1', 'm1', point(rational, 5, 1, 0))
    assert model.worldview_eval('m0', 'm1', boost.apply(point(rational, 1, 0, 0)))
    assert model.worldview_eval('m0', 'p0', point(rational, 2, 2, 0))
    assert model.worldview_eval('m0', 'a0', point(rational, 0, 1, 0))

    with pytest.raises(NotInertial):
        model.worldview_eval('p0', 'm0', point(rational, 0, 0, 0))

def test_event_at(model, rational):
    origin = SpacetimePoint.origin(rational, 3)
    assert model.event_at('m0', origin) == frozenset(['m0', 'm1', 'm2', 'm3', 'm5', 'p0'])
    assert model.event_at('m0', point(rational, 0, 1, 0)) == frozenset(['p1', 'a0'])

def test_photon_exists(model, rational):
    origin = SpacetimePoint.origin(rational, 3)
    assert model.photon_exists('m0', origin, point(rational, 1, 1, 0))
    assert model.photon_exists('m2', origin, point(rational, 5, 3, 4))
    assert not model.photon_exists('m0', origin, point(rational, 1, 2, 0))

def test_worldview_transform(model, rational):
    transform = model.worldview_transform('m0', 'm1')
    event = point(rational, 1, Fraction(1, 2), 3)
    assert model.to_world('m1', transform.apply(event)) == model.to_world('m0', event)
    assert model.worldview_transform('m3', 'm3').is_identity()

def test_worldline_points(model, rational):
    hyperbola = model.body('a0')
    assert hyperbola.worldline_point(rational, Fraction(0)) == point(rational, 0, 1, 0)
    assert hyperbola.worldline_point(rational, Fraction(1)) == \
        point(rational, Fraction(4, 3), Fraction(5, 3), 0)
    for parameter in (Fraction(-7, 2), Fraction(1, 9), Fraction(40)):
        assert hyperbola.on_worldline(hyperbola.worldline_point(rational, parameter))

    photon = model.body('p1')
    assert photon.on_worldline(photon.worldline_point(rational, Fraction(3)))

def test_default_model_satisfies_the_axioms(model, journal):
    reports = check_axioms(model, config=SampleConfig(seed=7, count=60), journal=journal)
    assert [report.name for report in reports] == list(AXIOMS)
    for report in reports:
        assert report.passed, (report.name, report.failed_laws())
    assert 'AxSymD passed' in journal.sink.messages('test')

def test_check_selected_axioms(model, small_config):
    reports = check_axioms(model, which=('AxSelf', 'AxPh'), config=small_config)
    assert [report.name for report in reports] == ['AxPh', 'AxSelf']
    with pytest.raises(ModelError):
        check_axioms(model, which=('AxFoo',))

@pytest.mark.slow
def test_real_algebraic_model(realalgebraic):
    model = default_model(realalgebraic, 3)
    assert len(model.observers()) == 7
    reports = check_axioms(model, config=SampleConfig(seed=7, count=6))
    for report in reports:
        assert report.passed, (report.name, report.failed_laws())

def test_build_model_needs_an_identity(rational):
    with pytest.raises(InvalidMap):
        build_model(rational, 3, [rational_boost(Fraction(1, 2))])

def test_build_model_rejects_bad_maps(rational):
    stretch = PoincareMap(rational, [[2, 0], [0, 1]], validate=False)
    with pytest.raises(InvalidMap):
        build_model(rational, 2, [identity_map(rational, 2), stretch])
    with pytest.raises(InvalidMap):
        build_model(rational, 3, [identity_map(rational, 2)])
    with pytest.raises(InvalidMap):
        build_model(rational, 2, [identity_map(rational, 2)], accelerated=[unif_lifecurve(1)])

def test_photons_must_be_lightlike(rational):
    with pytest.raises(ModelError):
        build_model(rational, 3, [identity_map(rational, 3)],
                    photons=[([0, 0, 0], [1, 2, 0])])
    with pytest.raises(ModelError):
        Body.photon('p', point(rational, 0, 0), point(rational, 0, 1))

def test_superluminal_photon_is_caught(rational, small_config):
    model = build_model(rational, 3, [identity_map(rational, 3),
                                      rational_boost(Fraction(1, 2))],
                        PhotonPolicy.Explicit, photons=[([0, 0, 0], [1, 2, 0])])
    report = check_axioms(model, ('AxPh',), small_config)[0]
    assert not report.passed
    assert 'photon exists iff lightlike' in report.failed_laws()
    witness = report.verdicts['photon exists iff lightlike'].witness
    assert set(witness) == {'observer', 'x', 'y', 'photon_exists'}

def test_missing_photon_breaks_symd(rational, small_config):
    model = build_model(rational, 3, [identity_map(rational, 3),
                                      rational_boost(Fraction(1, 2), axis=2)],
                        PhotonPolicy.Explicit, photons=[([0, 0, 0], [1, 1, 0])])
    report = check_axioms(model, ('AxSymD',), small_config)[0]
    assert report.failed_laws() == ['photon through origin and (1, 1, 0, ...)']

def test_accelerated_axioms(model, small_config):
    reports = check_accelerated_axioms(model, small_config, grid=[Fraction(-1), Fraction(1)])
    assert [report.name for report in reports] == ['AxSelf-', 'AxEv-', 'comoving frame']
    for report in reports:
        assert report.passed, (report.name, report.failed_laws())

def test_model_json_round_trip(model, rational, tmp_path):
    path = str(tmp_path / 'model.json')
    dump_model(model, path)
    with open(path) as model_file:
        data = json.load(model_file)
    assert data['context'] == 'rational'
    assert data['observers'][1]['id'] == 'm1'

    loaded = load_model(path)
    assert [body.id for body in loaded.bodies.values()] == list(model.bodies)
    for original, copy in zip(model.observers(), loaded.observers()):
        assert copy.transform == original.transform
    assert loaded.body('p1').on_worldline(point(rational, 0, 1, 0))
    assert loaded.body('a0').curve.acceleration == 1

def test_model_from_json_forms(realalgebraic):
    model = model_from_json({
        'context': 'realalgebraic',
        'dimension': 3,
        'observers': [{'linear': [['1', '0', '0'], ['0', '1', '0'], ['0', '0', '1']]},
                      {'boost': '1/2', 'axis': 2, 'translation': ['1', '0', '0']},
                      {'velocity': '1/sqrt(2)', 'axis': 1},
                      {'rotation': '1/3', 'axes': [1, 2]}],
        'photons': [{'point': ['0', '0', '0'], 'direction': ['1', '0', '1']}],
        'accelerated': [{'acceleration': '2', 'offset': ['0', '0', '1']}],
    })
    assert model.ctx.name == 'realalgebraic'
    assert len(model.observers()) == 4
    assert model.body('m1').transform.translation == \
        SpacetimePoint(realalgebraic, [1, 0, 0])

    again = model_from_json(model_to_json(model))
    assert again.body('m2').transform == model.body('m2').transform

def test_irrational_velocity_needs_a_real_closed_context():
    data = {'context': 'rational', 'dimension': 3,
            'observers': [{'velocity': '1/sqrt(2)', 'axis': 1}]}
    with pytest.raises(SqrtUnavailableInContext):
        model_from_json(data)

    data['context'] = 'realalgebraic'
    assert len(model_from_json(data).observers()) == 1

def test_rational_entries_may_be_expressions(rational):
    model = model_from_json({'dimension': 2, 'observers': [{'velocity': '6/10'},
                                                          {'boost': 'sqrt(1/4)'}]})
    assert model.ctx.name == 'rational'
    assert model.body('m0').transform == velocity_boost(rational, Fraction(3, 5), 1, 2)
    assert model.body('m1').transform == rational_boost(Fraction(1, 2), 1, 2, rational)

@pytest.mark.parametrize('data', [
    {'observers': [{'shear': '1'}]},
    {'observers': [{'boost': '2'}]},
    {'observers': [{'boost': '1/0'}]},
    {'observers': [{'boost': 'half'}]},
    {'observers': [{'velocity': 'sqrt(2'}]},
    {'observers': [{'linear': [[1.0, 0], [0, 1]]}], 'dimension': 2},
    {'context': 'complex', 'observers': []},
    {'observers': [{'linear': [['1', '0'], ['0', '1']]}], 'dimension': 2,
     'photons': [{'point': ['0', '0']}]},
])
def test_malformed_models(data):
    with pytest.raises(ModelError):
        model_from_json(data)

def test_load_model_errors(tmp_path):
    with pytest.raises(ModelError):
        load_model(str(tmp_path / 'missing.json'))

    broken = tmp_path / 'broken.json'
    broken.write_text('{"observers": [')
    with pytest.raises(ModelError):
        load_model(str(broken))

    listed = tmp_path / 'list.json'
    listed.write_text('[]')
    with pytest.raises(ModelError):
        load_model(str(listed))
