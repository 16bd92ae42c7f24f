#!/usr/bin/env python3

"""Special Relativity Model Classes

This module contains the explicit models of special relativity: bodies (inertial observers,
photons and accelerated observers), the worldview model that relates them, and the mechanical
checkers for the axioms AxPh, AxEv, AxSelf and AxSymD, plus the localized AxEv- and AxSelf- for
accelerated observers.

Every inertial observer m stores a Poincare map T_m from its own coordinates to one shared world
frame. Body b is at x in m's worldview exactly when T_m(x) lies on b's world line. Photons either
exist on demand on every lightlike line (Synthetic policy) or only where registered (Explicit
policy, for fault injection). All membership tests are exact field computations.

Model description files are JSON:

    {
        "context": "realalgebraic",
        "dimension": 3,
        "photon_policy": "Synthetic",
        "observers": [{"linear": [["1", "0", "0"], ...], "translation": ["0", "0", "0"]},
                      {"boost": "1/2", "axis": 1},
                      {"velocity": "1/sqrt(2)", "axis": 1},
                      {"rotation": "1/2", "axes": [1, 2]}],
        "photons": [{"point": ["0", "0", "0"], "direction": ["1", "1", "0"]}],
        "accelerated": [{"acceleration": "1", "offset": ["0", "0", "0"]}]
    }

Entries are parsed by the field context, so real algebraic models can use expressions.
"""

import json
import common
import defaults
from accelerated import CurveKind, WorldlineError, check_comoving_frame, default_grid, \
    inertial_lifecurve, unif_lifecurve
from journal import null_journal
from minkowski import InvalidMap, MinkowskiError, PoincareMap, SpacetimePoint, identity_map, \
    is_poincare, minkowski_sq, rational_boost, rational_rotation, rational_unit_vector, \
    spatial_sq, translation, velocity_boost
from ordered_field import FieldError, SampleConfig, SqrtUnavailableInContext, context_by_name, \
    sample_rational
from reports import AxiomReport

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

BodyKind = common.enum(InertialObserver='InertialObserver', Photon='Photon',
                       AccObserver='AccObserver')
PhotonPolicy = common.enum(Synthetic='Synthetic', Explicit='Explicit')

AXIOMS = ('AxPh', 'AxEv', 'AxSelf', 'AxSymD')

class ModelError(Exception):
    """Exceptions generated by this module."""

class NotInertial(ModelError):
    """An operation that needs an inertial observer got another body."""

class Body():
    """A body: an inertial observer (with its map to the world frame), a photon, or an
    accelerated observer (with its life-curve in the world frame)."""
    def __init__(self, body_id, kind, transform=None, point=None, direction=None, curve=None):
        """Initialize the Body instance. Use the inertial(), photon() and accelerated()
        constructors."""
        self.id = body_id
        self.kind = kind
        self.transform = transform
        self.point = point
        self.direction = direction
        self.curve = curve
        self._inverse = None

    def __repr__(self):
        return 'Body(%s, %s)' % (self.id, self.kind)

    @classmethod
    def inertial(cls, body_id, transform):
        """Inertial observer whose coordinates map to the world frame by transform."""
        return cls(body_id, BodyKind.InertialObserver, transform=transform)

    @classmethod
    def photon(cls, body_id, point, direction, validate=True):
        """Photon on the line point + lambda direction.

        The direction must have a nonzero time component. It must also be lightlike, unless
        validate is False (for fault injection fixtures).
        """
        ctx = direction.ctx
        if ctx.is_zero(direction.time):
            raise ModelError('Photon direction %r has no time component' % (direction,))
        if validate and not ctx.is_zero(minkowski_sq(direction)):
            raise ModelError('Photon direction %r is not lightlike' % (direction,))
        return cls(body_id, BodyKind.Photon, point=point, direction=direction)

    @classmethod
    def accelerated(cls, body_id, curve):
        """Accelerated observer with the given life-curve."""
        return cls(body_id, BodyKind.AccObserver, curve=curve)

    @property
    def is_inertial(self):
        """Whether this is an inertial observer."""
        return self.kind == BodyKind.InertialObserver

    def inverse(self):
        """World frame to own coordinates (inertial observers only)."""
        if self._inverse is None:
            self._inverse = self.transform.invert()
        return self._inverse

    def on_worldline(self, point):
        """Whether the world-frame point lies on this body's world line."""
        ctx = point.ctx
        if self.kind == BodyKind.InertialObserver:
            local = self.inverse().apply(point)
            return all(ctx.is_zero(coordinate) for coordinate in local.coords[1:])

        if self.kind == BodyKind.Photon:
            offset = point - self.point
            parameter = ctx.div(offset.time, self.direction.time)
            return offset == self.direction.scale(parameter)

        return self.curve.contains(point)

    def worldline_point(self, ctx, parameter):
        """An exact world-frame point on the world line.

        parameter is a field element for inertial observers and photons. Hyperbolas take a
        rational parameter and use the rational parametrization
        u -> y + a (2u/(1-u^2), (1+u^2)/(1-u^2), 0, ..., 0), after squeezing it into (-1, 1).
        """
        if self.kind == BodyKind.InertialObserver:
            dimension = self.transform.dimension
            return self.transform.apply(SpacetimePoint(ctx, [parameter] + [0] * (dimension - 1)))

        if self.kind == BodyKind.Photon:
            return self.point + self.direction.scale(parameter)

        curve = self.curve
        if curve.kind == CurveKind.Inertial:
            return _lift_map(ctx, curve.transform).apply(
                SpacetimePoint(ctx, [parameter] + [0] * (curve.dimension - 1)))
        if curve.kind != CurveKind.UnifAccel:
            raise ModelError('No exact points on custom curve %s' % curve.name)

        squeezed = parameter / (1 + abs(parameter))
        denominator = 1 - squeezed ** 2
        coordinates = list(curve.offset)
        coordinates[0] += curve.acceleration * 2 * squeezed / denominator
        coordinates[1] += curve.acceleration * (1 + squeezed ** 2) / denominator
        return SpacetimePoint(ctx, coordinates)

    def to_json(self):
        """JSON-ready description (the model file format).

        Entries are in the text form of the context, which parses back to the same value.
        """
        if self.kind == BodyKind.InertialObserver:
            result = _format_map(self.transform)
        elif self.kind == BodyKind.Photon:
            result = {'point': _format_point(self.point),
                      'direction': _format_point(self.direction)}
        else:
            result = self.curve.to_json()
            if self.curve.kind == CurveKind.Inertial:
                result['transform'] = _format_map(self.curve.transform)
        result['id'] = self.id
        return result

class WorldviewModel():
    """A model: a field context, a dimension, and the registered bodies by id."""
    def __init__(self, ctx, dimension, bodies, photon_policy=PhotonPolicy.Synthetic):
        """Initialize the WorldviewModel instance. Use build_model() to get one."""
        self.ctx = ctx
        self.dimension = dimension
        self.bodies = dict((body.id, body) for body in bodies)
        self.photon_policy = photon_policy

    def body(self, body):
        """The Body for an id (Bodies are passed through)."""
        if isinstance(body, Body):
            return body
        try:
            return self.bodies[body]
        except KeyError:
            raise ModelError('No body "%s" in the model' % body)

    def observers(self):
        """Inertial observers, in registration order."""
        return [body for body in self.bodies.values() if body.is_inertial]

    def photons(self):
        """Registered photons."""
        return [body for body in self.bodies.values() if body.kind == BodyKind.Photon]

    def accelerated_observers(self):
        """Accelerated observers."""
        return [body for body in self.bodies.values() if body.kind == BodyKind.AccObserver]

    def _frame(self, observer):
        observer = self.body(observer)
        if not observer.is_inertial:
            raise NotInertial('%s is not an inertial observer' % observer.id)
        return observer

    def to_world(self, observer, point):
        """Observer coordinates to world frame."""
        return self._frame(observer).transform.apply(point)

    def worldview_eval(self, observer, body, point):
        """W(observer, body, point): observer sees body at point."""
        return self.body(body).on_worldline(self.to_world(observer, point))

    def event_at(self, observer, point):
        """Ids of the registered bodies the observer sees at point."""
        world = self.to_world(observer, point)
        return frozenset(body_id for body_id, body in self.bodies.items()
                         if body.on_worldline(world))

    def photon_exists(self, observer, first, second):
        """Whether some photon passes through both points (observer coordinates)."""
        world_first = self.to_world(observer, first)
        world_second = self.to_world(observer, second)
        if self.photon_policy == PhotonPolicy.Synthetic:
            return self.ctx.is_zero(minkowski_sq(world_second - world_first))
        return any(photon.on_worldline(world_first) and photon.on_worldline(world_second)
                   for photon in self.photons())

    def worldview_transform(self, observer, other):
        """The map from observer's coordinates to other's: T_other^-1 after T_observer."""
        return self._frame(other).inverse().compose(self._frame(observer).transform)

def _lift_map(ctx, transform):
    if transform.ctx.name == ctx.name:
        return transform
    return PoincareMap(ctx, transform.linear, list(transform.translation), validate=False)

def _format_point(point):
    return [point.ctx.format(coordinate) for coordinate in point]

def _format_map(transform):
    return {'linear': [[transform.ctx.format(entry) for entry in row] for row in transform.linear],
            'translation': _format_point(transform.translation)}

def build_model(ctx, dimension, observer_params, photon_policy=PhotonPolicy.Synthetic,
                photons=(), accelerated=()):
    """Build a model from observer maps, photons and accelerated life-curves.

    Observers get ids m0, m1, ..., photons p0, ... and accelerated observers a0, .... photons
    are Bodies or (point, direction) pairs. Raises InvalidMap unless every map is a Poincare
    map of the right dimension and one of them is the identity.
    """
    if dimension < 2:
        raise InvalidMap('Dimension must be at least 2, not %s' % dimension)
    if photon_policy not in (PhotonPolicy.Synthetic, PhotonPolicy.Explicit):
        raise ModelError('Unknown photon policy "%s"' % photon_policy)

    bodies = []
    for index, transform in enumerate(observer_params):
        transform = _lift_map(ctx, transform)
        if transform.dimension != dimension:
            raise InvalidMap('Observer map %s has dimension %s, expected %s' %
                             (index, transform.dimension, dimension))
        if not is_poincare(ctx, transform.linear):
            raise InvalidMap('Observer map %s does not preserve the Minkowski form' % index)
        bodies.append(Body.inertial('m%s' % index, transform))

    if not any(body.transform.is_identity() for body in bodies):
        raise InvalidMap('A model needs an observer whose map is the identity')

    for index, photon in enumerate(photons):
        if not isinstance(photon, Body):
            point, direction = photon
            photon = Body.photon('p%s' % index, SpacetimePoint(ctx, point),
                                 SpacetimePoint(ctx, direction),
                                 validate=photon_policy == PhotonPolicy.Synthetic)
        bodies.append(photon)

    for index, curve in enumerate(accelerated):
        if curve.dimension != dimension:
            raise InvalidMap('Life-curve %s has dimension %s, expected %s' %
                             (curve.name, curve.dimension, dimension))
        bodies.append(Body.accelerated('a%s' % index, curve))

    return WorldviewModel(ctx, dimension, bodies, photon_policy)

def default_model(ctx, dimension=defaults.DIMENSION):
    """The model the command line checks when no model file is given."""
    observers = [identity_map(ctx, dimension)]
    observers += [rational_boost(parameter, 1, dimension, ctx)
                  for parameter in defaults.SPECREL_BOOSTS]
    observers.append(translation(ctx, [1, 2] + [0] * (dimension - 2)).compose(
        rational_boost(defaults.SPECREL_BOOSTS[0], 1, dimension, ctx)))
    if dimension >= 3:
        observers.append(rational_rotation(defaults.SPECREL_BOOSTS[1], (1, 2), dimension,
                                           ctx).compose(
                                               rational_boost(defaults.SPECREL_BOOSTS[2], 2,
                                                              dimension, ctx)))
    if ctx.real_closed:
        observers.append(velocity_boost(ctx, ctx.inv(ctx.sqrt(ctx.from_rational(2))), 1,
                                        dimension))

    origin = [0] * dimension
    photons = [(origin, [1, 1] + [0] * (dimension - 2))]
    if dimension >= 3:
        photons.append(([0, 1] + [0] * (dimension - 2), [1, 0, -1] + [0] * (dimension - 3)))

    accelerated = [unif_lifecurve(1, None, dimension)] if dimension >= 3 else []
    return build_model(ctx, dimension, observers, PhotonPolicy.Synthetic, photons, accelerated)

def _sample_point(model, rng):
    return SpacetimePoint(model.ctx, [model.ctx.sample(rng) for _ in range(model.dimension)])

def _sample_direction(model, rng):
    """A lightlike direction (1, n) with n a rational spatial unit vector."""
    while True:
        vector = [sample_rational(rng) for _ in range(model.dimension - 1)]
        if any(vector):
            return SpacetimePoint(model.ctx, [1] + rational_unit_vector(vector))

def _sample_nonzero(ctx, rng):
    while True:
        value = ctx.sample(rng)
        if not ctx.is_zero(value):
            return value

def _check_axph(model, config):
    ctx = model.ctx
    report = AxiomReport('AxPh', context=ctx.name, policy=model.photon_policy)
    rng = config.rng('AxPh')
    observers = model.observers()
    photons = model.photons()
    one = ctx.one()

    for index in range(config.count):
        observer = observers[index % len(observers)]
        kind = index % 3
        first = _sample_point(model, rng)
        if kind == 0:
            second = _sample_point(model, rng)
        elif kind == 1 or not photons:
            second = first + _sample_direction(model, rng).scale(_sample_nonzero(ctx, rng))
        else:
            photon = photons[rng.randrange(len(photons))]
            inverse = observer.inverse()
            first = inverse.apply(photon.worldline_point(ctx, ctx.sample(rng)))
            second = inverse.apply(photon.worldline_point(ctx, ctx.sample(rng)))

        difference = second - first
        space = spatial_sq(difference)
        time = ctx.square(difference.time)
        lightlike = ctx.equal(space, time)
        exists = model.photon_exists(observer, first, second)

        def witness(observer=observer, first=first, second=second, exists=exists):
            return {'observer': observer.id, 'x': first, 'y': second, 'photon_exists': exists}

        report.check('photon exists iff lightlike', exists == lightlike, witness)
        if exists and not ctx.is_zero(time):
            speed_sq = ctx.div(space, time)
            report.check('speed of light is 1', ctx.equal(speed_sq, one),
                         lambda witness=witness, speed_sq=speed_sq:
                         dict(witness(), speed_sq=ctx.to_json(speed_sq)))

    return report

def _check_axev(model, config):
    ctx = model.ctx
    report = AxiomReport('AxEv', context=ctx.name)
    rng = config.rng('AxEv')
    observers = model.observers()
    bodies = list(model.bodies.values())
    pairs = [(observer, other) for observer in observers for other in observers]

    transforms = {}
    for observer, other in pairs:
        transform = model.worldview_transform(observer, other)
        transforms[observer.id, other.id] = transform
        report.check('Poincare transformations', is_poincare(ctx, transform.linear),
                     {'observer': observer.id, 'other': other.id})

    for index in range(config.count):
        observer, other = pairs[index % len(pairs)]
        if index % 2:
            body = bodies[rng.randrange(len(bodies))]
            parameter = (sample_rational(rng) if body.kind == BodyKind.AccObserver else
                         ctx.sample(rng))
            point = observer.inverse().apply(body.worldline_point(ctx, parameter))
        else:
            point = _sample_point(model, rng)

        image = transforms[observer.id, other.id].apply(point)
        seen = model.event_at(observer, point)
        seen_by_other = model.event_at(other, image)
        report.check('same events', seen == seen_by_other,
                     lambda observer=observer, other=other, point=point, image=image,
                     seen=seen, seen_by_other=seen_by_other:
                     {'observer': observer.id, 'other': other.id, 'x': point, 'y': image,
                      'events': [sorted(seen), sorted(seen_by_other)]})

    return report

def _check_axself(model, config):
    ctx = model.ctx
    report = AxiomReport('AxSelf', context=ctx.name)
    rng = config.rng('AxSelf')
    observers = model.observers()

    for index in range(config.count):
        observer = observers[index % len(observers)]
        on_axis = SpacetimePoint(ctx, [ctx.sample(rng)] + [0] * (model.dimension - 1))
        report.check('time axis on own world line',
                     model.worldview_eval(observer, observer, on_axis),
                     lambda observer=observer, on_axis=on_axis:
                     {'observer': observer.id, 'x': on_axis})

        off_axis = _sample_point(model, rng)
        if ctx.is_zero(spatial_sq(off_axis)):
            off_axis = off_axis + SpacetimePoint.unit(ctx, 1, model.dimension)
        report.check('own world line within time axis',
                     not model.worldview_eval(observer, observer, off_axis),
                     lambda observer=observer, off_axis=off_axis:
                     {'observer': observer.id, 'x': off_axis})

    return report

def _simultaneous_offset(ctx, transform, vector):
    """Project a spatial vector so that it stays simultaneous after the transform."""
    row = transform.linear[0][1:]
    norm = ctx.zero()
    dot = ctx.zero()
    for weight, component in zip(row, vector):
        norm = ctx.add(norm, ctx.square(weight))
        dot = ctx.add(dot, ctx.mul(weight, component))
    if ctx.is_zero(norm):
        return list(vector)
    ratio = ctx.div(dot, norm)
    return [ctx.sub(component, ctx.mul(ratio, weight)) for weight, component in zip(row, vector)]

def _check_axsymd(model, config):
    ctx = model.ctx
    report = AxiomReport('AxSymD', context=ctx.name)
    rng = config.rng('AxSymD')
    observers = model.observers()
    pairs = [(observer, other) for observer in observers for other in observers
             if observer is not other] or [(observers[0], observers[0])]

    for index in range(config.count):
        observer, other = pairs[index % len(pairs)]
        transform = model.worldview_transform(observer, other)
        first = _sample_point(model, rng)
        offset = _simultaneous_offset(ctx, transform, [ctx.sample(rng)
                                                       for _ in range(model.dimension - 1)])
        second = first + SpacetimePoint(ctx, [0] + offset)
        first_image = transform.apply(first)
        second_image = transform.apply(second)

        report.check('simultaneous for both', ctx.equal(first_image.time, second_image.time),
                     lambda observer=observer, other=other, first=first, second=second:
                     {'observer': observer.id, 'other': other.id, 'x': first, 'y': second})
        report.check('equal spatial distance',
                     ctx.equal(spatial_sq(second - first),
                               spatial_sq(second_image - first_image)),
                     lambda observer=observer, other=other, first=first, second=second:
                     {'observer': observer.id, 'other': other.id, 'x': first, 'y': second})

    origin = SpacetimePoint.origin(ctx, model.dimension)
    diagonal = SpacetimePoint(ctx, [1, 1] + [0] * (model.dimension - 2))
    for observer in observers:
        report.check('photon through origin and (1, 1, 0, ...)',
                     model.photon_exists(observer, origin, diagonal),
                     {'observer': observer.id})

    return report

CHECKERS = {'AxPh': _check_axph, 'AxEv': _check_axev, 'AxSelf': _check_axself,
            'AxSymD': _check_axsymd}

def check_axioms(model, which=AXIOMS, config=None, journal=None):
    """Check the named axioms on sampled instances. Returns AxiomReports in axiom order."""
    journal = journal or null_journal('specrel')
    config = config or SampleConfig(count=defaults.SPECREL_SAMPLES)
    unknown = set(which) - set(AXIOMS)
    if unknown:
        raise ModelError('Unknown %s %s' % ('axiom' if len(unknown) == 1 else 'axioms',
                                            common.pretty_list(sorted(unknown))))

    reports = []
    for name in AXIOMS:
        if name not in which:
            continue
        journal.log('Checking %s on %s' % (name, common.pluralize('sample', config.count)))
        report = CHECKERS[name](model, config)
        journal.log('%s %s' % (name, 'passed' if report.passed else 'FAILED'))
        reports.append(report)
    return reports

def check_accelerated_axioms(model, config=None, journal=None, grid=None):
    """Check AxSelf- and AxEv- for every accelerated observer, and its comoving frames.

    AxSelf-: exact points of the life-curve are on the world line and spatially displaced ones
    are not. AxEv-: every inertial observer sees the accelerated observer at those points.
    """
    journal = journal or null_journal('specrel')
    config = config or SampleConfig(count=defaults.SPECREL_SAMPLES)
    ctx = model.ctx
    observers = model.observers()
    reports = []

    for body in model.accelerated_observers():
        rng = config.rng('accelerated:%s' % body.id)
        self_report = AxiomReport('AxSelf-', body=body.id, curve=body.curve.name)
        events_report = AxiomReport('AxEv-', body=body.id, curve=body.curve.name)
        displacement = SpacetimePoint.unit(ctx, model.dimension - 1, model.dimension)

        for index in range(config.count):
            point = body.worldline_point(ctx, sample_rational(rng))
            self_report.check('life-curve points on world line', body.on_worldline(point),
                              {'point': point})
            self_report.check('displaced points off world line',
                              not body.on_worldline(point + displacement), {'point': point})

            observer = observers[index % len(observers)]
            local = observer.inverse().apply(point)
            events_report.check('seen by inertial observers',
                                body.id in model.event_at(observer, local),
                                lambda observer=observer, local=local:
                                {'observer': observer.id, 'x': local})

        reports += [self_report, events_report]
        if body.curve.kind == CurveKind.UnifAccel:
            reports.append(check_comoving_frame(body.curve,
                                                grid or default_grid(defaults.REPARAM_GRID_POINTS),
                                                journal=journal))
        journal.log('Accelerated observer %s %s' %
                    (body.id, 'passed' if all(report.passed for report in reports)
                     else 'FAILED'))

    return reports

def _parse_entry(ctx, entry):
    if isinstance(entry, str):
        return ctx.parse(entry)
    if isinstance(entry, int) and not isinstance(entry, bool):
        return ctx.from_rational(entry)
    raise ModelError('Model entries must be exact strings or integers, not %r' % (entry,))

def _rational_entry(entry):
    ctx = context_by_name('rational')
    return _parse_entry(ctx, entry)

def _observer_from_json(ctx, dimension, entry):
    if 'linear' in entry:
        transform = PoincareMap(ctx, [[_parse_entry(ctx, value) for value in row]
                                      for row in entry['linear']])
    elif 'boost' in entry:
        transform = rational_boost(_rational_entry(entry['boost']), entry.get('axis', 1),
                                   dimension, ctx)
    elif 'velocity' in entry:
        transform = velocity_boost(ctx, _parse_entry(ctx, entry['velocity']),
                                   entry.get('axis', 1), dimension)
    elif 'rotation' in entry:
        transform = rational_rotation(_rational_entry(entry['rotation']),
                                      tuple(entry.get('axes', (1, 2))), dimension, ctx)
    else:
        raise ModelError('Observer entry needs one of linear, boost, velocity or rotation')

    if entry.get('translation') is not None:
        shift = translation(ctx, [_parse_entry(ctx, value) for value in entry['translation']])
        transform = shift.compose(transform)
    return transform

def _curve_from_json(ctx, dimension, entry):
    if entry.get('kind', CurveKind.UnifAccel) == CurveKind.Inertial:
        return inertial_lifecurve(_observer_from_json(ctx, dimension, entry['transform']))
    offset = entry.get('offset')
    if offset is not None:
        offset = [_rational_entry(value) for value in offset]
    return unif_lifecurve(_rational_entry(entry['acceleration']), offset, dimension)

def model_from_json(data, ctx=None):
    """Build a model from its JSON description (a dict)."""
    try:
        ctx = ctx or context_by_name(data.get('context', 'rational'))
        dimension = int(data.get('dimension', defaults.DIMENSION))
        observers = [_observer_from_json(ctx, dimension, entry)
                     for entry in data.get('observers', [])]
        photons = [([_parse_entry(ctx, value) for value in entry['point']],
                    [_parse_entry(ctx, value) for value in entry['direction']])
                   for entry in data.get('photons', [])]
        accelerated = [_curve_from_json(ctx, dimension, entry)
                       for entry in data.get('accelerated', [])]
        policy = data.get('photon_policy', PhotonPolicy.Synthetic)
    except (KeyError, TypeError, ValueError, AttributeError) as e:
        raise ModelError('Malformed model description: %s' % e)
    except SqrtUnavailableInContext:
        # The entry is well formed but names a value outside the field.
        raise
    except (FieldError, MinkowskiError, WorldlineError) as e:
        raise ModelError('Invalid model description: %s' % e)

    return build_model(ctx, dimension, observers, policy, photons, accelerated)

def load_model(path, ctx=None):
    """Read a model description file."""
    try:
        with open(path) as model_file:
            data = json.load(model_file)
    except OSError as e:
        raise ModelError('Cannot read model %s: %s' % (path, e))
    except ValueError as e:
        raise ModelError('Model %s is not valid JSON: %s' % (path, e))

    if not isinstance(data, dict):
        raise ModelError('Model %s must be a JSON object' % path)
    return model_from_json(data, ctx)

def model_to_json(model):
    """JSON description of a model (model_from_json() reads it back)."""
    return {
        'context': model.ctx.name,
        'dimension': model.dimension,
        'photon_policy': model.photon_policy,
        'observers': [body.to_json() for body in model.observers()],
        'photons': [body.to_json() for body in model.photons()],
        'accelerated': [body.to_json() for body in model.accelerated_observers()],
    }

def dump_model(model, path):
    """Write a model description file."""
    try:
        with open(path, 'w', newline='\n') as model_file:
            json.dump(model_to_json(model), model_file, sort_keys=True, indent=2)
            model_file.write('\n')
    except OSError as e:
        raise ModelError('Cannot write model %s: %s' % (path, e))
