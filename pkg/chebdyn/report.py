from __future__ import annotations

from dataclasses import dataclass, field
from importlib import import_module
from typing import Any, Dict, List

from .decomposition import (Ball, Basin, BasinKind, CertificateStatus, Decomposition,
                            MinimalComponent)
from .errors import UsageError
from .padic import Residue

SCHEMA_VERSION = '1'
ALIAS_BOUND = 2


@dataclass(frozen=True)
class ReportDocument:
    kind: str
    payload: Dict[str, Any]
    command: Dict[str, Any] = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION

    def asdict(self):
        return {
            'schema_version': self.schema_version,
            'command': self.command,
            'kind': self.kind,
            'payload': self.payload,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'ReportDocument':
        for key in ('schema_version', 'kind', 'payload'):
            if key not in data:
                raise UsageError(f"Report document is missing '{key}'")
        return cls(data['kind'], data['payload'], data.get('command', {}), data['schema_version'])


class Report:
    """Renders report documents through the renderer of the chosen format."""

    def __init__(self, format: str = 'json'):
        try:
            renderer_module = import_module(f"chebdyn.{format}.renderer")
        except ImportError:
            raise UsageError(f"Unknown report format '{format}'")

        self.renderer = renderer_module.Renderer()
        if not hasattr(self.renderer, 'format'):
            raise UsageError("The renderer must expose a 'format' attribute")
        self.format = self.renderer.format

    def render(self, document: ReportDocument) -> str:
        return self.renderer.render(document)


def ball_to_dict(ball: Ball) -> dict:
    result = {'center': str(ball.center.value), 'level': ball.level}
    signed = ball.center.signed
    if signed != ball.center.value and abs(signed) <= ALIAS_BOUND:
        result['alias'] = str(signed)
    return result


def ball_from_dict(data: dict) -> Ball:
    return Ball(Residue(int(data['level']), int(data['center'])))


def balls_to_list(balls) -> List[dict]:
    return [ball_to_dict(b) for b in balls]


def component_to_dict(component: MinimalComponent) -> dict:
    return {
        'balls': balls_to_list(component.balls),
        'cycle_length': component.cycle_length,
        'status': component.status.value,
    }


def component_from_dict(data: dict) -> MinimalComponent:
    return MinimalComponent(tuple(ball_from_dict(b) for b in data['balls']),
                            int(data['cycle_length']), CertificateStatus(data['status']))


def basin_to_dict(basin: Basin) -> dict:
    return {
        'kind': basin.kind.value,
        'region': balls_to_list(basin.region),
        'attractor_orbit': balls_to_list(basin.attractor_orbit),
        'period': basin.period,
    }


def basin_from_dict(data: dict) -> Basin:
    return Basin(tuple(ball_from_dict(b) for b in data['region']),
                 tuple(ball_from_dict(b) for b in data['attractor_orbit']),
                 int(data['period']), BasinKind(data['kind']))


def decomposition_to_dict(decomposition: Decomposition, polynomial=None) -> dict:
    result = {
        'max_level': decomposition.max_level,
        'periodic_localizations': balls_to_list(decomposition.periodic_localizations),
        'components': [component_to_dict(c) for c in decomposition.components],
        'basins': [basin_to_dict(b) for b in decomposition.basins],
        'unresolved': balls_to_list(decomposition.unresolved),
        'measure': str(decomposition.measure()),
    }
    if polynomial is not None:
        result['polynomial'] = str(polynomial)
    return result


def decomposition_from_dict(data: dict) -> Decomposition:
    return Decomposition(
        int(data['max_level']),
        tuple(ball_from_dict(b) for b in data['periodic_localizations']),
        tuple(component_from_dict(c) for c in data['components']),
        tuple(basin_from_dict(b) for b in data['basins']),
        tuple(ball_from_dict(b) for b in data['unresolved']),
    )


def cycles_to_dict(polynomial, level: int, classified) -> dict:
    """`classified` is a sequence of (Cycle, CycleClass) pairs."""
    return {
        'polynomial': str(polynomial),
        'level': level,
        'cycles': [{
            'points': [str(v) for v in cycle.values],
            'length': len(cycle),
            'class': cls.behavior.value,
            'a_mod4': cls.a_mod4,
            'b_mod2': cls.b_mod2,
        } for cycle, cls in classified],
    }


def lemma_to_dict(report, check_lemma: bool) -> dict:
    result = {
        'm': report.m,
        's': report.parameter.s,
        'q': report.parameter.q,
        'sign': report.parameter.sign,
        'coefficients': [str(c) for c in report.coefficients],
        'valuations': [v.k for v in report.valuations],
    }
    if check_lemma:
        result['lemma'] = {
            'verdict': 'PASS' if report.passed else 'FAIL',
            'coefficient_sum': str(report.coefficient_sum),
            'derivative_mod4': report.derivative_mod4,
            'failures': list(report.failures),
        }
    return result


def verdict_to_dict(verdict) -> dict:
    return {
        'm': verdict.m,
        'budget': verdict.budget,
        'case': verdict.case,
        'verdict': 'PASS' if verdict.passed else 'FAIL',
        'matched': [component_to_dict(c) for c in verdict.matched],
        'missing': [component_to_dict(c) for c in verdict.missing],
        'extra': [component_to_dict(c) for c in verdict.extra],
        'uncertified': [component_to_dict(c) for c in verdict.uncertified],
        'stray': balls_to_list(verdict.stray),
        'fixed_points': [str(x) for x in verdict.fixed_points],
        'problems': list(verdict.problems),
    }


def oracle_to_dict(polynomial, balls, check_level: int, minimal: bool) -> dict:
    return {
        'polynomial': str(polynomial),
        'balls': balls_to_list(balls),
        'check_level': check_level,
        'minimal': minimal,
    }
