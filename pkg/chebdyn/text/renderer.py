from typing import List

from ..report import ReportDocument


def ball_text(ball: dict) -> str:
    text = f"{ball['center']} + 2^{ball['level']}*Z2"
    if 'alias' in ball:
        text += f" (= {ball['alias']})"
    return text


def balls_text(balls: List[dict]) -> str:
    return ', '.join(ball_text(b) for b in balls) if balls else '-'


class Renderer:
    """Plain text for people reading a terminal; not meant to be parsed back."""
    format = 'text'

    def render(self, document: ReportDocument) -> str:
        method = getattr(self, f"render_{document.kind}", None)
        if method is None:
            return self.render_generic(document.payload)
        return '\n'.join(method(document.payload))

    def render_generic(self, payload: dict) -> str:
        return '\n'.join(f"{key}: {payload[key]}" for key in sorted(payload))

    def render_decomposition(self, payload: dict):
        yield f"decomposition of {payload.get('polynomial', 'f')} to level {payload['max_level']}"
        for component in payload['components']:
            yield (f"  component [{component['status']}] cycle length {component['cycle_length']}: "
                   f"{balls_text(component['balls'])}")
        for basin in payload['basins']:
            yield (f"  basin [{basin['kind']}] period {basin['period']}: {balls_text(basin['region'])}"
                   f" -> {balls_text(basin['attractor_orbit'])}")
        for ball in payload['periodic_localizations']:
            yield f"  periodic point in {ball_text(ball)}"
        for ball in payload['unresolved']:
            yield f"  unresolved {ball_text(ball)}"
        yield f"measure {payload['measure']}"

    def render_cycles(self, payload: dict):
        yield f"cycles of {payload['polynomial']} mod 2^{payload['level']}"
        for cycle in payload['cycles']:
            witnesses = f"a={cycle['a_mod4']}"
            if cycle['b_mod2'] is not None:
                witnesses += f" b={cycle['b_mod2']}"
            yield f"  ({', '.join(cycle['points'])}): {cycle['class']} ({witnesses})"

    def render_coefficients(self, payload: dict):
        yield f"T_{payload['m']}: m = 2^{payload['s']}*{payload['q']} {'+' if payload['sign'] > 0 else '-'} 1"
        for i, (c, v) in enumerate(zip(payload['coefficients'], payload['valuations'])):
            yield f"  c_{2 * i + 1} = {c}  v2 = {'inf' if v is None else v}"
        lemma = payload.get('lemma')
        if lemma is not None:
            yield f"lemma check: {lemma['verdict']}"
            for failure in lemma['failures']:
                yield f"  {failure}"

    def render_verdict(self, payload: dict):
        yield f"T_{payload['m']} to level {payload['budget']} ({payload['case']} case): {payload['verdict']}"
        yield f"  matched components: {len(payload['matched'])}"
        for name in ('missing', 'extra', 'uncertified'):
            for component in payload[name]:
                yield f"  {name}: {balls_text(component['balls'])}"
        for ball in payload['stray']:
            yield f"  stray residual ball: {ball_text(ball)}"
        yield f"  fixed points: {', '.join(payload['fixed_points']) or '-'}"
        for problem in payload['problems']:
            yield f"  problem: {problem}"

    def render_oracle(self, payload: dict):
        verdict = 'minimal' if payload['minimal'] else 'not minimal'
        yield (f"{payload['polynomial']} on {balls_text(payload['balls'])} "
               f"to level {payload['check_level']}: {verdict}")

    def render_error(self, payload: dict):
        yield f"error [{payload['code']}]: {payload['message']}"
