import json

from ..errors import UsageError
from ..report import ReportDocument


class Renderer:
    """Canonical JSON: sorted keys, fixed indentation, big integers as decimal strings."""
    format = 'json'

    def __init__(self, indent: int = 2):
        self.indent = indent

    def render(self, document: ReportDocument) -> str:
        return json.dumps(document.asdict(), sort_keys=True, indent=self.indent, ensure_ascii=False)

    def load(self, text: str) -> ReportDocument:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise UsageError(f"Not a JSON report: {e.msg} (line {e.lineno}, column {e.colno})")
        if not isinstance(data, dict):
            raise UsageError("A JSON report must be an object")
        return ReportDocument.from_dict(data)
