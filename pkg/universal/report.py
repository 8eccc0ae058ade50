"""Check results and the verification report."""
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import List

PASS = 'PASS'
FAIL = 'FAIL'
WARN = 'WARN'
SKIP = 'SKIP'
STATUSES = (PASS, FAIL, WARN, SKIP)

PUBLISHED = 'published'
DERIVED = 'derived'
TRIVIAL = 'trivial'


def plain(value):
    "A JSON-ready copy of value; anything unfamiliar becomes its str."
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, dict):
        return {str(key): plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(item) for item in value]
    return str(value)


@dataclass
class CheckResult:
    id: str
    description: str
    expected: object
    computed: object
    status: str
    provenance: str
    required: bool = True
    note: str = ''
    seconds: float = 0.0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f'unknown check status {self.status!r}')


    @property
    def failed(self) -> bool:
        return self.required and self.status == FAIL


    def as_dict(self):
        return {
            'id': self.id,
            'description': self.description,
            'expected': plain(self.expected),
            'computed': plain(self.computed),
            'status': self.status,
            'provenance': self.provenance,
            'required': self.required,
            'note': self.note,
            'seconds': round(self.seconds, 3),
        }


@dataclass
class VerificationReport:
    suite: str
    engine_version: str
    version_id: str = 'unknown'
    results: List[CheckResult] = field(default_factory=list)

    @property
    def failures(self) -> List[CheckResult]:
        return [result for result in self.results if result.failed]


    @property
    def ok(self) -> bool:
        return not self.failures


    def counts(self):
        counts = Counter(result.status for result in self.results)
        return {status: counts.get(status, 0) for status in STATUSES}


    def as_dict(self):
        return {
            'suite': self.suite,
            'engine_version': self.engine_version,
            'version_id': self.version_id,
            'counts': self.counts(),
            'ok': self.ok,
            'checks': [result.as_dict() for result in self.results],
        }


    def as_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)


    def render_text(self) -> str:
        lines = [f'suite {self.suite}, engine {self.engine_version}, version {self.version_id}']
        for result in self.results:
            flag = '' if result.required else ' (optional)'
            lines.append(f'{result.status:4}  {result.id}{flag}: {result.description} [{result.provenance}]')
            if result.status != PASS and result.status != SKIP:
                lines.append(f'      expected: {plain(result.expected)}')
                lines.append(f'      computed: {plain(result.computed)}')
            if result.note:
                lines.append(f'      {result.note}')
        counts = self.counts()
        lines.append(', '.join(f'{counts[status]} {status}' for status in STATUSES))
        return '\n'.join(lines)
