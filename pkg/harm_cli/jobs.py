"""Cache keys and records for harmonic components."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Tuple

from groups.groups import GroupSpec
from harmonics.engine import ENGINE_VERSION, ComponentJob
from harmonics.series import FROBENIUS, HILBERT
from symfunc.partitions import Partition


@dataclass(frozen=True)
class JobKey:
    m: int
    p: int
    n: int
    r: int
    policy: str
    multidegree: Tuple[int, ...]
    kind: str = HILBERT
    version: str = ENGINE_VERSION

    @staticmethod
    def from_job(job: ComponentJob) -> JobKey:
        g = job.group
        return JobKey(g.m, g.p, g.n, job.r, job.policy, tuple(job.multidegree), job.kind)


    @property
    def group(self) -> GroupSpec:
        return GroupSpec(self.m, self.p, self.n)


    def canonical(self) -> str:
        """Permuting the multidegree gives the same component, so it is
        sorted into weakly decreasing order.

        """
        d = ','.join(str(x) for x in sorted(self.multidegree, reverse=True))
        return f'{self.kind}:G({self.m},{self.p},{self.n}):r={self.r}:{self.policy}:d={d}:{self.version}'


def encode_payload(kind: str, payload):
    if kind == FROBENIUS:
        return {','.join(str(part) for part in lam): mult for lam, mult in payload.items()}
    return payload


def decode_payload(kind: str, data):
    if kind == FROBENIUS:
        return {Partition(int(part) for part in text.split(',')): mult for text, mult in data.items()}
    return data


@dataclass(frozen=True)
class ResultRecord:
    key: JobKey
    payload: object
    stats: Dict[str, object] = field(default_factory=dict)

    def verify(self):
        "Raise ValueError unless the payload could be a component."
        if self.key.kind == FROBENIUS:
            values = list(self.payload.values())
        else:
            values = [self.payload]
        if any(not isinstance(v, int) or isinstance(v, bool) or v < 0 for v in values):
            raise ValueError(f'bad payload {self.payload!r} for {self.key.canonical()}')


    def as_json(self):
        return {'key': self.key.canonical(),
                'payload': encode_payload(self.key.kind, self.payload),
                'stats': self.stats}


    @staticmethod
    def from_json(key: JobKey, data) -> ResultRecord:
        if data.get('key') != key.canonical():
            raise ValueError(f'record for {data.get("key")} looked up as {key.canonical()}')
        record = ResultRecord(key, decode_payload(key.kind, data['payload']), data.get('stats', {}))
        record.verify()
        return record
