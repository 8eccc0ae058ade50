"""Component cache.

JsonLinesCache is a Django cache backend over an append-only file of
newline-delimited JSON records.  Each set() appends one line and each
delete() appends a tombstone; opening the file replays it.  Entries
never expire.  ComponentStore puts the engine's lookup/record protocol
on top of any Django cache.

"""
import json
import logging
import os
import threading

from django.core.cache.backends.base import DEFAULT_TIMEOUT, BaseCache

from harm_cli.jobs import JobKey, ResultRecord

logger = logging.getLogger('harm_cli.cache')


class JsonLinesCache(BaseCache):
    def __init__(self, location, params):
        super().__init__(params)
        self.path = os.path.expanduser(location)
        self._lock = threading.Lock()
        self._data = None


    def _load(self):
        if self._data is not None:
            return self._data
        data = {}
        bad = 0
        if os.path.exists(self.path):
            with open(self.path, encoding='utf-8') as stream:
                for line in stream:
                    if not line.strip():
                        continue
                    try:
                        entry = json.loads(line)
                        key = entry['k']
                    except (ValueError, KeyError, TypeError):
                        bad += 1
                        continue
                    if entry.get('deleted'):
                        data.pop(key, None)
                    else:
                        data[key] = entry.get('v')
        if bad:
            logger.warning('skipped %d unreadable lines in %s', bad, self.path)
        logger.debug('loaded %d entries from %s', len(data), self.path)
        self._data = data
        return data


    def _append(self, entry):
        directory = os.path.dirname(self.path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(self.path, 'a', encoding='utf-8') as stream:
            stream.write(json.dumps(entry, sort_keys=True) + '\n')


    def add(self, key, value, timeout=DEFAULT_TIMEOUT, version=None):
        key = self.make_and_validate_key(key, version=version)
        with self._lock:
            data = self._load()
            if key in data:
                return False
            data[key] = value
            self._append({'k': key, 'v': value})
            return True


    def get(self, key, default=None, version=None):
        key = self.make_and_validate_key(key, version=version)
        with self._lock:
            return self._load().get(key, default)


    def set(self, key, value, timeout=DEFAULT_TIMEOUT, version=None):
        key = self.make_and_validate_key(key, version=version)
        with self._lock:
            self._load()[key] = value
            self._append({'k': key, 'v': value})


    def touch(self, key, timeout=DEFAULT_TIMEOUT, version=None):
        return self.has_key(key, version=version)


    def delete(self, key, version=None):
        key = self.make_and_validate_key(key, version=version)
        with self._lock:
            data = self._load()
            if key not in data:
                return False
            del data[key]
            self._append({'k': key, 'deleted': True})
            return True


    def has_key(self, key, version=None):
        key = self.make_and_validate_key(key, version=version)
        with self._lock:
            return key in self._load()


    def clear(self):
        with self._lock:
            self._data = {}
            if os.path.exists(self.path):
                os.remove(self.path)


class ComponentStore:
    """Cached component results, keyed by JobKey.

    A record that fails verification is treated as a miss and gets
    recomputed.

    """
    def __init__(self, cache):
        self.cache = cache
        self.hits = 0
        self.misses = 0


    def lookup(self, job):
        key = JobKey.from_job(job)
        data = self.cache.get(key.canonical(), version=key.version)
        if data is None:
            self.misses += 1
            logger.debug('miss %s', key.canonical())
            return None
        try:
            record = ResultRecord.from_json(key, data)
        except (ValueError, KeyError, TypeError, AttributeError) as error:
            self.misses += 1
            logger.warning('discarding cached %s: %s', key.canonical(), error)
            return None
        self.hits += 1
        logger.debug('hit %s', key.canonical())
        return record.payload


    def record(self, job, payload, stats):
        key = JobKey.from_job(job)
        record = ResultRecord(key, payload, stats)
        record.verify()
        self.cache.set(key.canonical(), record.as_json(), version=key.version)
