# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports
import json
import logging
import os
import tempfile
from pathlib import Path

# Third pary imports
import numpy as np

# Local imports
from .. import __version__
from ..utils.tools import stable_digest

logger = logging.getLogger(__name__)

CACHE_ENV = 'GAMMA_FORGE_CACHE'


def default_cache_dir():
    """$GAMMA_FORGE_CACHE, else ~/.cache/gamma-forge."""
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / '.cache' / 'gamma-forge'


def cache_key(cfg):
    """Digest of the tool version and the result-determining config."""
    return stable_digest({'version': __version__, 'config': cfg.to_dict()})


class ResultCache:
    """
    Content-addressed store of JSON payloads, one file per key.

    Files are written to a temporary name in the same directory and renamed
    into place, so an interrupted write never leaves a partial entry.
    """

    def __init__(self, root=None):
        self.root = Path(root) if root is not None else default_cache_dir()

    def path(self, key):
        return self.root / f"{key}.json"

    def keys(self):
        if not self.root.is_dir():
            return []
        return sorted(p.stem for p in self.root.glob('*.json'))

    def load(self, key):
        """Payload of key, None when missing or unreadable."""
        path = self.path(key)
        if not path.is_file():
            return None
        try:
            return json.loads(path.read_text(encoding='utf-8'))
        except (OSError, ValueError) as exc:
            logger.warning("Ignoring unreadable cache entry %s: %s",
                           path, exc)
            return None

    def store(self, key, payload):
        self.root.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.root, prefix=f".{key}.",
                                   suffix='.tmp')
        try:
            with os.fdopen(fd, 'w', encoding='utf-8') as fid:
                json.dump(payload, fid, separators=(',', ':'))
            os.replace(tmp, self.path(key))
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise
        logger.debug("Stored cache entry %s", key)

    def spot_check(self, recompute, seed=None, eligible=None):
        """
        Recompute one randomly chosen entry and compare.

        Parameters
        ----------
        recompute: callable
            payload -> fresh payload (same shape), or None when the entry
            cannot be recomputed
        seed: int | None
            Seed of the key choice. Default=None
        eligible: callable | None
            payload -> bool; entries it rejects are never recomputed.
            Default=None (every entry)

        Returns
        -------
        result: tuple | None
            (key, equal), None when no entry is eligible
        """

        keys = self.keys()
        for idx in np.random.default_rng(seed).permutation(len(keys)):
            key = keys[int(idx)]
            payload = self.load(key)
            if payload is None:
                return key, False
            if eligible is None or eligible(payload):
                break
        else:
            return None
        fresh = recompute(payload)
        if fresh is None:
            return None
        equal = fresh == payload
        if not equal:
            logger.error("Cache entry %s differs from a fresh computation",
                         key)
        return key, equal
