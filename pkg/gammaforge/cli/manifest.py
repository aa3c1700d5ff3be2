# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports
import hashlib
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional

# Third pary imports

# Local imports
from .. import __version__


def file_digest(path):
    """Full sha256 hex digest of a file's bytes."""
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


@dataclass
class RunManifest:
    """
    Provenance of one command run, written next to its outputs.

    Attributes
    ----------
    command: str
    config: dict | None
        SearchConfig.to_dict() when the run enumerated
    axiom_mode: dict | None
    seed: int | None
    inputs, outputs: dict
        File name -> sha256 digest
    wall_time_s: float
    """

    command: str
    tool_version: str = __version__
    config: Optional[dict] = None
    axiom_mode: Optional[dict] = None
    seed: Optional[int] = None
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    wall_time_s: float = 0.0

    def add_input(self, path):
        self.inputs[Path(path).name] = file_digest(path)

    def add_output(self, path):
        self.outputs[Path(path).name] = file_digest(path)

    def to_dict(self):
        d = asdict(self)
        d['inputs'] = dict(sorted(self.inputs.items()))
        d['outputs'] = dict(sorted(self.outputs.items()))
        d['wall_time_s'] = round(self.wall_time_s, 6)
        return d

    def write(self, out_dir):
        path = Path(out_dir) / 'manifest.json'
        path.write_text(json.dumps(self.to_dict(), indent=2) + '\n',
                        encoding='utf-8')
        return path
