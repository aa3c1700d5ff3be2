# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports

# Third pary imports
import pytest

# Local imports
from gammaforge.cli import main


@pytest.fixture(scope="module")
def create_enumeration(tmp_path_factory):
    """
    Runs the enumerate command for n = 2, g = 1 into a fresh output and
    cache directory
    """

    out = tmp_path_factory.mktemp('enumerate')
    cache = tmp_path_factory.mktemp('cache')
    argv = ['enumerate', '--order', '2', '--gamma', '1',
            '--out', str(out), '--cache-dir', str(cache)]
    code = main(argv)
    return {'argv': argv, 'code': code, 'out': out, 'cache': cache}
