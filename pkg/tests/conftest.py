"""Shared fixtures.

The expensive object in the whole suite is the family L-value table at
sigma = 1 extended far enough for Y = 10^5 sampling; it is built once
per session and shared by the acceptance tests that need it.
"""

import time

import pytest

from quartic_hecke import cli, density, lfunc


@pytest.fixture(scope="session")
def family_table_sigma1():
    table = lfunc.FamilyLTable(lfunc.LValueParams(sigma=1.0))
    t0 = time.perf_counter()
    table.samples(10**5, threads=1)
    print("\n[family table at sigma=1 extended for Y=1e5 in %.1f s]" % (time.perf_counter() - t0))
    return table


@pytest.fixture(scope="session")
def experiment_summaries(family_table_sigma1, tmp_path_factory):
    """Full pipeline runs at Y = 1e3 and Y = 1e5, sharing the table."""
    out = {}
    for big_y in (10**3, 10**5):
        out_dir = tmp_path_factory.mktemp("experiment_Y%d" % big_y)
        summary = cli.experiment_run(
            sigma=1.0,
            big_y=float(big_y),
            prime_cutoff=10.0**6,
            threads=1,
            grid=density.GridSpec(),
            out_dir=str(out_dir),
            table=family_table_sigma1,
        )
        out[big_y] = summary
    return out
