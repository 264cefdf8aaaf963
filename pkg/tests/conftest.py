import time

import pytest

from sepdepth.analyze import analyze_pair
from sepdepth.chartable import character_table_mod_p, common_prime
from sepdepth.corpus import corpus_pairs


@pytest.fixture(scope="session")
def corpus_reports():
    """(pair_name, G, H, report) for the whole corpus, plus wall time.

    Computed once per session; several agreement checks iterate over it.
    """
    reports = []
    tables = {}
    t0 = time.time()
    for name, G, H in corpus_pairs():
        if G.name not in tables:
            prime = common_prime(G, G)
            tables[G.name] = character_table_mod_p(G, prime=prime)
        reports.append((name, G, H, analyze_pair(G, H, table_g=tables[G.name])))
    return reports, time.time() - t0
