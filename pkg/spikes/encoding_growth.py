from fractions import Fraction
import timeit

import numpy

from gradsat.dataset import NumericalDataset
from gradsat.encoder import build_instance, predicted_size
from gradsat.miner import GradualMiner

# random dataset comparable to a small paleoecological table
rng = numpy.random.default_rng(0)
n, m = 30, 6
ds = NumericalDataset(['a{}'.format(a) for a in range(m)],
                      rng.integers(0, 20, size=(n, m)))

if __name__ == '__main__':
    for k in range(2, 11):
        instance = build_instance(ds, k)
        assert (instance.variable_count, instance.num_clauses) == \
            predicted_size(n, m, k)
        seconds = timeit.timeit(lambda: build_instance(ds, k), number=3) / 3
        print('k={:2d} min_supp={:.3f} vars={:6d} clauses={:7d} '
              'encode={:.4f}s'.format(k, float(Fraction(k, n)),
                                      instance.variable_count,
                                      instance.num_clauses, seconds))

    for k in (8, 10):
        miner = GradualMiner(ds)
        results = miner.mine_k(k)
        print('k={} patterns={} {}'.format(k, len(results),
                                           miner.statistics))
