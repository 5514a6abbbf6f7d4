import functools

from rsdel import build_code


@functools.lru_cache(maxsize=None)
def get_spec(p, n, delta=None):
    # build_code searches for an irreducible cubic; cache so repeated test
    # modules don't redo it for the big primes
    return build_code(p, n, delta_override=delta)
