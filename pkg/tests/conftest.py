import pytest

from qrstab.numtheory import classify_prime
from qrstab.type1 import Type1Spec, Type1Variant, build_type1
from qrstab.type2 import Layout, QcsSpec, QcsVariant, build_qcs

_CACHE = {}


@pytest.fixture(scope="session")
def make_type1():
    def factory(p, variant=None, rows=None):
        key = ("t1", p, variant, rows)
        if key not in _CACHE:
            ctx = classify_prime(p)
            if variant is None:
                variant = (Type1Variant.RESIDUE_PAIR if p % 4 == 3
                           else Type1Variant.PLUS_FORM)
            _CACHE[key] = build_type1(Type1Spec(ctx, variant, row_subset=rows))
        return _CACHE[key]
    return factory


@pytest.fixture(scope="session")
def make_qcs():
    def factory(p, layout="h1-adj2", removed=None):
        key = ("t2", p, layout, removed)
        if key not in _CACHE:
            ctx = classify_prime(p)
            variant = QcsVariant.A if p % 4 == 3 else QcsVariant.B
            _CACHE[key] = build_qcs(QcsSpec(ctx, variant, Layout(layout),
                                            tuple(removed) if removed else None))
        return _CACHE[key]
    return factory
