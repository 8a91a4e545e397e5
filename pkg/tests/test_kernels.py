import random

import pytest

from gbs_sep import kernels
from gbs_sep.numtheory import PrimeSet, enumerate_omega

py = kernels.load("python")
try:
    cy = kernels.load("cython")
except ImportError:  # extension not built
    cy = None

needs_cy = pytest.mark.skipif(cy is None, reason="compiled kernel not built")

GROUPS = [(n, r0 * k, s) for n in (-3, 2, 3) for r0, s in enumerate_omega(n, PrimeSet.all(), 40)
          for k in range(1, 40 // (r0 * s) + 1)]


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")
    assert kernels.kernel is (cy if kernels.BACKEND == "cython" else py)


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.load("fortran")


@needs_cy
@pytest.mark.parametrize("fn", ["bruteforce_class_labels", "criterion_bruteforce_disagreements", "axiom_violations"])
def test_backends_agree_whole_group(fn):
    for n, r, s in GROUPS:
        assert getattr(cy, fn)(n % s, r, s) == getattr(py, fn)(n % s, r, s)


@needs_cy
def test_backends_agree_pointwise():
    rng = random.Random(11)
    for _ in range(2000):
        n, r, s = rng.choice(GROUPS)
        args = (n % s, r, s, rng.randrange(r), rng.randrange(s), rng.randrange(r), rng.randrange(s))
        assert cy.conjugate_bruteforce(*args) == py.conjugate_bruteforce(*args)
        assert cy.criterion_conjugate(*args) == py.criterion_conjugate(*args)


def test_python_kernel_zero_disagreements():
    for n, r, s in GROUPS:
        assert py.criterion_bruteforce_disagreements(n % s, r, s) == 0


def test_non_group_parameters_are_detected():
    # (2, 5) is not in Omega(3): the multiplication is not associative
    assert py.axiom_violations(3, 2, 5) > 0
    if cy is not None:
        assert cy.axiom_violations(3, 2, 5) == py.axiom_violations(3, 2, 5)
