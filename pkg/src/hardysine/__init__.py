"""Numerical realization of the singular operator -d2/dx2 + (s^2 - 1/4)/sin^2(x) on (0, pi).

Subpackages:

* ``specfun``         -- complex gamma/digamma, 2F1 series, Bessel J0/J1
* ``closed_form``     -- solution families, boundary tables, factorization
* ``boundary_values`` -- Rellich-type generalized boundary value extraction
* ``spectral``        -- m-function, exact spectrum, Bessel-operator constants
* ``variational``     -- quadratic forms, Rayleigh-Ritz, Hardy inequality gaps
* ``cli``             -- command-line reports
"""

__version__ = "0.1.0"

REPORT_SPEC_VERSION = "1.0"
