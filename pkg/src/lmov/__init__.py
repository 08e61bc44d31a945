"""Exact-arithmetic integrality invariants of the framed unknot.

Modules:

* ``arith``      -- Moebius function, divisors, extended and Gaussian
  binomials, coprime factorials.
* ``partitions`` -- integer partitions and symmetric-group characters.
* ``qa``         -- exact Laurent / rational algebra in q^(1/2), a^(1/2),
  quantum integers, Adams operations, the z^2 basis.
* ``series``     -- truncated power series, functional-equation solving,
  plethystic logarithm and exponential.
* ``genus0``     -- disc, annulus and multi-hole invariants with their
  Moebius-inversion assembly and integrality certificates.
* ``onehole``    -- all-genus one-hole invariants from the colored
  quantum-invariant side, plus the general-partition conjecture checker.
* ``gwdt``       -- reduced partition functions, Ooguri-Vafa and
  Donaldson-Thomas extraction, the GW/DT series identity.
* ``twist``      -- extremal BPS invariants of twist knots.
* ``cli``        -- the ``lmov`` command-line front end.
"""

__version__ = "0.1.0"
