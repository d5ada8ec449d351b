"""Exact and p-adic verification of central-binomial sum identities.

The package is organized as small layers:

  exact      degree-2 jets and rational helpers
  padic      prime-power contexts and valuation-aware residues
  seqs       harmonic numbers, binomials, Bernoulli/Euler, primes
  kernels    hot loops, compiled when available (cbsums.kernels.BACKEND)
  gamma_p    Morita p-adic Gamma and its lemma checks
  identities exact finite identities, WZ certificate, term jets
  congruences truncated-sum supercongruence registry and engine
  series     high-precision evaluation of the infinite series
  cli        batch driver (`cbsums verify|series|list`)
"""

from .exact import BigRational, Jet2
from .padic import (
    NegativeValuationError,
    PadicValue,
    PrimePowerCtx,
    inv_mod,
    padic_compare,
    padic_reduce,
)

__version__ = "0.1.0"

__all__ = [
    "BigRational",
    "Jet2",
    "PrimePowerCtx",
    "PadicValue",
    "padic_reduce",
    "padic_compare",
    "inv_mod",
    "NegativeValuationError",
    "__version__",
]
