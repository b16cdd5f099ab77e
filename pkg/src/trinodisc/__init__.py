"""Square divisors of trinomial values and consecutive p-th powers mod p**2.

The library computes, for odd primes p:

* the roots of ((x+1)**p - x**p - 1)/p mod p, classified into orbits,
  and the consecutive p-th power pairs mod p**2 they index;
* the explicit correspondence between those pairs and residue classes n
  with p**2 | n**n + eps*(n-m)**(n-m)*m**m, in both directions;
* exact trinomial discriminants, resultants, the cyclotomic-factor
  reducibility classification, and the related divisibility families;
* the exceptional sets driving inclusion-exclusion bounds for the density
  of squarefree values of n**n + (-1)**n*(n-1)**(n-1).
"""

from .correspondence import (
    PairWitness,
    ResidueSet,
    a_set,
    alpha,
    b_set,
    beta,
    bsgs,
    d_eps_divisible,
    in_p,
    in_p_cons,
    in_p_tilde,
    is_sixth_root_pair,
    quadratic_form_divisible,
    sixth_root_pairs,
    witness_holds,
)
from .density import (
    CensusTable,
    CpSet,
    DensityBounds,
    DpqSet,
    build_cp,
    build_dpq,
    census,
    cp_average,
    density_estimate,
    ie_bounds,
    poisson_root_density,
    squarefree_scan,
    tail_sum,
)
from .errors import (
    CacheCorrupt,
    IncompleteCache,
    InvalidArgument,
    InvalidPrime,
    NotCoprime,
    NotInvertible,
    OrbitDecompositionFailure,
    PreconditionFailed,
    SizeGuard,
    TrinodiscError,
    WitnessConstructionFailure,
)
from .fproots import (
    INFINITY,
    ConsecutivePair,
    RootCensus,
    classify_roots,
    consecutive_pairs,
    fp_roots,
    is_wieferich,
    orbit_of,
)
from .modarith import (
    PrimeContext,
    PthPowerTable,
    context,
    invmod,
    is_pth_power,
    mult_order,
    powmod,
    primitive_root,
    pth_power_lift,
    pth_power_table,
)
from .primes import is_prime, primes_list
from .scan import ScanSummary, scan
from .trinomials import (
    AbcReport,
    CyclotomicFactor,
    Poly,
    TrinomialClass,
    abc_report,
    cyclotomic_resultant,
    d_value,
    discriminant,
    ljunggren_classify,
    resultant,
    strange_divisibility_check,
    trinomial_discriminant,
)

__version__ = "0.1.0"
