"""Computing with numerical semigroups and their arithmetic varieties.

Quotients, arithmetic extensions, smallest closed families, bounded
enumeration of doubles, depth-bounded tree generation, and an
exhaustive brute-force oracle cross-validating all of it.
"""

from .core import (
    DEFAULT_LIMIT,
    Invariants,
    NATURALS,
    NumericalSemigroup,
    proportionally_modular,
)
from .doubles import (
    DoubleLabel,
    build_double,
    doubles_bounded,
    frobenius_of_double,
    halve,
    is_upper_m_set,
    upper_m_sets,
)
from .errors import (
    BadM,
    BoundTooLarge,
    GcdNotOne,
    InvalidCertificate,
    IsNaturals,
    NonPositiveDivisor,
    NotASemigroup,
    NotGapSubset,
    PredicateNotClosed,
    SemigroupError,
    TooLarge,
    UnknownFormat,
)
from .oracle import (
    ENUMERATION_CAP,
    EnumerationReport,
    all_semigroups_up_to,
    doubles_oracle,
    extension_oracle,
)
from .tree import (
    ALL_SEMIGROUPS,
    VarietyPredicate,
    VarietyTree,
    children,
    depth_predicate,
    enumerate_tree,
    export_tree,
)
from .varieties import (
    ExtremalElements,
    VarietySet,
    arithmetic_extensions,
    extremal_elements,
    is_arithmetic_extension,
    monoid_hull,
    smallest_variety,
)

__version__ = "0.1.0"
