"""Finitely presented non-well-founded sets: infinitons, semi-infinitons and quasi-infinitons."""
from .audit import (
    AuditReport,
    RegularityReport,
    Stage,
    check_regularity,
    check_stage_equal_v,
    ezf_closure_audit,
    russell_audit,
    spectrum_stage,
    standard_samples,
)
from .canon import canonicalize
from .equality import EqReport, Reason, bisimilar, canonical_base, eq_distinguish, ezf_equal
from .functors import FunctorConfig, functor_inf, functor_quasi, functor_semi
from .igs import (
    fin_generated,
    homogeneity_prefix_check,
    infiniton,
    omega_invariant,
    quasi_infiniton,
    semi_infiniton,
    sublimits,
    unfold,
)
from .kernels import BACKEND
from .ordinal import (
    ALEPH0,
    OMEGA,
    Cmp,
    Dimension,
    Ordinal,
    OrdKind,
    dim_sup_plus1,
    ord_add,
    ord_cmp,
    ord_kind,
    parse_ordinal,
    render_ordinal,
)
from .rank import Classification, NotInV, classify, dimension, partition_class, rank_t, rank_v
from .serial import deserialize, render, serialize
from .system import NULLITY, GenSpec, Kind, RawSystem, SetSystem, Unpack

__all__ = [name for name in dir() if not name.startswith("_")]
