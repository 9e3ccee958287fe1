"""Exact n-th derivatives of reciprocals, quotients and logarithms via partition sums."""

from quotientrule.exactnum import binomial, factorial, format_rat, multinomial, parse_rat
from quotientrule.jets import (
    DerivativeJet,
    JetOrderError,
    SingularPointError,
    eval_Ck,
    leibniz_product,
    log_jet,
    oracle_quotient_jet,
    oracle_reciprocal_jet,
    quotient_jet,
    reciprocal_jet,
)
from quotientrule.partitions import Partition, PartitionWeights, count, enumerate_partitions

__version__ = "0.1.0"

__all__ = [
    "DerivativeJet",
    "JetOrderError",
    "Partition",
    "PartitionWeights",
    "SingularPointError",
    "binomial",
    "count",
    "enumerate_partitions",
    "eval_Ck",
    "factorial",
    "format_rat",
    "leibniz_product",
    "log_jet",
    "multinomial",
    "oracle_quotient_jet",
    "oracle_reciprocal_jet",
    "parse_rat",
    "quotient_jet",
    "reciprocal_jet",
]
