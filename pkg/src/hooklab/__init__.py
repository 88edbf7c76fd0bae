"""Exact and asymptotic counts of hooks of length t in l-regular and
l-distinct partitions."""

from .asymptotics import (
    AsymptoticEstimate,
    LimitConstants,
    alpha,
    b_main,
    beta,
    d_main,
    digamma,
    g2,
    g3,
    limit_constants,
)
from .oracle import (
    HookCountRecord,
    Kind,
    PartitionClass,
    generate,
    hook_total_oracle,
    liwang_difference_count,
)
from .partitions import (
    Partition,
    conjugate,
    count_hooks,
    glaisher,
    hook_profile,
    is_distinct,
    is_regular,
)
from .qseries import TruncatedSeries, hook_count, hook_count_series

__version__ = "0.1.0"
