# Copyright 2026 The fastdvm Authors.
# SPDX-License-Identifier: Apache-2.0

"""Fast delay Vandermonde matrix products."""

from ._fastdvm import (
    Node,
    beamform,
    complexity_table,
    direct_counts,
    direct_multiply,
    error_table,
    formula_counts,
    forward_error,
    multiply,
    synthesize_beam_source,
)

__all__ = [
    "Node",
    "beamform",
    "complexity_table",
    "direct_counts",
    "direct_multiply",
    "error_table",
    "formula_counts",
    "forward_error",
    "multiply",
    "synthesize_beam_source",
]
