"""Exact n-link visibility toolkit: counterexample constructions, their
verification, and the finite shutter process."""

from ._core import (
    Construction,
    LinkstarError,
    line_through,
    orientation,
    proof_witness_index,
    run_cli,
    seeded_shutter_input,
    sees_through_T,
    shutter_run,
)

__all__ = [
    "Construction",
    "LinkstarError",
    "line_through",
    "orientation",
    "proof_witness_index",
    "run_cli",
    "seeded_shutter_input",
    "sees_through_T",
    "shutter_run",
]
