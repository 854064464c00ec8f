"""Joint scheduling actions: one entry per AP, packed into a single flat index.

Entry 0 means the AP stays silent; entry j in 1..K serves the j-th UE of that
AP's candidate list. The flat index is positional base-(K+1) with AP 0 as the
most significant digit, so the space has exactly (K+1)^N actions.
"""

import numpy as np


def num_joint_actions(num_aps: int, top_k: int) -> int:
    return (top_k + 1) ** num_aps


def encode_action(per_ap, top_k: int) -> int:
    """Pack per-AP choices (each in 0..K) into a flat index."""
    flat = 0
    base = top_k + 1
    for entry in per_ap:
        entry = int(entry)
        if not 0 <= entry <= top_k:
            raise ValueError(f"per-AP entry {entry} outside [0, {top_k}]")
        flat = flat * base + entry
    return flat


def decode_action(flat_index: int, num_aps: int, top_k: int) -> np.ndarray:
    """Unpack a flat index into per-AP choices (inverse of encode_action)."""
    flat_index = int(flat_index)
    if not 0 <= flat_index < num_joint_actions(num_aps, top_k):
        raise ValueError(f"flat index {flat_index} outside the joint action space")
    base = top_k + 1
    per_ap = np.zeros(num_aps, dtype=np.int64)
    for n in range(num_aps - 1, -1, -1):
        per_ap[n] = flat_index % base
        flat_index //= base
    return per_ap
