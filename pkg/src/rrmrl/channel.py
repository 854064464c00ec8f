"""Per-slot radio propagation: path loss, shadowing, Rayleigh fading, SINR, rate.

Link budget in dB:  loss = PL(d) + X_sh,  with PL(d) = 15.3 + 37.6*log10(d) + PL_ref
(indoor 3GPP-style model) and X_sh ~ N(0, shadow_std^2) log-normal shadowing.
Short-term Rayleigh fading multiplies the linear power gain by a unit-mean
exponential draw, redrawn independently every slot.
"""

from dataclasses import dataclass

import numpy as np

from .units import dbm_to_mw


@dataclass(frozen=True)
class ChannelParams:
    """Static link-budget parameters."""

    pl_ref_db: float = 10.0
    shadow_std_db: float = 8.0
    tx_power_dbm: float = 10.0
    noise_power_dbm: float = -104.0

    def __post_init__(self):
        if self.shadow_std_db < 0:
            raise ValueError("shadow_std_db must be >= 0")
        for name in ("pl_ref_db", "shadow_std_db", "tx_power_dbm", "noise_power_dbm"):
            if not np.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    @property
    def tx_power_mw(self) -> float:
        return float(dbm_to_mw(self.tx_power_dbm))

    @property
    def noise_power_mw(self) -> float:
        return float(dbm_to_mw(self.noise_power_dbm))


@dataclass(frozen=True)
class ChannelGainMatrix:
    """Linear power gains |h_mn|^2 for all UE-AP pairs at one slot."""

    gains: np.ndarray  # (M, N), strictly positive
    slot_index: int

    def __post_init__(self):
        g = np.asarray(self.gains)
        if g.ndim != 2:
            raise ValueError("gains must be an M x N matrix")
        if not (np.isfinite(g).all() and (g > 0).all()):
            raise ValueError("gains must be strictly positive and finite")


def path_loss_db(distance, pl_ref_db):
    """Indoor path loss 15.3 + 37.6*log10(d) + PL_ref, d in meters."""
    distance = np.asarray(distance, dtype=float)
    if np.any(distance <= 0):
        raise ValueError("distance must be positive")
    return 15.3 + 37.6 * np.log10(distance) + pl_ref_db


def channel_gain_linear(pl_db, shadow_db, fading):
    """Linear power gain 10^(-(PL + X_sh)/10) * F for given realizations."""
    return 10.0 ** (-(np.asarray(pl_db, dtype=float) + shadow_db) / 10.0) * fading


def sample_shadowing_db(shape, params: ChannelParams, rng: np.random.Generator):
    """Log-normal shadowing in dB, one draw per link (held for an episode)."""
    return rng.normal(0.0, params.shadow_std_db, size=shape)


def sample_fading(shape, rng: np.random.Generator):
    """Unit-mean exponential power fading (|h|^2 of unit-variance Rayleigh)."""
    return rng.exponential(1.0, size=shape)


def sample_channel_gain(distance, params: ChannelParams, rng: np.random.Generator):
    """One full channel draw: path loss + fresh shadowing + fresh fading."""
    pl = path_loss_db(distance, params.pl_ref_db)
    shadow = sample_shadowing_db(np.shape(pl), params, rng)
    fading = sample_fading(np.shape(pl), rng)
    return channel_gain_linear(pl, shadow, fading)


def sinr_linear(gains_row, serving_ap, active_aps, params: ChannelParams):
    """SINR of one UE: own-AP signal over sum of active interferers plus noise.

    `gains_row` holds the UE's linear gains to all N APs; only APs in
    `active_aps` transmit this slot and the serving AP must be among them.
    """
    gains_row = np.asarray(gains_row, dtype=float)
    active = np.zeros(gains_row.shape[0], dtype=bool)
    active[list(active_aps)] = True
    if not active[serving_ap]:
        raise ValueError("serving AP must be active")
    p = params.tx_power_mw
    signal = gains_row[serving_ap] * p
    active[serving_ap] = False
    interference = float(np.sum(gains_row[active]) * p)
    return signal / (interference + params.noise_power_mw)


def instantaneous_rate(sinr):
    """Shannon spectral efficiency log2(1 + SINR) in bits/s/Hz."""
    sinr = np.asarray(sinr, dtype=float)
    if np.any(sinr < 0):
        raise ValueError("sinr must be non-negative")
    return np.log2(1.0 + sinr)
