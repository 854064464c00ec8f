"""Experiment configuration: dataclasses, flat key=value files, stable hashing.

A config file is plain text, one `key = value` per line, keys named exactly
after the dataclass fields below (channel parameters included, flattened).
Any key can also be overridden on the command line with `--set key=value`.
"""

from dataclasses import dataclass, field, fields, replace
import hashlib

from .channel import ChannelParams

TOPK_REFRESH_MODES = ("slot", "episode")


@dataclass(frozen=True)
class NetworkConfig:
    """Everything that defines one wireless scenario."""

    area_side: float = 500.0
    num_aps: int = 4
    num_ues: int = 24
    top_k: int = 3
    min_ap_ue_dist: float = 10.0
    min_ap_ap_dist: float = 1.0
    slots_per_episode: int = 2000
    ue_speed: float = 1.0
    mu1: float = -1.0  # score weight on the sum rate; -1 resolves to 1/num_ues
    mu2: float = 3.0  # score weight on the 5-percentile rate
    fairness_exponent: float = 0.8  # exponent on the scheduling weights in the reward
    pf_step: float = 0.05  # smoothing step of the average-rate recursion
    rate_floor: float = 1e-3  # floor on smoothed rates before inversion to weights
    topk_refresh: str = "slot"  # "slot": re-rank candidates every slot; "episode": freeze at reset
    sinr_clip_lo_db: float = -30.0
    sinr_clip_hi_db: float = 40.0
    pl_ref_db: float = 10.0
    shadow_std_db: float = 8.0
    tx_power_dbm: float = 10.0
    noise_power_dbm: float = -104.0
    seed: int = 0

    def __post_init__(self):
        if self.mu1 < 0:
            object.__setattr__(self, "mu1", 1.0 / self.num_ues)
        if self.top_k > self.num_ues:
            raise ValueError("top_k must be <= num_ues")
        if not 0.0 <= self.fairness_exponent <= 1.0:
            raise ValueError("fairness_exponent must lie in [0, 1]")
        if not 0.0 < self.pf_step <= 1.0:
            raise ValueError("pf_step must lie in (0, 1]")
        if self.slots_per_episode < 1:
            raise ValueError("slots_per_episode must be >= 1")
        if self.topk_refresh not in TOPK_REFRESH_MODES:
            raise ValueError(f"topk_refresh must be one of {TOPK_REFRESH_MODES}")

    @property
    def channel(self) -> ChannelParams:
        return ChannelParams(
            pl_ref_db=self.pl_ref_db,
            shadow_std_db=self.shadow_std_db,
            tx_power_dbm=self.tx_power_dbm,
            noise_power_dbm=self.noise_power_dbm,
        )

    @property
    def obs_dim(self) -> int:
        return 2 * self.num_aps * self.top_k

    @property
    def num_actions(self) -> int:
        return (self.top_k + 1) ** self.num_aps


@dataclass(frozen=True)
class TrainConfig:
    """Optimizer and training-loop knobs shared by the online and offline trainers."""

    gamma: float = 0.99
    alpha: float = 1.0  # conservative penalty weight
    num_quantiles: int = 8
    learning_rate: float = 1e-5
    epochs: int = 100
    gradient_steps: int = 1000
    batch_size: int = 128
    target_sync_period: int = 500  # gradient steps between target-network copies
    replay_capacity: int = 100_000
    train_episodes: int = 150
    train_start: int = 1000  # transitions collected before updates begin
    epsilon_start: float = 1.0
    epsilon_end: float = 0.05
    epsilon_decay_fraction: float = 0.3  # fraction of total env steps for the linear decay
    hidden_sizes: tuple = (256, 256)
    huber_kappa: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.gamma <= 1.0:
            raise ValueError("gamma must lie in [0, 1]")
        if self.alpha < 0:
            raise ValueError("alpha must be >= 0")
        if self.num_quantiles < 1:
            raise ValueError("num_quantiles must be >= 1")
        if isinstance(self.hidden_sizes, list):
            object.__setattr__(self, "hidden_sizes", tuple(self.hidden_sizes))


def _parse_value(raw: str, target_type):
    raw = raw.strip()
    if target_type is int:
        return int(raw)
    if target_type is float:
        return float(raw)
    if target_type is str:
        return raw
    if target_type is tuple:
        return tuple(int(v) for v in raw.replace(",", " ").split())
    raise ValueError(f"unsupported config field type {target_type}")


def _field_types(cls):
    return {f.name: f.type for f in fields(cls)}


_NETWORK_TYPES = {f.name: type(getattr(NetworkConfig(), f.name)) for f in fields(NetworkConfig)}
_TRAIN_TYPES = {f.name: type(getattr(TrainConfig(), f.name)) for f in fields(TrainConfig)}


def parse_config_text(text: str) -> dict:
    """Parse `key = value` lines (with # comments) into raw string pairs."""
    out = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'key = value'")
        key, value = line.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def configs_from_pairs(pairs: dict) -> tuple[NetworkConfig, TrainConfig]:
    """Build the two config objects from a flat key->string map."""
    net_kwargs, train_kwargs = {}, {}
    for key, raw in pairs.items():
        if key in _NETWORK_TYPES:
            net_kwargs[key] = _parse_value(raw, _NETWORK_TYPES[key])
        elif key in _TRAIN_TYPES:
            train_kwargs[key] = _parse_value(raw, _TRAIN_TYPES[key])
        else:
            raise KeyError(f"unknown config key: {key}")
    return NetworkConfig(**net_kwargs), TrainConfig(**train_kwargs)


def load_config_file(path) -> tuple[NetworkConfig, TrainConfig]:
    with open(path, "r", encoding="utf-8") as fh:
        return configs_from_pairs(parse_config_text(fh.read()))


def apply_overrides(net: NetworkConfig, train: TrainConfig, overrides: dict):
    """Apply `--set key=value` overrides on top of parsed configs."""
    net_kwargs, train_kwargs = {}, {}
    for key, raw in overrides.items():
        if key in _NETWORK_TYPES:
            net_kwargs[key] = _parse_value(str(raw), _NETWORK_TYPES[key])
        elif key in _TRAIN_TYPES:
            train_kwargs[key] = _parse_value(str(raw), _TRAIN_TYPES[key])
        else:
            raise KeyError(f"unknown config key: {key}")
    if net_kwargs:
        net = replace(net, **net_kwargs)
    if train_kwargs:
        train = replace(train, **train_kwargs)
    return net, train


def format_config(net: NetworkConfig, train: TrainConfig) -> str:
    """Canonical flat dump; stable field order so the text (and hash) is reproducible."""
    lines = []
    for cfg in (net, train):
        for f in fields(cfg):
            value = getattr(cfg, f.name)
            if isinstance(value, tuple):
                value = " ".join(str(v) for v in value)
            lines.append(f"{f.name} = {value}")
    return "\n".join(lines) + "\n"


def network_config_hash(net: NetworkConfig) -> str:
    """Hash of the scenario identity (seed excluded: the same physics under a
    different seed is still the same scenario)."""
    lines = [
        f"{f.name}={getattr(net, f.name)!r}" for f in fields(NetworkConfig) if f.name != "seed"
    ]
    return hashlib.sha256("\n".join(lines).encode()).hexdigest()[:16]


def desk_profile() -> tuple[NetworkConfig, TrainConfig]:
    """Small-area, short-episode profile sized for minutes-scale runs.

    The 50 m square packs the four APs close enough that interference, not
    noise, limits the rates, which is the regime where scheduler choice and
    AP silencing actually matter.
    """
    net = NetworkConfig(area_side=50.0, slots_per_episode=200)
    train = TrainConfig(
        learning_rate=1e-3,
        epochs=40,
        gradient_steps=150,
        train_episodes=150,
        train_start=1000,
    )
    return net, train


def full_profile() -> tuple[NetworkConfig, TrainConfig]:
    """Full-size profile (long episodes, slow learning rate); multi-hour runs."""
    net = NetworkConfig(area_side=500.0, slots_per_episode=2000)
    train = TrainConfig(learning_rate=1e-5, epochs=100, gradient_steps=1000, train_episodes=150)
    return net, train


PROFILES = {"desk": desk_profile, "full": full_profile}
