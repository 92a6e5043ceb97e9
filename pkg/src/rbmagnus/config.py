"""Run configuration: dataclasses, TOML loading and validation."""

from __future__ import annotations

import sys
from dataclasses import asdict, dataclass, field, fields, is_dataclass, replace
from fractions import Fraction

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover - exercised on 3.10 only
    import tomli as tomllib

MODES = ("exact", "float", "all")
OPERATOR_KINDS = ("integral", "finite-sum", "summation", "min-sub", "matrix-lift")


class ConfigError(ValueError):
    """Malformed configuration; the message names the offending field."""


@dataclass(frozen=True)
class AlgebraConfig:
    dim: int = 2
    magnus_dim: int = 3
    poly_degree: int = 2
    sequence_length: int = 6
    laurent_pole_order: int = 2
    laurent_degree: int = 2
    summation_support: int = 6


@dataclass(frozen=True)
class OperatorConfig:
    """The configurable operator used alongside the fixed catalogue."""

    kind: str = "finite-sum"
    step: str = "1"
    horizon: int = 16


@dataclass(frozen=True)
class OrdersConfig:
    lambda_order: int = 6
    fixpoint_order: int = 5
    ef_order: int = 4
    ad_truncation: int = 20
    ad_terms_alpha: int = 40
    alpha_order: int = 16
    integration_steps: int = 10_000
    bk_terms: int = 30
    quad_points: int = 32
    fuzz_pairs: int = 100
    identity_terms: int = 5


@dataclass(frozen=True)
class ToleranceConfig:
    float_residual: float = 1e-8
    oracle_residual: float = 1e-10
    rb_float: float = 1e-12
    duhamel: float = 1e-6
    alpha_fixpoint: float = 1e-9
    ivp: float = 1e-7
    findiff: float = 1e-12
    dismag: float = 1e-10


@dataclass(frozen=True)
class InputsConfig:
    t_product_times: tuple = (0.3, 0.1, 0.7, 0.5)
    duhamel_point: float = 0.5
    dismag_sweep: tuple = (5, 10, 20, 30)


@dataclass(frozen=True)
class ProblemConfig:
    seed: int = 20240601
    mode: str = "all"
    algebra: AlgebraConfig = field(default_factory=AlgebraConfig)
    operator: OperatorConfig = field(default_factory=OperatorConfig)
    orders: OrdersConfig = field(default_factory=OrdersConfig)
    tolerances: ToleranceConfig = field(default_factory=ToleranceConfig)
    inputs: InputsConfig = field(default_factory=InputsConfig)

    def with_overrides(self, *, seed=None, mode=None, order=None) -> "ProblemConfig":
        cfg = self
        if seed is not None:
            cfg = replace(cfg, seed=int(seed))
        if mode is not None:
            cfg = replace(cfg, mode=mode)
        if order is not None:
            cfg = replace(
                cfg,
                orders=replace(cfg.orders, lambda_order=order, fixpoint_order=order, ef_order=order),
            )
        validate(cfg)
        return cfg

    def to_dict(self) -> dict:
        d = asdict(self)
        d["inputs"] = {k: list(v) if isinstance(v, tuple) else v for k, v in d["inputs"].items()}
        return d


def _build(cls, data, path: str):
    if not isinstance(data, dict):
        raise ConfigError(f"{path or 'config'}: expected a table, got {type(data).__name__}")
    known = {f.name: f for f in fields(cls)}
    unknown = sorted(set(data) - set(known))
    if unknown:
        raise ConfigError(f"{path or 'config'}: unknown key(s) {', '.join(unknown)}")
    kwargs = {}
    defaults = cls()
    for name, value in data.items():
        where = f"{path}.{name}" if path else name
        default = getattr(defaults, name)
        if is_dataclass(default):
            kwargs[name] = _build(type(default), value, where)
        else:
            kwargs[name] = _coerce(value, default, where)
    return cls(**kwargs)


def _coerce(value, default, where: str):
    if isinstance(default, bool):
        if not isinstance(value, bool):
            raise ConfigError(f"{where}: expected true/false")
        return value
    if isinstance(default, int):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError(f"{where}: expected an integer, got {value!r}")
        return value
    if isinstance(default, float):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"{where}: expected a number, got {value!r}")
        return float(value)
    if isinstance(default, str):
        if not isinstance(value, str):
            raise ConfigError(f"{where}: expected a string, got {value!r}")
        return value
    if isinstance(default, tuple):
        if not isinstance(value, list):
            raise ConfigError(f"{where}: expected an array")
        kind = type(default[0]) if default else float
        out = []
        for i, v in enumerate(value):
            out.append(_coerce(v, kind(0), f"{where}[{i}]"))
        return tuple(out)
    raise ConfigError(f"{where}: unsupported value {value!r}")  # pragma: no cover


def validate(cfg: ProblemConfig) -> None:
    if cfg.mode not in MODES:
        raise ConfigError(f"mode: expected one of {', '.join(MODES)}, got {cfg.mode!r}")
    if not 0 <= cfg.seed < 2**64:
        raise ConfigError("seed: expected a 64-bit unsigned integer")
    if cfg.operator.kind not in OPERATOR_KINDS:
        raise ConfigError(f"operator.kind: expected one of {', '.join(OPERATOR_KINDS)}")
    try:
        Fraction(cfg.operator.step)
    except (ValueError, ZeroDivisionError) as err:
        raise ConfigError(f"operator.step: not a rational number ({err})") from None
    positive = {
        "algebra.dim": cfg.algebra.dim,
        "algebra.magnus_dim": cfg.algebra.magnus_dim,
        "algebra.sequence_length": cfg.algebra.sequence_length,
        "operator.horizon": cfg.operator.horizon,
        "orders.ad_truncation": cfg.orders.ad_truncation,
        "orders.ad_terms_alpha": cfg.orders.ad_terms_alpha,
        "orders.integration_steps": cfg.orders.integration_steps,
        "orders.bk_terms": cfg.orders.bk_terms,
        "orders.quad_points": cfg.orders.quad_points,
        "orders.fuzz_pairs": cfg.orders.fuzz_pairs,
        "orders.identity_terms": cfg.orders.identity_terms,
    }
    for name, value in positive.items():
        if value < 1:
            raise ConfigError(f"{name}: must be positive")
    if cfg.algebra.sequence_length < 2:
        raise ConfigError("algebra.sequence_length: needs at least 2 entries")
    if cfg.algebra.summation_support >= cfg.operator.horizon:
        raise ConfigError("algebra.summation_support: must lie below operator.horizon")
    non_negative = {
        "algebra.poly_degree": cfg.algebra.poly_degree,
        "algebra.laurent_pole_order": cfg.algebra.laurent_pole_order,
        "algebra.laurent_degree": cfg.algebra.laurent_degree,
        "orders.lambda_order": cfg.orders.lambda_order,
        "orders.fixpoint_order": cfg.orders.fixpoint_order,
        "orders.ef_order": cfg.orders.ef_order,
        "orders.alpha_order": cfg.orders.alpha_order,
    }
    for name, value in non_negative.items():
        if value < 0:
            raise ConfigError(f"{name}: must be non-negative")
    for name, value in vars(cfg.tolerances).items():
        if not value > 0:
            raise ConfigError(f"tolerances.{name}: must be positive")
    if len(cfg.inputs.t_product_times) < 1:
        raise ConfigError("inputs.t_product_times: needs at least one time")
    if not cfg.inputs.dismag_sweep or any(m < 1 for m in cfg.inputs.dismag_sweep):
        raise ConfigError("inputs.dismag_sweep: needs positive truncations")


def from_dict(data: dict) -> ProblemConfig:
    cfg = _build(ProblemConfig, data, "")
    validate(cfg)
    return cfg


def loads(text: str) -> ProblemConfig:
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as err:
        raise ConfigError(f"config is not valid TOML: {err}") from None
    return from_dict(data)


def load(path) -> ProblemConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as err:
        raise ConfigError(f"cannot read config {path}: {err.strerror}") from None
    return loads(text)


def dumps(cfg: ProblemConfig) -> str:
    """TOML rendering of a configuration (flat tables, no nesting beyond one level)."""
    d = cfg.to_dict()
    lines = [f"seed = {d.pop('seed')}", f'mode = "{d.pop("mode")}"']
    for section, table in d.items():
        lines.append("")
        lines.append(f"[{section}]")
        for key, value in table.items():
            lines.append(f"{key} = {_toml_value(value)}")
    return "\n".join(lines) + "\n"


def _toml_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, str):
        return f'"{v}"'
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, list):
        return "[" + ", ".join(_toml_value(x) for x in v) + "]"
    return str(v)
