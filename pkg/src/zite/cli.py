"""Command-line front end.

Configs are UTF-8 text, one ``key=value`` per line, ``#`` starts a comment.
Every key can also be given as ``--key value`` and overrides the file.

    zite --config run.cfg --out result.csv
    zite galerkin --n preset:n1 --eta const:1

Exit status: 0 success, 1 config error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import io
import sys
from dataclasses import dataclass
from typing import Optional

from . import analytic, studies
from .coefficients import BOUNDARY, VOLUME, Coefficient, parse_coefficient
from .errors import ConfigError, ZiteError

COMMANDS = ("analytic", "galerkin", "compare", "sweep-eta", "monotone", "reconstruct")
DEFAULT_CASES = "preset:n1|preset:eta1;const:4|const:1;preset:n2|preset:eta2"


@dataclass(frozen=True)
class RunConfig:
    command: str = "galerkin"
    n_spec: str = "const:4"
    eta_spec: str = "const:1"
    p_max: int = 3
    q_max: int = 4
    radial_order: int = 64
    angular_count: int = 256
    k_max: float = 3.5
    m_max: int = 3
    output_path: Optional[str] = None
    convention: str = analytic.EXACT
    direction: str = studies.TO_INFINITY
    method: str = "analytic"
    cases: str = DEFAULT_CASES
    n_lo: float = 2.0
    n_hi: float = 8.0
    grid_count: int = 25
    fit_degree: int = 5
    workers: int = 1
    symmetric_modes: bool = False

    @property
    def n(self) -> Coefficient:
        return parse_coefficient(self.n_spec, VOLUME)

    @property
    def eta(self) -> Coefficient:
        return parse_coefficient(self.eta_spec, BOUNDARY)

    @property
    def basis_shape(self) -> tuple[int, int]:
        return (self.p_max, self.q_max)

    @property
    def resolution(self) -> studies.Resolution:
        return studies.Resolution(self.radial_order, self.angular_count, self.workers)


def _bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("true", "1", "yes", "on"):
        return True
    if low in ("false", "0", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


# config key -> (RunConfig field, value parser)
KEYS = {
    "command": ("command", str),
    "n": ("n_spec", str),
    "eta": ("eta_spec", str),
    "p_max": ("p_max", int),
    "q_max": ("q_max", int),
    "radial_order": ("radial_order", int),
    "angular_count": ("angular_count", int),
    "k_max": ("k_max", float),
    "m_max": ("m_max", int),
    "output": ("output_path", str),
    "convention": ("convention", str),
    "direction": ("direction", str),
    "method": ("method", str),
    "cases": ("cases", str),
    "n_lo": ("n_lo", float),
    "n_hi": ("n_hi", float),
    "grid_count": ("grid_count", int),
    "fit_degree": ("fit_degree", int),
    "workers": ("workers", int),
    "symmetric_modes": ("symmetric_modes", _bool),
}
_FIELD_TO_KEY = {f: k for k, (f, _) in KEYS.items()}


def parse_cases(text: str) -> list[tuple[Coefficient, Coefficient]]:
    cases = []
    for chunk in text.split(";"):
        n_spec, sep, eta_spec = chunk.partition("|")
        if not sep:
            raise ConfigError(f"case {chunk!r} must look like <n-spec>|<eta-spec>")
        cases.append((parse_coefficient(n_spec, VOLUME), parse_coefficient(eta_spec, BOUNDARY)))
    return cases


def validate(cfg: RunConfig) -> RunConfig:
    def need(cond, msg):
        if not cond:
            raise ConfigError(msg)

    need(cfg.command in COMMANDS, f"unknown command {cfg.command!r}; expected one of {COMMANDS}")
    cfg.n, cfg.eta  # noqa: B018  (raises ConfigError on bad specs)
    need(0 <= cfg.p_max <= 20, "p_max must lie in 0..20")
    need(1 <= cfg.q_max <= 50, "q_max must lie in 1..50")
    need(2 <= cfg.radial_order <= 256, "radial_order must lie in 2..256")
    need(cfg.angular_count >= 4 and cfg.angular_count % 2 == 0, "angular_count must be even and >= 4")
    need(0 < cfg.k_max <= 50, "k_max must lie in (0, 50]")
    need(0 <= cfg.m_max <= 20, "m_max must lie in 0..20")
    need(cfg.convention in analytic.CONVENTIONS, f"convention must be one of {analytic.CONVENTIONS}")
    need(cfg.direction in (studies.TO_ZERO, studies.TO_INFINITY), "direction must be to_zero or to_infinity")
    need(cfg.method in ("analytic", "galerkin"), "method must be analytic or galerkin")
    need(0 < cfg.n_lo < cfg.n_hi, "need 0 < n_lo < n_hi")
    need(cfg.grid_count >= 2, "grid_count must be at least 2")
    need(1 <= cfg.fit_degree < cfg.grid_count, "fit_degree must lie in 1..grid_count-1")
    need(cfg.workers >= 1, "workers must be positive")
    parse_cases(cfg.cases)
    return cfg


def _apply(values: dict, key: str, raw: str, where: str) -> None:
    if key not in KEYS:
        raise ConfigError(f"{where}: unknown key {key!r}")
    fname, conv = KEYS[key]
    try:
        values[fname] = conv(raw.strip())
        if key == "n":
            parse_coefficient(values[fname], VOLUME)
        elif key == "eta":
            parse_coefficient(values[fname], BOUNDARY)
        elif key == "cases":
            parse_cases(values[fname])
    except ConfigError as exc:
        raise ConfigError(f"{where}: {exc}") from None
    except ValueError:
        raise ConfigError(f"{where}: malformed value {raw.strip()!r} for {key!r}") from None


def parse_config(text: str, overrides: Optional[dict] = None) -> RunConfig:
    """Parse a config document; ``overrides`` (key -> raw string) win over the text."""
    values: dict = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        key, sep, raw = body.partition("=")
        if not sep:
            raise ConfigError(f"line {lineno}: expected key=value, got {line.strip()!r}")
        _apply(values, key.strip(), raw, f"line {lineno}")
    for key, raw in (overrides or {}).items():
        _apply(values, key, raw, f"option --{key}")
    return validate(RunConfig(**values))


def render(cfg: RunConfig) -> str:
    lines = []
    for f in dataclasses.fields(cfg):
        val = getattr(cfg, f.name)
        if val is None:
            continue
        if isinstance(val, float):
            val = repr(val)
        lines.append(f"{_FIELD_TO_KEY[f.name]}={val}")
    return "\n".join(lines) + "\n"


def _fmt(x) -> str:
    return "" if x is None else f"{x:.6g}"


def _eigen_sections(real, imag) -> str:
    out = ["index,k_real"]
    out += [f"{i},{_fmt(k)}" for i, k in enumerate(real, 1)]
    out += ["", "index,k_imag_magnitude"]
    out += [f"{i},{_fmt(k)}" for i, k in enumerate(imag, 1)]
    return "\n".join(out) + "\n"


def _rows_csv(rows, width: int) -> str:
    header = ["parameter", "label"] + [f"k{j}" for j in range(1, width + 1)] + ["roc"]
    out = [",".join(header)]
    for row in rows:
        ks = list(row.k_values) + [None] * (width - len(row.k_values))
        out.append(",".join([_fmt(row.parameter), row.label] + [_fmt(k) for k in ks] + [_fmt(row.roc)]))
    return "\n".join(out) + "\n"


def _constant(c: Coefficient, what: str) -> float:
    if not c.is_constant:
        raise ConfigError(f"command needs a constant {what}, got {c}")
    return c.value


def execute(cfg: RunConfig) -> str:
    """Run a validated config and return the CSV text."""
    res = cfg.resolution
    if cfg.command == "analytic":
        prob = analytic.ConstantProblem(_constant(cfg.n, "n"), _constant(cfg.eta, "eta"))
        eig = analytic.analytic_eigenvalues(prob, cfg.m_max, cfg.k_max, cfg.convention)
        return _eigen_sections([e.k for e in eig], [])
    if cfg.command == "galerkin":
        spec = studies.galerkin_spectrum(cfg.n, cfg.eta, cfg.basis_shape, res, cfg.symmetric_modes)
        return _eigen_sections([k for k in spec.real_k if k <= cfg.k_max],
                               [k for k in spec.imaginary_k if k <= cfg.k_max])
    if cfg.command == "compare":
        rows = studies.compare_table(_constant(cfg.n, "n"), _constant(cfg.eta, "eta"),
                                     cfg.basis_shape, 3, res, cfg.convention)
        out = ["index,k_approx,k_exact,relative_error"]
        out += [f"{r.index},{_fmt(r.k_approx)},{_fmt(r.k_exact)},{_fmt(r.relative_error)}" for r in rows]
        return "\n".join(out) + "\n"
    if cfg.command == "sweep-eta":
        n = _constant(cfg.n, "n")
        etas = studies.DEFAULT_ETAS[cfg.direction]
        if cfg.method == "galerkin":
            rows = studies.limit_study_eta(n, cfg.direction, cfg.basis_shape, etas, res)
        elif cfg.direction == studies.TO_INFINITY:
            rows = analytic.eta_sweep_to_infinity(n, etas, cfg.convention)
        else:
            rows = analytic.eta_sweep_to_zero(n, etas, cfg.convention)
        return _rows_csv(rows, 1)
    if cfg.command == "monotone":
        rows = studies.monotonicity_table(parse_cases(cfg.cases), cfg.basis_shape, 3, res)
        return _rows_csv(rows, 3)
    if cfg.command == "reconstruct":
        result = studies.reconstruct_from_coefficient(
            cfg.n, cfg.eta, cfg.basis_shape, res, n_range=(cfg.n_lo, cfg.n_hi),
            grid_count=cfg.grid_count, fit_degree=cfg.fit_degree)
        out = ["n_approx,k1_target,fit_degree",
               f"{_fmt(result.n_approx)},{_fmt(result.k1_target)},{result.fit_degree}",
               "", "n,k1"]
        out += [f"{_fmt(n)},{_fmt(k)}" for n, k in result.grid]
        return "\n".join(out) + "\n"
    raise ConfigError(f"unknown command {cfg.command!r}")


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    """Execute ``cfg`` and write CSV to ``cfg.output_path`` or ``stdout``."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        text = execute(cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=stderr)
        return 1
    except (ZiteError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=stderr)
        return 2
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags, which is reserved for numerical failures
    def error(self, message):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zite", description=__doc__.splitlines()[0],
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("positional_command", nargs="?", choices=COMMANDS, metavar="command",
                        help=f"one of {', '.join(COMMANDS)} (same as --command)")
    parser.add_argument("--config", help="path to a key=value config file")
    parser.add_argument("--out", help="write CSV here instead of standard output")
    for key in KEYS:
        if key == "output":
            continue
        flags = [f"--{key}"] + ([f"--{key.replace('_', '-')}"] if "_" in key else [])
        parser.add_argument(*flags, dest=f"key_{key}", metavar="VALUE")
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except ConfigError as exc:
        print(f"config error: {exc}", file=stderr)
        return 1
    overrides = {k[4:]: v for k, v in vars(args).items() if k.startswith("key_") and v is not None}
    if args.positional_command:
        overrides.setdefault("command", args.positional_command)
    if args.out:
        overrides["output"] = args.out
    text = ""
    try:
        if args.config:
            with io.open(args.config, encoding="utf-8") as fh:
                text = fh.read()
        cfg = parse_config(text, overrides)
    except OSError as exc:
        print(f"config error: {exc}", file=stderr)
        return 1
    except ConfigError as exc:
        print(f"config error: {exc}", file=stderr)
        return 1
    return run(cfg, stdout, stderr)


if __name__ == "__main__":
    sys.exit(main())
