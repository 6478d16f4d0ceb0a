"""Command-line interface.

Subcommands cover each stage: fano-curve and noise for the model, simulate
for synthetic data, analyze and fit-temperature for the measurement
pipeline, mc-fano for the Monte Carlo cross-check. Data goes to stdout (or
--out), diagnostics to stderr. Exit codes: 0 success, 1 I/O failure,
2 invalid input.
"""

import argparse
import json
import sys

from . import analysis, noise, spectra, synth, transport
from .constants import CODATA
from .errors import FanolightError
from .formatting import sig9

__all__ = ["main"]

_CONFIG_KEYS = {
    "voltage", "temperature", "saturations", "z_range", "n_steps",
    "tunneling_decay", "contact_g", "bin_width", "energy_range",
    "base_rate", "noise_mode", "seed",
}


def _parse_floats(text: str, flag: str) -> tuple[float, ...]:
    try:
        values = tuple(float(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"{flag} must be comma-separated decimals, got {text!r}") from None
    if not values:
        raise ValueError(f"{flag} must not be empty")
    return values


def _parse_pair(text: str, flag: str) -> tuple[float, float]:
    values = _parse_floats(text, flag)
    if len(values) != 2:
        raise ValueError(f"{flag} must be two comma-separated decimals, got {text!r}")
    return values[0], values[1]


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _json_object(items: list[tuple[str, object]]) -> str:
    parts = []
    for key, value in items:
        if isinstance(value, bool):
            rendered = "true" if value else "false"
        elif isinstance(value, int):
            rendered = str(value)
        else:
            rendered = sig9(value)
        parts.append(f'  "{key}": {rendered}')
    return "{\n" + ",\n".join(parts) + "\n}\n"


def _cmd_fano_curve(args: argparse.Namespace) -> int:
    model = transport.DecompositionModel(
        _parse_floats(args.saturations, "--saturations")
    )
    curve = transport.fano_curve(
        model, args.g_min, args.g_max, args.points, spacing=args.spacing
    )
    lines = ["conductance_G0,fano"]
    lines.extend(f"{sig9(g)},{sig9(f)}" for g, f in curve)
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_noise(args: argparse.Namespace) -> int:
    channels = transport.ChannelSet(_parse_floats(args.channels, "--channels"))
    env = noise.NoiseEnvironment(args.voltage, args.temperature)
    current = transport.total_transmission(channels) * CODATA.G0 * abs(args.voltage)
    payload = [
        ("fano", transport.fano(channels)),
        ("schottky", noise.schottky(current)),
        ("shot_noise", noise.shot_noise(channels, current)),
        ("thermal_noise", noise.thermal_noise(channels, env)),
        ("normalized_yield", noise.normalized_yield(channels, env)),
    ]
    _emit(_json_object(payload), args.out)
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    spectral_map = spectra.parse_map(_read(args.map))
    band_1e = spectra.Band(*_parse_pair(args.band_1e, "--band-1e")) if args.band_1e else None
    band_2e = spectra.Band(*_parse_pair(args.band_2e, "--band-2e")) if args.band_2e else None
    window = _parse_pair(args.norm_window, "--norm-window")
    curve = analysis.yield_curve(
        spectral_map, args.voltage, band_1e, band_2e, window
    )
    _emit(analysis.curve_to_csv(curve), args.out)
    return 0


def _cmd_fit_temperature(args: argparse.Namespace) -> int:
    curve = analysis.curve_from_csv(_read(args.yields), args.voltage)
    model = transport.DecompositionModel(
        _parse_floats(args.saturations, "--saturations")
    )
    bounds = _parse_pair(args.bounds, "--bounds")
    result = analysis.fit_temperature(curve, model, args.voltage, bounds)
    payload = [
        ("temperature", result.temperature),
        ("residual_sum_squares", result.residual_sum_squares),
        ("iterations", result.iterations),
        ("converged", result.converged),
    ]
    _emit(_json_object(payload), args.out)
    return 0


def _config_from_json(path: str) -> synth.SynthConfig:
    try:
        raw = json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid config JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise ValueError("config JSON must be an object")
    unknown = set(raw) - _CONFIG_KEYS
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    kwargs = dict(raw)
    saturations = kwargs.pop("saturations", None)
    if saturations is not None:
        kwargs["model"] = transport.DecompositionModel(tuple(saturations))
    for key in ("z_range", "energy_range"):
        if key in kwargs:
            kwargs[key] = tuple(kwargs[key])
    return synth.SynthConfig(**kwargs)


def _cmd_simulate(args: argparse.Namespace) -> int:
    if args.config:
        config = _config_from_json(args.config)
    else:
        model = transport.DecompositionModel(
            _parse_floats(args.saturations, "--saturations")
        )
        config = synth.SynthConfig(
            voltage=args.voltage,
            temperature=args.temperature,
            model=model,
            z_range=(args.z_start, args.z_stop),
            n_steps=args.steps,
            tunneling_decay=args.decay,
            contact_g=args.contact_g,
            bin_width=args.bin_width,
            energy_range=(args.energy_min, args.energy_max),
            base_rate=args.base_rate,
            noise_mode=args.noise,
            seed=args.seed,
        )
    _emit(spectra.serialize_map(synth.synth_map(config)), args.out)
    return 0


def _cmd_mc_fano(args: argparse.Namespace) -> int:
    channels = transport.ChannelSet(_parse_floats(args.channels, "--channels"))
    result = noise.mc_fano(channels, args.attempts, args.seed)
    payload = [
        ("estimate", result.estimate),
        ("std_error", result.std_error),
        ("closed_form", transport.fano(channels)),
    ]
    _emit(_json_object(payload), args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanolight",
        description="Shot-noise suppression and photon yield of atomic point contacts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fano-curve", help="Fano factor along a conductance grid (CSV)")
    p.add_argument("--saturations", default="0.93,1.0",
                   help="channel saturations, comma-separated (default 0.93,1.0)")
    p.add_argument("--g-min", type=float, required=True, help="grid start, units of G0")
    p.add_argument("--g-max", type=float, required=True, help="grid end, units of G0")
    p.add_argument("--points", type=int, default=500, help="grid size (default 500)")
    p.add_argument("--spacing", choices=("log", "linear"), default="log")
    p.add_argument("--out", help="write to file instead of stdout")
    p.set_defaults(handler=_cmd_fano_curve)

    p = sub.add_parser("noise", help="noise densities and yield of a channel set (JSON)")
    p.add_argument("--channels", required=True,
                   help="transmissions, comma-separated (e.g. 0.93,0.07)")
    p.add_argument("--voltage", type=float, required=True, help="bias voltage, V")
    p.add_argument("--temperature", type=float, required=True,
                   help="electron temperature, K")
    p.add_argument("--out", help="write to file instead of stdout")
    p.set_defaults(handler=_cmd_noise)

    p = sub.add_parser("analyze", help="reduce a spectral map to a yield curve (CSV)")
    p.add_argument("--map", required=True, help="spectral-map CSV path")
    p.add_argument("--voltage", type=float, required=True, help="bias voltage, V")
    p.add_argument("--band-1e", help="override 1e band as lo,hi in eV")
    p.add_argument("--band-2e", help="override high-energy band as lo,hi in eV")
    p.add_argument("--norm-window", default="1e-3,5e-2",
                   help="conductance window anchoring the normalization")
    p.add_argument("--out", help="write to file instead of stdout")
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("fit-temperature",
                       help="fit the electron temperature to a yield curve (JSON)")
    p.add_argument("--yields", required=True, help="yield-curve CSV path")
    p.add_argument("--voltage", type=float, required=True, help="bias voltage, V")
    p.add_argument("--saturations", default="0.93,1.0",
                   help="channel saturations, comma-separated (default 0.93,1.0)")
    p.add_argument("--bounds", default="1,5000",
                   help="temperature search interval in K (default 1,5000)")
    p.add_argument("--out", help="write to file instead of stdout")
    p.set_defaults(handler=_cmd_fit_temperature)

    p = sub.add_parser("simulate", help="generate a synthetic spectral map (CSV)")
    p.add_argument("--config", help="JSON config path; overrides the inline flags")
    p.add_argument("--saturations", default="0.93,1.0")
    p.add_argument("--voltage", type=float, default=1.6)
    p.add_argument("--temperature", type=float, default=2000.0)
    p.add_argument("--z-start", type=float, default=0.0, help="nm")
    p.add_argument("--z-stop", type=float, default=0.356, help="nm")
    p.add_argument("--steps", type=int, default=60)
    p.add_argument("--decay", type=float, default=0.045,
                   help="tunneling decay length, nm")
    p.add_argument("--contact-g", type=float, default=0.93)
    p.add_argument("--bin-width", type=float, default=0.01, help="eV")
    p.add_argument("--energy-min", type=float, default=1.1, help="eV")
    p.add_argument("--energy-max", type=float, default=2.2, help="eV")
    p.add_argument("--base-rate", type=float, default=1e8,
                   help="counts/s per A at unit yield")
    p.add_argument("--noise", choices=("none", "poisson"), default="none")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write to file instead of stdout")
    p.set_defaults(handler=_cmd_simulate)

    p = sub.add_parser("mc-fano", help="Monte Carlo Fano estimate (JSON)")
    p.add_argument("--channels", required=True,
                   help="transmissions, comma-separated")
    p.add_argument("--attempts", type=int, default=1000000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write to file instead of stdout")
    p.set_defaults(handler=_cmd_mc_fano)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (FanolightError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
