"""Command-line interface: ``enhance``, ``assess`` and ``bench``.

Exit codes: 0 success, 1 usage error, 2 I/O error, 3 unsupported geometry.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .errors import GeometryError
from .fusion import MergeMode
from .imageio import read_image, write_image
from .pipeline import METHODS, PipelineConfig, enhance_detailed, list_images, run_benchmark
from .retinex import EnhanceConfig
from .wavelet import FAMILIES, assess
from .colorspace import rgb_to_hsv

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_GEOMETRY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _sigmas(text: str) -> tuple[float, float, float]:
    try:
        vals = tuple(float(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad sigma list {text!r}") from None
    if len(vals) != 3:
        raise argparse.ArgumentTypeError("exactly three comma-separated sigma ratios are required")
    return vals


def _methods(text: str) -> tuple[str, ...]:
    vals = tuple(t.strip() for t in text.split(",") if t.strip())
    bad = [v for v in vals if v not in METHODS]
    if bad or not vals:
        raise argparse.ArgumentTypeError(f"unknown methods {bad}; choose from {','.join(METHODS)}")
    return vals


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mrretinex", description="Multirate multiscale retinex enhancement")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--wavelet", choices=sorted(FAMILIES), default="db2")

    p = sub.add_parser("enhance", parents=[common], help="enhance one image")
    p.add_argument("--method", choices=METHODS, default="proposed")
    p.add_argument("--in", dest="input", required=True, type=Path)
    p.add_argument("--out", dest="output", required=True, type=Path)
    p.add_argument("--sigmas", type=_sigmas, help="three surround sigma ratios, e.g. 0.06,0.31,0.98")
    p.add_argument("--merge", choices=("mask", "zero-test", "naive"), default="mask")
    p.add_argument("--figure", type=Path, help="also render original/value/enhanced panels here")

    p = sub.add_parser("assess", parents=[common], help="wavelet-energy comparison of two images")
    p.add_argument("--original", required=True, type=Path)
    p.add_argument("--enhanced", required=True, type=Path)

    p = sub.add_parser("bench", parents=[common], help="AWE/DWE report over a directory")
    p.add_argument("--in", dest="input", required=True, type=Path)
    p.add_argument("--methods", type=_methods, default=METHODS)
    p.add_argument("--report", choices=("json", "csv"), default="csv")
    p.add_argument("--out", dest="output", required=True, type=Path)
    p.add_argument("--sigmas", type=_sigmas)
    p.add_argument("--merge", choices=("mask", "zero-test", "naive"), default="mask")
    p.add_argument("--no-figures", action="store_true", help="skip the AWE/DWE bar chart")

    p = sub.add_parser("synth", help="write a synthetic MRI-like test corpus")
    p.add_argument("--out", dest="output", required=True, type=Path)
    p.add_argument("-n", type=int, default=20)
    p.add_argument("--size", type=int, default=256)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("ppm", "png", "pgm"), default="ppm")
    return parser


def _config(args, method="proposed") -> PipelineConfig:
    enh = EnhanceConfig(sigma_ratios=args.sigmas) if getattr(args, "sigmas", None) else EnhanceConfig()
    return PipelineConfig(
        method=method,
        merge_mode=MergeMode.parse(getattr(args, "merge", "mask")),
        enhance=enh,
        wavelet=args.wavelet,
        report_format=getattr(args, "report", "csv"),
    )


def cmd_enhance(args) -> int:
    cfg = _config(args, args.method)
    loaded = read_image(args.input)
    result = enhance_detailed(loaded.rgb, cfg)
    write_image(args.output, result.rgb, grayscale=loaded.grayscale, format=loaded.format)
    verdict = assess(result.hsv_in[..., 2], result.hsv_out[..., 2], cfg.wavelet)
    summary = {"method": cfg.method, "black_spots": result.black_spots, **verdict.to_dict()}
    print(json.dumps(summary))
    if args.figure:
        from .plotting import plot_enhancement

        plot_enhancement(loaded.rgb, result, args.figure, title=f"{args.input.name} ({cfg.method})")
    return EXIT_OK


def cmd_assess(args) -> int:
    orig = read_image(args.original)
    enh = read_image(args.enhanced)
    verdict = assess(rgb_to_hsv(orig.rgb)[..., 2], rgb_to_hsv(enh.rgb)[..., 2], args.wavelet)
    print(json.dumps(verdict.to_dict(), indent=2))
    return EXIT_OK


def cmd_bench(args) -> int:
    cfg = _config(args)
    paths = list_images(args.input)
    report = run_benchmark(paths, args.methods, cfg)
    args.output.parent.mkdir(parents=True, exist_ok=True)
    args.output.write_text(report.dumps(args.report))
    for err in report.errors:
        print(f"warning: {err['image_id']} [{err['method']}]: {err['error']}", file=sys.stderr)
    if not args.no_figures and report.rows:
        from .plotting import plot_wavelet_energy

        fig_path = args.output.with_name(args.output.stem + "_wavelet_energy.png")
        plot_wavelet_energy(report, fig_path)
    return EXIT_OK


def cmd_synth(args) -> int:
    from .synthetic import write_corpus

    paths = write_corpus(args.output, args.n, args.size, args.seed, suffix="." + args.format)
    print(f"wrote {len(paths)} images to {args.output}")
    return EXIT_OK


COMMANDS = {"enhance": cmd_enhance, "assess": cmd_assess, "bench": cmd_bench, "synth": cmd_synth}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
