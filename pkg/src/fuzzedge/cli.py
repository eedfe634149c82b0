"""Command-line interface: detect | enhance | otsu | sobel | memristor."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .fuzzy import (
    CauchyAbs,
    CauchyEven,
    EnhanceConfig,
    MembershipSpec,
    PolynomialQuartic,
    SFunction,
    enhance_image,
)
from .image_io import (
    EdgeMap,
    GrayImage,
    PnmError,
    RgbImage,
    TextChannelError,
    read_pnm,
    read_text_channel,
    write_pnm,
)
from .memristor import memristive_edge_map, xor_trace
from .otsu import histogram, otsu_stats, otsu_threshold
from .pipeline import DetectConfig, DetectStats, detect_color
from .sobel import sobel_plane_direct, sobel_plane_incremental
from .stream_window import WindowGenerator


def _add_membership_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--membership",
        choices=["polynomial", "s", "cauchy-even", "cauchy-abs"],
        default="polynomial",
        help="membership shape (default: polynomial)",
    )
    p.add_argument("--alpha", type=float, default=1e-4, help="cauchy-even spread")
    p.add_argument("--beta", type=int, default=2, help="cauchy-even even exponent")
    p.add_argument("--alpha1", type=float, default=0.01, help="cauchy-abs spread")
    p.add_argument("--beta1", type=float, default=1.0, help="cauchy-abs exponent")
    p.add_argument(
        "--center", type=float, default=None,
        help="cauchy center; defaults to the enhancement threshold",
    )
    p.add_argument(
        "--knots", type=float, nargs=3, metavar=("A", "B", "C"), default=None,
        help="s-function knots; default is a +/-64 window around the threshold",
    )
    p.add_argument(
        "--coeffs", type=float, nargs=4, metavar=("A4", "A3", "A2", "A1"), default=None,
        help="override the quartic coefficients",
    )


def _build_membership(args: argparse.Namespace) -> MembershipSpec:
    if args.membership == "polynomial":
        return PolynomialQuartic(*args.coeffs) if args.coeffs else PolynomialQuartic()
    if args.membership == "cauchy-even":
        return CauchyEven(args.alpha, args.beta, args.center)
    if args.membership == "cauchy-abs":
        return CauchyAbs(args.alpha1, args.beta1, args.center)
    if args.knots:
        return SFunction(*args.knots)
    return SFunction()


def _threshold_source(text: str) -> int | None:
    if text == "otsu":
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected 'otsu' or an integer in [0, 255], got {text!r}"
        ) from None


def _read_image(path: str) -> GrayImage | RgbImage:
    return read_pnm(Path(path).read_bytes())


def _read_gray(path: str) -> GrayImage:
    image = _read_image(path)
    if not isinstance(image, GrayImage):
        raise ValueError(f"{path} is a color image; this command needs a gray plane")
    return image


def _map_format(args: argparse.Namespace) -> str:
    return "P1" if args.ascii else "P4"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzedge",
        description="Fuzzy-enhanced Sobel edge detection for RGB images",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", help="full pipeline on an RGB image or text channels")
    p.add_argument("input", nargs="?", help="PPM (P3/P6) input image")
    p.add_argument("-o", "--output", default="edges.pbm", help="combined edge map (PBM)")
    p.add_argument("--r", help="R channel text file (with --g/--b/--width/--height)")
    p.add_argument("--g", help="G channel text file")
    p.add_argument("--b", help="B channel text file")
    p.add_argument("--width", type=int, help="channel width for text inputs")
    p.add_argument("--height", type=int, help="channel height for text inputs")
    p.add_argument("--no-fuzzy", action="store_true", help="skip fuzzy preprocessing")
    p.add_argument("--threshold", type=float, default=400.0, help="edge decision threshold")
    p.add_argument(
        "--otsu-fixed", type=int, default=None, metavar="T",
        help="fixed enhancement threshold instead of per-channel Otsu",
    )
    p.add_argument("--norm", choices=["l1", "l2"], default="l1")
    p.add_argument("--engine", choices=["direct", "incremental"], default="incremental")
    p.add_argument("--combine", choices=["or", "majority"], default="or")
    p.add_argument("--diagonal", action="store_true", help="add the diagonal mask responses")
    p.add_argument("--channels-out", metavar="DIR", help="also write r.pbm/g.pbm/b.pbm")
    p.add_argument("--stats", action="store_true", help="print add and edge-pixel counts")
    p.add_argument("--ascii", action="store_true", help="write P1 instead of P4")
    _add_membership_flags(p)

    p = sub.add_parser("enhance", help="fuzzy enhancement of a gray or RGB image")
    p.add_argument("input")
    p.add_argument("-o", "--output", default=None, help="default: enhanced.pgm/.ppm")
    p.add_argument(
        "--threshold", type=_threshold_source, default=None, metavar="otsu|INT",
        help="enhancement threshold source (default: otsu)",
    )
    p.add_argument("--ascii", action="store_true", help="write P2/P3 instead of P5/P6")
    _add_membership_flags(p)

    p = sub.add_parser("otsu", help="print the Otsu threshold of an image")
    p.add_argument("input")
    p.add_argument("--table", action="store_true",
                   help="print the 256-row statistics table (gray input only)")

    p = sub.add_parser("sobel", help="Sobel edge map of a gray plane")
    p.add_argument("input")
    p.add_argument("-o", "--output", default="edges.pbm")
    p.add_argument("--threshold", type=float, default=400.0)
    p.add_argument("--norm", choices=["l1", "l2"], default="l1")
    p.add_argument("--engine", choices=["direct", "incremental"], default="incremental")
    p.add_argument("--diagonal", action="store_true")
    p.add_argument("--stats", action="store_true", help="print add and edge-pixel counts")
    p.add_argument("--ascii", action="store_true")
    p.add_argument("--dump-windows", type=int, default=0, metavar="N",
                   help="print the first N streamed windows")

    p = sub.add_parser("memristor", help="IMPLY-logic scan edge detector")
    p.add_argument("input", nargs="?")
    p.add_argument("-o", "--output", default="edges.pbm")
    p.add_argument(
        "--threshold", type=_threshold_source, default=None, metavar="otsu|INT",
        help="binarization threshold source (default: otsu)",
    )
    p.add_argument("--trace", type=int, nargs=2, metavar=("P", "Q"), default=None,
                   help="print the 4-step stimulation table for inputs P Q")
    p.add_argument("--ascii", action="store_true")

    return parser


def _cmd_detect(args: argparse.Namespace) -> int:
    channel_flags = (args.r, args.g, args.b)
    if args.input is None and not any(channel_flags):
        raise ValueError("give an input image or --r/--g/--b channel files")
    if args.input is not None and any(channel_flags):
        raise ValueError("give either an input image or channel files, not both")

    if args.input is not None:
        image = _read_image(args.input)
        if isinstance(image, GrayImage):
            raise ValueError(
                f"{args.input} is grayscale; the detect pipeline is per-RGB-channel "
                "(use the sobel command for a single plane)"
            )
    else:
        if not all(channel_flags) or args.width is None or args.height is None:
            raise ValueError("text input needs all of --r --g --b --width --height")
        planes = [
            read_text_channel(Path(path).read_text(), args.width, args.height)
            for path in channel_flags
        ]
        image = RgbImage(*planes)

    config = DetectConfig(
        fuzzy_enabled=not args.no_fuzzy,
        membership=_build_membership(args),
        threshold=args.threshold,
        norm=args.norm,
        engine=args.engine,
        combine=args.combine,
        diagonal=args.diagonal,
        enhance_threshold=args.otsu_fixed,
    )
    stats = DetectStats()
    r_map, g_map, b_map, combined = detect_color(image, config, stats)

    fmt = _map_format(args)
    Path(args.output).write_bytes(write_pnm(combined, fmt))
    if args.channels_out:
        out_dir = Path(args.channels_out)
        out_dir.mkdir(parents=True, exist_ok=True)
        for name, emap in (("r", r_map), ("g", g_map), ("b", b_map)):
            (out_dir / f"{name}.pbm").write_bytes(write_pnm(emap, fmt))
    if args.stats:
        if config.engine == "incremental":
            print(f"add_count\t{stats.add_count}")
        for name in ("r", "g", "b", "combined"):
            print(f"edges_{name}\t{stats.edge_pixels[name]}")
    return 0


def _cmd_enhance(args: argparse.Namespace) -> int:
    image = _read_image(args.input)
    config = EnhanceConfig(_build_membership(args), args.threshold)
    if isinstance(image, GrayImage):
        result: GrayImage | RgbImage = enhance_image(image, config)
        fmt = "P2" if args.ascii else "P5"
        default_name = "enhanced.pgm"
    else:
        result = RgbImage(
            enhance_image(image.r, config),
            enhance_image(image.g, config),
            enhance_image(image.b, config),
        )
        fmt = "P3" if args.ascii else "P6"
        default_name = "enhanced.ppm"
    Path(args.output or default_name).write_bytes(write_pnm(result, fmt))
    return 0


def _cmd_otsu(args: argparse.Namespace) -> int:
    image = _read_image(args.input)
    if isinstance(image, RgbImage):
        if args.table:
            raise ValueError("--table needs a gray input; got a color image")
        for name, plane in (("r", image.r), ("g", image.g), ("b", image.b)):
            print(f"threshold_{name}\t{otsu_threshold(histogram(plane))}")
        return 0
    hist = histogram(image)
    print(f"threshold\t{otsu_threshold(hist)}")
    if args.table:
        print("# t\tomega0\tomega1\tmu0\tmu1\tsigma_b2")
        for t in range(256):
            s = otsu_stats(hist, t)
            print(
                f"{s.t}\t{s.omega0:.9g}\t{s.omega1:.9g}\t{s.mu0:.9g}\t"
                f"{s.mu1:.9g}\t{s.sigma_b2:.9g}"
            )
    return 0


def _cmd_sobel(args: argparse.Namespace) -> int:
    plane = _read_gray(args.input)
    if args.dump_windows > 0:
        gen = WindowGenerator(plane.width, plane.height)
        shown = 0
        for px in plane.flat():
            win = gen.push_pixel(int(px))
            if win is not None:
                print(f"({win.row},{win.col})\t" + " ".join(str(v) for v in win.values))
                shown += 1
                if shown >= args.dump_windows:
                    break
    add_count = None
    if args.engine == "incremental":
        if args.norm == "l2":
            raise ValueError("the incremental engine is L1-only; use --engine direct")
        if args.diagonal:
            raise ValueError("the diagonal add-on needs --engine direct")
        emap, add_count = sobel_plane_incremental(plane, args.threshold)
    else:
        emap = sobel_plane_direct(plane, args.threshold, args.norm, args.diagonal)
    Path(args.output).write_bytes(write_pnm(emap, _map_format(args)))
    if args.stats:
        if add_count is not None:
            print(f"add_count\t{add_count}")
        print(f"edges\t{emap.count()}")
    return 0


def _cmd_memristor(args: argparse.Namespace) -> int:
    if args.trace is not None:
        p, q = args.trace
        result, steps = xor_trace(p, q)
        print("step\toperation\tr\ts\tt")
        print(f"init\t-\t{p}\t{q}\t0")
        for s in steps:
            print(f"{s.step}\t{s.operation}\t{s.r}\t{s.s}\t{s.t}")
        print(f"xor\t{p} ^ {q} = {result}")
        if args.input is None:
            return 0
    if args.input is None:
        raise ValueError("give an input image (or --trace P Q)")
    plane = _read_gray(args.input)
    emap = memristive_edge_map(plane, args.threshold)
    Path(args.output).write_bytes(write_pnm(emap, _map_format(args)))
    return 0


_COMMANDS = {
    "detect": _cmd_detect,
    "enhance": _cmd_enhance,
    "otsu": _cmd_otsu,
    "sobel": _cmd_sobel,
    "memristor": _cmd_memristor,
}


def run_cli(argv: list[str] | None = None) -> int:
    """Parse and run; returns the process exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (PnmError, TextChannelError, ValueError, OSError) as e:
        print(f"fuzzedge: error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(run_cli())


if __name__ == "__main__":
    main()
