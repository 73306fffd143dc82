"""Command line front end.

Subcommands: embed, extract, attack, psnr, nc, hist, bench. Metric
commands print one JSON object on stdout. Exit codes: 0 success, 1 usage
error, 2 I/O error, 3 validation error.
"""

import argparse
import json
import math
import sys
import time

from . import __version__
from .attacks import KINDS, AttackSpec, apply_attack
from .block_dct import MIDBAND_MASK
from .codec import EmbedConfig, binarize, embed, extract
from .image_io import (
    CorruptDataError,
    UnsupportedFormatError,
    read_gray,
    read_image,
    write_gray,
    write_image,
)
from .keystream import KeySchedule
from .metrics import ber, histogram, nc, psnr

_IO_ERRORS = (OSError, UnsupportedFormatError, CorruptDataError)


class _Parser(argparse.ArgumentParser):
    """argparse reserves status 2 for usage errors; this tool uses 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _int_key(text):
    return int(text, 0)


def _parse_mask(text):
    pairs = []
    for chunk in text.split(";"):
        row, col = chunk.split(",")
        pairs.append((int(row), int(col)))
    return tuple(pairs)


def _mask_text(mask):
    return ";".join(f"{r},{c}" for r, c in mask)


def _json_value(x):
    if isinstance(x, float) and math.isinf(x):
        return None
    return x


def _emit(obj):
    print(json.dumps(obj, sort_keys=True))


def _key_flags(parser):
    parser.add_argument("--channel", choices=("y", "i", "q"), default="q",
                        help="YIQ channel carrying the watermark")
    parser.add_argument("--k", type=float, default=4.0,
                        help="embedding strength (flexing factor)")
    parser.add_argument("--key1", type=_int_key, default=15,
                        help="scrambling key")
    parser.add_argument("--pn-seed", type=_int_key, default=15,
                        help="PN sequence seed")
    parser.add_argument("--threshold", type=int, default=0,
                        help="chip-sum threshold in the key schedule")
    parser.add_argument("--count-a", type=int, default=3,
                        help="iteration count when the chip sum exceeds the threshold")
    parser.add_argument("--count-b", type=int, default=5,
                        help="iteration count otherwise")
    parser.add_argument("--mask", type=_parse_mask, default=MIDBAND_MASK,
                        help="mid-band positions as 'row,col;row,col;...'")


def _config_of(args, wm_side):
    keys = KeySchedule(
        k1=args.key1,
        pn_seed=args.pn_seed,
        threshold_t=args.threshold,
        count_a=args.count_a,
        count_b=args.count_b,
    )
    return EmbedConfig(
        keys=keys, channel=args.channel, k=args.k, mask=args.mask, wm_side=wm_side
    )


def _build_parser():
    top = _Parser(prog="wavemark", description=__doc__)
    top.add_argument("--version", action="version", version=f"wavemark {__version__}")
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--config", help="file of 'key = value' defaults, flags win")

    p = sub.add_parser("embed", parents=[common], help="embed a watermark")
    p.add_argument("--cover", required=True)
    p.add_argument("--watermark", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--binarize-threshold", type=int, default=128)
    _key_flags(p)

    p = sub.add_parser("extract", parents=[common], help="blindly recover a watermark")
    p.add_argument("--image", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--wm-side", type=int, default=None,
                   help="watermark side length, inferred for square images")
    _key_flags(p)

    p = sub.add_parser("attack", parents=[common], help="distort an image")
    p.add_argument("--image", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--param", required=True, type=float)
    p.add_argument("--seed", type=_int_key, default=0)

    p = sub.add_parser("psnr", parents=[common], help="peak signal-to-noise ratio")
    p.add_argument("--ref", required=True)
    p.add_argument("--test", required=True)

    p = sub.add_parser("nc", parents=[common], help="normalized correlation of watermarks")
    p.add_argument("--ref", required=True)
    p.add_argument("--test", required=True)
    p.add_argument("--binarize-threshold", type=int, default=128)

    p = sub.add_parser("hist", parents=[common], help="256-bin channel histogram CSV")
    p.add_argument("--image", required=True)
    p.add_argument("--channel", required=True, choices=("r", "g", "b"))
    p.add_argument("--out", default=None)

    p = sub.add_parser("bench", parents=[common], help="sweep the embed/attack/extract grid")
    p.add_argument("--cover", action="append", required=True)
    p.add_argument("--watermark", required=True)
    p.add_argument("--channels", default="y,i,q")
    p.add_argument("--k-values", default="1,2,3,4")
    p.add_argument("--attacks", default="none",
                   help="comma list of none or kind:param[:seed]")
    p.add_argument("--out", default=None)
    p.add_argument("--binarize-threshold", type=int, default=128)
    p.add_argument("--repeatable", action="store_true",
                   help="null out runtimes so reports compare byte for byte")
    _key_flags(p)

    return top


# ---------------------------------------------------------------
# config file support
# ---------------------------------------------------------------

def _load_config(path):
    tokens = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, value = (part.strip() for part in line.split("=", 1))
            if not key or not value:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            tokens += [f"--{key.replace('_', '-')}", value]
    return tokens


def _inject_config(argv):
    """Splice config-file tokens right after the subcommand, so flags win."""
    path = None
    for pos, token in enumerate(argv):
        if token == "--config" and pos + 1 < len(argv):
            path = argv[pos + 1]
            break
        if token.startswith("--config="):
            path = token.split("=", 1)[1]
            break
    if path is None or not argv:
        return argv
    return argv[:1] + _load_config(path) + argv[1:]


# ---------------------------------------------------------------
# subcommand bodies
# ---------------------------------------------------------------

def _cmd_embed(args):
    cover = read_image(args.cover)
    wm = binarize(read_gray(args.watermark), args.binarize_threshold)
    config = _config_of(args, wm.shape[0])
    out, report = embed(cover, wm, config)
    write_image(out, args.out)
    _emit(
        {
            "psnr_db": _json_value(report.psnr_db),
            "channel": report.channel,
            "k": report.k,
            "scramble_iterations": report.scramble_iterations,
            "blocks_modified": report.blocks_modified,
        }
    )
    return 0


def _infer_side(img, requested):
    if requested is not None:
        return requested
    h, w = img.shape[:2]
    blocks = (h // 8) * (w // 8)
    side = math.isqrt(blocks)
    if side * side != blocks:
        raise ValueError("watermark side is ambiguous, pass --wm-side")
    return side


def _cmd_extract(args):
    img = read_image(args.image)
    config = _config_of(args, _infer_side(img, args.wm_side))
    bits = extract(img, config)
    write_gray((bits * 255).astype("uint8"), args.out)
    _emit({"out": args.out, "wm_side": config.wm_side, "ones": int(bits.sum())})
    return 0


def _cmd_attack(args):
    img = read_image(args.image)
    spec = AttackSpec(kind=args.kind, param=args.param, rng_seed=args.seed)
    out = apply_attack(img, spec)
    write_image(out, args.out)
    _emit({"kind": args.kind, "param": args.param, "psnr_db": _json_value(psnr(img, out))})
    return 0


def _cmd_psnr(args):
    value = psnr(read_image(args.ref), read_image(args.test))
    _emit({"psnr_db": _json_value(value)})
    return 0


def _cmd_nc(args):
    ref = binarize(read_gray(args.ref), args.binarize_threshold)
    test = binarize(read_gray(args.test), args.binarize_threshold)
    _emit({"nc": nc(ref, test), "ber": ber(ref, test)})
    return 0


def _cmd_hist(args):
    counts = histogram(read_image(args.image), args.channel)
    text = "".join(f"{i},{int(n)}\n" for i, n in enumerate(counts))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _parse_attacks(text):
    specs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if chunk == "none":
            specs.append(None)
            continue
        parts = chunk.split(":")
        if len(parts) not in (2, 3) or parts[0] not in KINDS:
            raise ValueError(f"bad attack spec {chunk!r}")
        seed = int(parts[2], 0) if len(parts) == 3 else 0
        specs.append(AttackSpec(kind=parts[0], param=float(parts[1]), rng_seed=seed))
    if not specs:
        raise ValueError("attack list is empty")
    return specs


def _attack_echo(spec):
    if spec is None:
        return {"kind": "none", "param": None, "seed": None}
    return {"kind": spec.kind, "param": spec.param, "seed": spec.rng_seed}


def _cmd_bench(args):
    channels = [c.strip() for c in args.channels.split(",") if c.strip()]
    k_values = [float(v) for v in args.k_values.split(",") if v.strip()]
    specs = _parse_attacks(args.attacks)
    wm = binarize(read_gray(args.watermark), args.binarize_threshold)
    covers = [(path, read_image(path)) for path in args.cover]

    cells = []
    for path, cover in covers:
        for channel in channels:
            for k in k_values:
                config = _config_of(args, wm.shape[0])
                config = EmbedConfig(
                    keys=config.keys, channel=channel, k=k,
                    mask=config.mask, wm_side=config.wm_side,
                )
                marked, report = embed(cover, wm, config)
                for spec in specs:
                    start = time.perf_counter()
                    attacked = marked if spec is None else apply_attack(marked, spec)
                    recovered = extract(attacked, config)
                    cell_nc = nc(wm, recovered)
                    cell_ber = ber(wm, recovered)
                    elapsed_ms = (time.perf_counter() - start) * 1000.0
                    cells.append(
                        {
                            "cover": path,
                            "channel": channel,
                            "k": k,
                            "attack": _attack_echo(spec),
                            "psnr_db": _json_value(report.psnr_db),
                            "nc": cell_nc,
                            "ber": cell_ber,
                            "runtime_ms": None if args.repeatable else elapsed_ms,
                        }
                    )

    report = {
        "version": __version__,
        "config": {
            "covers": args.cover,
            "watermark": args.watermark,
            "channels": channels,
            "k_values": k_values,
            "attacks": [_attack_echo(s) for s in specs],
            "key1": args.key1,
            "pn_seed": args.pn_seed,
            "threshold": args.threshold,
            "count_a": args.count_a,
            "count_b": args.count_b,
            "mask": _mask_text(args.mask),
            "wm_side": wm.shape[0],
            "binarize_threshold": args.binarize_threshold,
        },
        "cells": cells,
    }
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return 0


_COMMANDS = {
    "embed": _cmd_embed,
    "extract": _cmd_extract,
    "attack": _cmd_attack,
    "psnr": _cmd_psnr,
    "nc": _cmd_nc,
    "hist": _cmd_hist,
    "bench": _cmd_bench,
}


def run(argv):
    """Parse and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        argv = _inject_config(list(argv))
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except SystemExit as exc:  # argparse --help / usage errors
        return int(exc.code or 0)
    except ValueError as exc:
        print(f"wavemark: {exc}", file=sys.stderr)
        return 3
    except _IO_ERRORS as exc:
        print(f"wavemark: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
