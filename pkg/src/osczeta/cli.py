"""Command-line harness: compute spectra and zeta tables, derive the exact
sum rules, run the verification battery, and render classification tables.

Exit codes: 0 all requested work succeeded (and all checks passed for
`verify`), 1 verification failures, 2 configuration or computation errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

import mpmath as mp

from . import closedforms as cforms
from .errors import OsczetaError
from .precision import DEFAULT_DPS
from .spectrum import eigenvalues
from .sumrules import (autonomous_full_identity, classify_lhs,
                       derive_sum_rules, identities_to_json, symmetry_order)
from .verify import SPECTRAL_DPS_CAP, run_battery
from .zetafns import zeta_em

DEFAULT_N_LIST = (1, 2, 3, 6)


@dataclasses.dataclass
class RunConfig:
    digits: int = DEFAULT_DPS
    count: int = 12
    n_list: tuple = DEFAULT_N_LIST
    parity: str = "both"
    n_max: int = 8
    fmt: str = "text"
    out: str = None

    def validate(self):
        if self.digits < 5 or self.digits > 1000:
            raise ValueError("digits must be in [5, 1000]")
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if any(N < 1 for N in self.n_list):
            raise ValueError("N must be >= 1")
        if self.parity not in ("+", "-", "both"):
            raise ValueError("parity must be '+', '-' or 'both'")
        if self.n_max < 0:
            raise ValueError("nmax must be >= 0")
        if self.fmt not in ("text", "json", "csv"):
            raise ValueError("format must be text, json or csv")


def load_config_file(path: str) -> dict:
    """Parse a simple `key = value` config file (comments with '#')."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"bad config line: {raw.rstrip()}")
            key, val = (p.strip() for p in line.split("=", 1))
            out[key] = val
    return out


def _config_from_args(args) -> RunConfig:
    cfg = RunConfig()
    filecfg = load_config_file(args.config) if args.config else {}
    def pick(flag, key, cast):
        if flag is not None:
            return cast(flag)
        if key in filecfg:
            return cast(filecfg[key])
        return None

    v = pick(args.digits, "digits", int)
    if v is not None:
        cfg.digits = v
    v = pick(args.count, "count", int)
    if v is not None:
        cfg.count = v
    v = pick(args.N, "N", str)
    if v is not None:
        cfg.n_list = tuple(int(x) for x in str(v).split(","))
    v = pick(args.parity, "parity", str)
    if v is not None:
        cfg.parity = v
    v = pick(args.nmax, "nmax", int)
    if v is not None:
        cfg.n_max = v
    v = pick(args.format, "format", str)
    if v is not None:
        cfg.fmt = v
    v = pick(args.out, "out", str)
    if v is not None:
        cfg.out = v
    cfg.validate()
    return cfg


def _emit(cfg: RunConfig, text: str):
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _spectral_dps(cfg, N):
    return min(cfg.digits, 45 if N == 1 else SPECTRAL_DPS_CAP)


def cmd_spectrum(cfg: RunConfig) -> int:
    parities = ("+", "-") if cfg.parity == "both" else (cfg.parity,)
    records = [eigenvalues(N, p, cfg.count, _spectral_dps(cfg, N))
               for N in cfg.n_list for p in parities]
    if cfg.fmt == "json":
        _emit(cfg, json.dumps([json.loads(r.to_json()) for r in records],
                              indent=2))
    elif cfg.fmt == "csv":
        lines = ["N,parity,k,eigenvalue,certified_digits"]
        for r in records:
            lines.extend(r.to_csv().splitlines()[1:])
        _emit(cfg, "\n".join(lines))
    else:
        lines = []
        for r in records:
            lines.append(f"N={r.N} parity={r.parity}")
            for j, e in enumerate(r.eigenvalues):
                lines.append(f"  k={r.full_index(j):3d}  "
                             f"{mp.nstr(e, min(cfg.digits, 30))}")
        _emit(cfg, "\n".join(lines))
    return 0


def cmd_zeta(cfg: RunConfig) -> int:
    rows = []
    for N in cfg.n_list:
        dps = _spectral_dps(cfg, N)
        recs = (eigenvalues(N, "+", cfg.count, dps),
                eigenvalues(N, "-", cfg.count, dps))
        mu = mp.mpf(N + 2) / (2 * N)
        for n in range(1, cfg.n_max + 1):
            for kind in ("full", "twisted", "plus", "minus"):
                if kind != "twisted" and n <= mu:
                    continue
                rows.append(zeta_em(N, kind, n, recs, dps=dps))
    if cfg.fmt == "json":
        _emit(cfg, json.dumps([r.to_row() for r in rows], indent=2))
    elif cfg.fmt == "csv":
        lines = ["N,kind,order,value,method,certified_digits"]
        for r in rows:
            d = r.to_row()
            lines.append(f"{d['N']},{d['kind']},{d['order']},{d['value']},"
                         f"{d['method']},{d['certified_digits']}")
        _emit(cfg, "\n".join(lines))
    else:
        lines = [f"N={r.N} {r.kind:8s} n={int(r.order)}  "
                 f"{mp.nstr(r.value, min(cfg.digits, 25)):30s} "
                 f"[{r.certified_digits} digits]" for r in rows]
        _emit(cfg, "\n".join(lines))
    return 0


def cmd_derive(cfg: RunConfig) -> int:
    chunks = []
    for N in cfg.n_list:
        idents = derive_sum_rules(N, cfg.n_max)
        # full-order identities restated with the lower orders eliminated,
        # so both sides involve only full zeta values
        L = symmetry_order(N)
        autonomous = [autonomous_full_identity(N, n)
                      for n in range(L, cfg.n_max + 1, L)]
        if cfg.fmt == "json":
            chunk = json.loads(identities_to_json(idents))
            for ident in autonomous:
                d = ident.to_json_dict()
                d["autonomous"] = True
                chunk.append(d)
            chunks.append(chunk)
        else:
            lines = [i.to_text() for i in idents]
            lines.extend(f"{i.to_text()}  (full-value basis)"
                         for i in autonomous)
            chunks.append("\n".join(lines))
    if cfg.fmt == "json":
        _emit(cfg, json.dumps(chunks, indent=2))
    else:
        _emit(cfg, "\n\n".join(chunks))
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    report = run_battery(n_list=cfg.n_list, digits=cfg.digits,
                         eigencount=cfg.count)
    if cfg.fmt == "json":
        _emit(cfg, report.to_json())
    else:
        _emit(cfg, report.to_text())
    return 0 if report.passed else 1


_CLOSED_CELLS = {
    # (N, n) -> identifier of a fully closed-form value for that cell
    (2, 1): "Z2.twisted.1", (3, 2): "Z3plus2", (6, 2): "Z6P2",
}


def _cell_text(N: int, n: int, digits: int) -> str:
    cls = classify_lhs(N, n)
    if cls == "generic":
        return "generic"
    if n == 0:
        return "Z'(0) closed form"
    label = {"Zfull": f"Z_{N}({n})", "Ztwisted": f"Z_{N}^P({n})",
             "Zplus": f"Z_{N}^+({n})", "Zminus": f"Z_{N}^-({n})"}[cls]
    ident = _CLOSED_CELLS.get((N, n))
    if N == 1:
        kind = {"Zfull": "full", "Ztwisted": "twisted",
                "Zplus": "plus", "Zminus": "minus"}[cls]
        ident = f"Z1.{kind}.{n}"
    elif N == 2:
        kind = {"Zfull": "full", "Ztwisted": "twisted"}[cls]
        ident = f"Z2.{kind}.{n}"
    if ident is None:
        return f"{label}: no closed form"
    val = cforms.closed_form_eval(ident, N, digits)
    return f"{label} = {mp.nstr(val, min(digits, 10))}"


def cmd_table(cfg: RunConfig) -> int:
    lines = []
    for N in cfg.n_list:
        lines.append(f"N={N} (symmetry order L={symmetry_order(N)})")
        for n in range(cfg.n_max + 1):
            lines.append(f"  n={n:2d}  {_cell_text(N, n, cfg.digits)}")
    _emit(cfg, "\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="osczeta",
        description="spectral zeta functions and exact sum rules for "
                    "homogeneous oscillators -d2/dq2 + |q|^N")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (
            ("spectrum", "compute eigenvalues per (N, parity)"),
            ("zeta", "compute zeta values from spectra"),
            ("derive", "derive the exact sum rules symbolically"),
            ("verify", "run the cross-verification battery"),
            ("table", "render the classification table per (N, n)")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--N", help="degree or comma list, e.g. 3 or 1,2,3,6")
        p.add_argument("--parity", choices=["+", "-", "both"])
        p.add_argument("--count", type=int, help="eigenvalues per parity")
        p.add_argument("--digits", type=int, help="decimal precision")
        p.add_argument("--nmax", type=int, help="maximum zeta order")
        p.add_argument("--format", choices=["text", "json", "csv"])
        p.add_argument("--out", help="write output to this path")
        p.add_argument("--config", help="key = value config file")
    return parser


COMMANDS = {"spectrum": cmd_spectrum, "zeta": cmd_zeta, "derive": cmd_derive,
            "verify": cmd_verify, "table": cmd_table}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return COMMANDS[args.command](cfg)
    except (OsczetaError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
