"""Command-line front end.

Subcommands: symbol, primes, family, lvalue, phi, mtilde, density,
experiment, verify.  Parameters come from flags, with an optional
KEY=VALUE config file as fallback (flags win on conflict).  All float
output is printed with 17 significant digits and every code path is
deterministic, so reruns with the same configuration are byte-identical.
"""

import argparse
import json
import math
import os
import sys
import time

import numpy as np

from . import charfn, density, lfunc
from .gaussint import GaussInt, FamilyElement, enumerate_C, primes_up_to
from .quartic import chi_c, symbol

PHI_HEADER = "y,re_phi,im_phi,tail_bound"
MTILDE_HEADER = "y,re_mtilde,im_mtilde,trunc_bound"
TABLE_HEADER = "t,density,cdf"
SAMPLES_HEADER = "c_re,c_im,norm,script_l,weight,excluded"
PRIMES_HEADER = "gen,norm,degree"
FAMILY_HEADER = "c,norm"

EXPERIMENT_PROBE_YS = (0.5, 1.0, 2.0)


def _fmt(x: float) -> str:
    return "%.17g" % float(x)


def _read_config(path):
    cfg = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            s = line.strip()
            if not s or s.startswith("#"):
                continue
            if "=" not in s:
                raise ValueError("%s:%d: expected KEY=VALUE" % (path, lineno))
            key, val = s.split("=", 1)
            cfg[key.strip()] = val.strip()
    return cfg


class _Resolver:
    """Looks a parameter up in the parsed flags, then the config file."""

    def __init__(self, args):
        self.args = args
        path = getattr(args, "config", None)
        self.cfg = _read_config(path) if path else {}

    def get(self, name, cast, default=None, required=False):
        raw = getattr(self.args, name, None)
        if raw is None:
            raw = self.cfg.get(name)
        if raw is None:
            if required:
                raise ValueError("missing required parameter: %s" % name)
            return default
        return cast(raw)


def _as_float(s):
    return float(s)


def _as_int(s):
    v = float(s)
    if v != int(v):
        raise ValueError("expected an integer, got %r" % (s,))
    return int(v)


def _as_gauss(s):
    return GaussInt.parse(s)


def _as_float_list(s):
    if isinstance(s, (list, tuple)):
        return [float(v) for v in s]
    parts = [p for p in str(s).split(",") if p.strip()]
    if not parts:
        raise ValueError("empty list of y values")
    return [float(p) for p in parts]


def _write_text(path, text):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _emit(text, out_path):
    if out_path:
        _write_text(out_path, text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# CSV builders (shared with the test suite so determinism checks exercise
# exactly the code path the CLI ships)

def phi_csv_text(sigma, ys, prime_cutoff):
    lines = [PHI_HEADER]
    for y in ys:
        p = charfn.CharFnParams(sigma=sigma, prime_cutoff_P=prime_cutoff)
        v = charfn.phi_sigma(sigma, float(y), p)
        lines.append(
            ",".join((_fmt(y), _fmt(v.real), _fmt(v.imag), _fmt(p.tail_report)))
        )
    return "\n".join(lines) + "\n"


def mtilde_csv_text(sigma, ys, r_max, ideal_norm_cap):
    lines = [MTILDE_HEADER]
    for y in ys:
        cut = charfn.SeriesCutoffs(r_max=r_max, ideal_norm_cap=ideal_norm_cap)
        v = charfn.mtilde_series(sigma, float(y), cut)
        lines.append(
            ",".join((_fmt(y), _fmt(v.real), _fmt(v.imag), _fmt(cut.trunc_report)))
        )
    return "\n".join(lines) + "\n"


def table_csv_text(table):
    lines = [TABLE_HEADER]
    for t, d, c in zip(table.t_grid, table.density, table.cdf):
        lines.append(",".join((_fmt(t), _fmt(d), _fmt(c))))
    return "\n".join(lines) + "\n"


def samples_csv_text(samples):
    lines = [SAMPLES_HEADER]
    for s in samples:
        lines.append(
            ",".join(
                (
                    str(s.c.c.re),
                    str(s.c.c.im),
                    str(s.c.norm),
                    _fmt(s.script_l),
                    _fmt(s.weight),
                    "1" if s.excluded else "0",
                )
            )
        )
    return "\n".join(lines) + "\n"


def primes_csv_text(limit):
    lines = [PRIMES_HEADER]
    for rec in primes_up_to(limit):
        lines.append(",".join((str(rec.gen), str(rec.norm), str(rec.degree))))
    return "\n".join(lines) + "\n"


def family_csv_text(limit):
    lines = [FAMILY_HEADER]
    for fe in enumerate_C(limit):
        lines.append(",".join((str(fe.c), str(fe.norm))))
    return "\n".join(lines) + "\n"


def _sidecar_json(table, grid, extra=None):
    doc = {
        "quad_params": {
            "t_min": grid.t_min,
            "t_max": grid.t_max,
            "h_t": grid.h_t,
            "h_y": grid.h_y,
            "y_max_requested": grid.y_max,
            "y_max_used": table.y_max,
            "decay_target": grid.decay_target,
            "sustain": grid.sustain,
            "y_cap": grid.y_cap,
        },
        "norm_defect": table.norm_defect,
        "min_density": table.min_density,
        "imag_residual": table.imag_residual,
    }
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _grid_from(res):
    kwargs = {}
    for name, cast in (
        ("t_min", _as_float),
        ("t_max", _as_float),
        ("h_t", _as_float),
        ("h_y", _as_float),
        ("y_max", _as_float),
        ("decay_target", _as_float),
        ("y_cap", _as_float),
    ):
        val = res.get(name, cast)
        if val is not None:
            kwargs[name] = val
    return density.GridSpec(**kwargs)


# ---------------------------------------------------------------------------
# Experiment orchestration

def experiment_run(sigma, big_y, prime_cutoff, threads, grid, out_dir, table=None):
    """Full pipeline: sample the family, invert the transform, compare.

    Writes samples.csv, table.csv, summary.json into out_dir and returns
    the summary dict.  A prebuilt FamilyLTable with matching parameters
    can be passed to reuse its cached L-values.
    """
    t_total = time.perf_counter()
    os.makedirs(out_dir, exist_ok=True)

    params = lfunc.LValueParams(sigma=sigma)
    if table is None:
        table = lfunc.FamilyLTable(params)
    elif table.params.sigma != sigma:
        raise ValueError("prebuilt table has sigma=%g, wanted %g" % (table.params.sigma, sigma))

    t0 = time.perf_counter()
    samples = table.samples(big_y, threads=threads)
    t_lvalues = time.perf_counter() - t0

    t0 = time.perf_counter()
    evaluator = charfn.phi_grid_evaluator(sigma, prime_cutoff)
    dist = density.inverse_transform(evaluator, sigma, grid)
    t_transform = time.perf_counter() - t0

    in_window = [s for s in samples if s.c.norm <= big_y]
    kept = [s.script_l for s in in_window if not s.excluded]
    ks = density.ks_distance(np.array(kept), dist) if kept else float("nan")

    deviations = {}
    for y in EXPERIMENT_PROBE_YS:
        emp = lfunc.empirical_char_fn(sigma, y, big_y, table=table, threads=threads)
        p = charfn.CharFnParams(sigma=sigma, prime_cutoff_P=prime_cutoff)
        model = charfn.phi_sigma(sigma, y, p)
        deviations[_fmt(y)] = abs(emp - model)

    _write_text(os.path.join(out_dir, "samples.csv"), samples_csv_text(samples))
    _write_text(os.path.join(out_dir, "table.csv"), table_csv_text(dist))

    summary = {
        "sigma": sigma,
        "Y": big_y,
        "prime_cutoff": prime_cutoff,
        "threads": threads,
        "count_sampled": len(samples),
        "count_in_window": len(in_window),
        "count_excluded": sum(1 for s in samples if s.excluded),
        "ks_distance": ks,
        "ks_count": len(kept),
        "char_fn_deviation": deviations,
        "norm_defect": dist.norm_defect,
        "min_density": dist.min_density,
        "y_max": dist.y_max,
        "timings_s": {
            "lvalues": t_lvalues,
            "transform": t_transform,
            "total": time.perf_counter() - t_total,
        },
    }
    _write_text(
        os.path.join(out_dir, "summary.json"),
        json.dumps(summary, indent=2, sort_keys=True) + "\n",
    )
    return summary


# ---------------------------------------------------------------------------
# Subcommand handlers

def _cmd_symbol(res):
    m = res.get("m", _as_gauss, required=True)
    n = res.get("n", _as_gauss, required=True)
    sys.stdout.write(str(symbol(m, n)) + "\n")
    return 0


def _cmd_primes(res):
    limit = res.get("limit", _as_float, required=True)
    _emit(primes_csv_text(limit), res.get("out", str))
    return 0


def _cmd_family(res):
    limit = res.get("limit", _as_float, required=True)
    _emit(family_csv_text(limit), res.get("out", str))
    return 0


def _cmd_lvalue(res):
    c = res.get("c", _as_gauss, required=True)
    sigma = res.get("sigma", _as_float, required=True)
    cutoff = res.get("cutoff", _as_float)
    fe = FamilyElement.of(c)
    params = lfunc.LValueParams(sigma=sigma, cutoff_X=cutoff)
    val = lfunc.l_value(fe, params)
    samp = lfunc.script_l(fe, params)
    lines = [
        "c,sigma,re_l,im_l,script_l,excluded",
        ",".join(
            (
                str(c),
                _fmt(sigma),
                _fmt(val.real),
                _fmt(val.imag),
                _fmt(samp.script_l),
                "1" if samp.excluded else "0",
            )
        ),
    ]
    _emit("\n".join(lines) + "\n", res.get("out", str))
    return 0


def _cmd_phi(res):
    sigma = res.get("sigma", _as_float, required=True)
    ys = res.get("y", _as_float_list, required=True)
    cutoff = res.get("prime_cutoff", _as_float, default=10.0**6)
    _emit(phi_csv_text(sigma, ys, cutoff), res.get("out", str))
    return 0


def _cmd_mtilde(res):
    sigma = res.get("sigma", _as_float, required=True)
    ys = res.get("y", _as_float_list, required=True)
    r_max = res.get("r_max", _as_int, default=60)
    cap = res.get("ideal_norm_cap", _as_float, default=10.0**6)
    _emit(mtilde_csv_text(sigma, ys, r_max, cap), res.get("out", str))
    return 0


def _cmd_density(res):
    sigma = res.get("sigma", _as_float, required=True)
    cutoff = res.get("prime_cutoff", _as_float, default=10.0**6)
    out = res.get("out", str, required=True)
    grid = _grid_from(res)
    evaluator = charfn.phi_grid_evaluator(sigma, cutoff)
    table = density.inverse_transform(evaluator, sigma, grid)
    _write_text(out, table_csv_text(table))
    sidecar = os.path.splitext(out)[0] + ".json"
    _write_text(sidecar, _sidecar_json(table, grid, {"sigma": sigma, "prime_cutoff": cutoff}))
    return 0


def _cmd_experiment(res):
    sigma = res.get("sigma", _as_float, required=True)
    big_y = res.get("Y", _as_float, required=True)
    cutoff = res.get("prime_cutoff", _as_float, default=10.0**6)
    threads = res.get("threads", _as_int, default=1)
    out_dir = res.get("out_dir", str, required=True)
    grid = _grid_from(res)
    experiment_run(sigma, big_y, cutoff, threads, grid, out_dir)
    return 0


# ---------------------------------------------------------------------------
# verify: the fast end-to-end invariant suite

def _verify_checks():
    from .gaussint import factor, first_quadrant_by_norm, gcd, is_primary
    from .quartic import QuarticValue, symbol_prime_oracle

    def _primaries(limit):
        out = []
        for z in first_quadrant_by_norm(limit):
            for u in (z, z * GaussInt(0, 1), -z, z * GaussInt(0, -1)):
                if is_primary(u):
                    out.append(u)
        return out

    def check_symbol_oracle():
        pairs = 0
        for m in _primaries(100):
            for n in _primaries(400):
                if not gcd(m, n).is_unit():
                    continue
                acc = QuarticValue.root(0)
                for rec, e in factor(n).factors:
                    v = symbol_prime_oracle(m, rec.gen)
                    for _ in range(e):
                        acc = acc * v
                fast = symbol(m, n)
                if (fast.is_zero, fast.k) != (acc.is_zero, acc.k):
                    return "mismatch at m=%s n=%s" % (m, n)
                pairs += 1
        if pairs < 100:
            return "only %d coprime primary pairs tested" % pairs
        return None

    def check_reciprocity():
        prim = [rec.gen for rec in primes_up_to(2000) if rec.norm % 2 == 1]
        for i, a in enumerate(prim):
            na = (a.re * a.re + a.im * a.im - 1) // 4
            for b in prim[i + 1 :]:
                nb = (b.re * b.re + b.im * b.im - 1) // 4
                lhs = symbol(a, b)
                rhs = symbol(b, a)
                want = (rhs.k + 2 * na * nb) & 3
                if lhs.is_zero or rhs.is_zero or lhs.k != want:
                    return "violation at a=%s b=%s" % (a, b)
        return None

    def check_unit_triviality():
        for fe in enumerate_C(10**4):
            if str(chi_c(fe, GaussInt(0, 1))) != "1":
                return "chi_c(i) != 1 at c=%s" % fe.c
            if str(chi_c(fe, GaussInt(1, 1))) != "1":
                return "chi_c(1+i) != 1 at c=%s" % fe.c
        return None

    def check_dual_route():
        p = charfn.CharFnParams(sigma=1.0, prime_cutoff_P=10**5)
        v = charfn.phi_sigma(1.0, 1.0, p)
        cut = charfn.SeriesCutoffs(r_max=60, ideal_norm_cap=2 * 10**4)
        m = charfn.mtilde_series(1.0, 1.0, cut)
        gap = abs(v - m)
        budget = p.tail_report + cut.trunc_report
        if gap >= max(budget, 1e-3):
            return "|phi - mtilde| = %.3e exceeds budget %.3e" % (gap, budget)
        return None

    def check_phi_normalization():
        for sigma in (0.75, 1.0):
            p = charfn.CharFnParams(sigma=sigma, prime_cutoff_P=10**4)
            if abs(charfn.phi_sigma(sigma, 0.0, p) - 1.0) > 1e-12:
                return "phi(0) != 1 at sigma=%g" % sigma
        return None

    def check_gaussian_quadrature():
        tab = density.inverse_transform(
            lambda ys: np.exp(-ys * ys / 2.0) + 0.0j, 1.0, density.GridSpec()
        )
        ref = np.exp(-tab.t_grid**2 / 2.0) / math.sqrt(2.0 * math.pi)
        keep = np.abs(tab.t_grid) <= 5.0
        sup = float(np.max(np.abs(tab.density[keep] - ref[keep])))
        if sup >= 1e-6:
            return "sup error %.3e" % sup
        return None

    def check_band():
        rows = charfn.band_primes(0.75, 1000.0)
        if not rows:
            return "band empty at sigma=0.75, y=1000"
        worst = max(abs(charfn.local_factor(0.75, 1000.0, r.norm)) for r in rows)
        if worst > 0.8:
            return "band factor %.3f exceeds 0.8" % worst
        return None

    def check_counting():
        ratio = lfunc.s_count(10**5) / (lfunc.density_constant() * 10**5)
        if not 0.9 <= ratio <= 1.1:
            return "ratio %.4f outside [0.9, 1.1]" % ratio
        return None

    def check_cutoff_refinement():
        fe = FamilyElement.of(GaussInt(-15, 0))
        a = lfunc.l_value(fe, lfunc.LValueParams(sigma=1.0, cutoff_X=5.0 * 10**4))
        b = lfunc.l_value(fe, lfunc.LValueParams(sigma=1.0, cutoff_X=10.0**5))
        if abs(a - b) > 1e-3:
            return "cutoff doubling moved L by %.3e" % abs(a - b)
        return None

    return [
        ("symbol-oracle-equivalence", check_symbol_oracle),
        ("reciprocity-exactness", check_reciprocity),
        ("unit-triviality", check_unit_triviality),
        ("dual-route-agreement", check_dual_route),
        ("phi-normalization", check_phi_normalization),
        ("gaussian-quadrature", check_gaussian_quadrature),
        ("band-bound", check_band),
        ("counting-constant", check_counting),
        ("cutoff-refinement", check_cutoff_refinement),
    ]


def _cmd_verify(res):
    failures = 0
    for name, fn in _verify_checks():
        try:
            detail = fn()
        except Exception as exc:  # a crash is a failure, not an abort
            detail = "raised %s: %s" % (type(exc).__name__, exc)
        if detail is None:
            sys.stdout.write("PASS %s\n" % name)
        else:
            sys.stdout.write("FAIL %s: %s\n" % (name, detail))
            failures += 1
    sys.stdout.write("%s\n" % ("all checks passed" if failures == 0 else "%d check(s) failed" % failures))
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------------------

def _build_parser():
    ap = argparse.ArgumentParser(
        prog="quartic-hecke",
        description="Quartic Hecke L-function value-distribution toolkit over Q(i).",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help_text, flags):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="KEY=VALUE config file; flags win on conflict")
        for flag in flags:
            p.add_argument("--" + flag, dest=flag.replace("-", "_"))
        return p

    add("symbol", "quartic residue symbol (m/n)_4", ["m", "n"])
    add("primes", "prime ideals of norm <= limit as CSV", ["limit", "out"])
    add("family", "family members c with norm <= limit as CSV", ["limit", "out"])
    add("lvalue", "smoothed L-value and the statistic at one c", ["c", "sigma", "cutoff", "out"])
    add("phi", "characteristic function (product route) on a y grid", ["sigma", "y", "prime-cutoff", "out"])
    add("mtilde", "characteristic function (series route) on a y grid", ["sigma", "y", "r-max", "ideal-norm-cap", "out"])
    add(
        "density",
        "invert the characteristic function to a density/cdf table",
        ["sigma", "prime-cutoff", "out", "t-min", "t-max", "h-t", "h-y", "y-max", "decay-target", "y-cap"],
    )
    add(
        "experiment",
        "sample the family, build the table, compare; writes three files",
        ["sigma", "Y", "prime-cutoff", "threads", "out-dir", "t-min", "t-max", "h-t", "h-y", "y-max", "decay-target", "y-cap"],
    )
    add("verify", "run the fast invariant suite", [])
    return ap


_HANDLERS = {
    "symbol": _cmd_symbol,
    "primes": _cmd_primes,
    "family": _cmd_family,
    "lvalue": _cmd_lvalue,
    "phi": _cmd_phi,
    "mtilde": _cmd_mtilde,
    "density": _cmd_density,
    "experiment": _cmd_experiment,
    "verify": _cmd_verify,
}


def main(argv=None):
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        res = _Resolver(args)
        return _HANDLERS[args.command](res)
    except (ValueError, OSError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
