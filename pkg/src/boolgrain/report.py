"""Figure rendering for experiment reports.

Each experiment kind gets a small set of diagnostic figures written next to
the CSV outputs (PNG).  Figures are a reporting convenience; the CSVs remain
the reproducible record.
"""
from __future__ import annotations

import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from . import limitlaw as ll


def _save(fig, out_dir: str, name: str):
    path = os.path.join(out_dir, name)
    fig.savefig(path, dpi=130, bbox_inches="tight")
    plt.close(fig)
    return path


def render_figures(cfg, table, out_dir: str):
    kind = cfg.kind
    if kind in ("limit-test", "clt-test", "hyperplane-test"):
        _distribution_figures(cfg, table, out_dir)
    elif kind == "condition-check":
        _condition_figure(cfg, table, out_dir)
    elif kind == "covariance":
        _covariance_figures(cfg, table, out_dir)
    elif kind == "charlier-check":
        _charlier_figure(cfg, table, out_dir)
    elif kind == "render":
        _render_figure(cfg, table, out_dir)


def _rescaled_samples(cfg, table):
    """Rebuild the rescaled statistics per (lambda, k) from the row records."""
    groups = {}
    p_by = {(r["lambda"], r["k"]): r["p_model"] for r in table.summary if "p_model" in r}
    exp_by = {(r["lambda"], r["k"]): r["rescale_exponent"] for r in table.summary
              if "rescale_exponent" in r}
    for row in table.rows:
        key = (row["lambda"], row["k"])
        if key not in p_by:
            continue
        z = row["lambda"] ** exp_by[key] * (row["estimate"] - p_by[key])
        groups.setdefault(key, []).append(z)
    return {k: np.asarray(v) for k, v in groups.items()}


def _distribution_figures(cfg, table, out_dir: str):
    groups = _rescaled_samples(cfg, table)
    if not groups:
        return
    lams = sorted({lam for lam, _ in groups})
    ks = sorted({k for _, k in groups})
    lam_top = lams[-1]
    # empirical vs reference CDF at the deepest lambda
    fig, axes = plt.subplots(1, len(ks), figsize=(5.2 * len(ks), 3.8), squeeze=False)
    for ax, k in zip(axes[0], ks):
        zs = np.sort(groups[(lam_top, k)])
        ecdf = np.arange(1, len(zs) + 1) / len(zs)
        ax.step(zs, ecdf, where="post", lw=1.2, label="empirical")
        srow = next(r for r in table.summary if r["lambda"] == lam_top and r["k"] == k)
        law = _law_from_summary(cfg, srow)
        if law is not None:
            grid = np.linspace(zs[0], zs[-1], 400)
            ax.plot(grid, law.cdf(grid), "r--", lw=1.2, label="limit law")
        ax.set_title(f"k={k}, lambda={lam_top:g}")
        ax.set_xlabel("rescaled deviation")
        ax.set_ylabel("CDF")
        ax.legend(loc="lower right", fontsize=8)
    _save(fig, out_dir, "fig_cdf.png")
    # distance trend along the ladder
    fig, ax = plt.subplots(figsize=(5.0, 3.6))
    for k in ks:
        rows = [r for r in table.summary if r["k"] == k and r.get("cf") is not None]
        ax.plot([r["lambda"] for r in rows], [r["cf"] for r in rows],
                "o-", label=f"cf, k={k}")
        ax.plot([r["lambda"] for r in rows], [r["ks"] for r in rows],
                "s--", alpha=0.6, label=f"ks, k={k}")
    ax.set_xscale("log")
    ax.set_xlabel("lambda")
    ax.set_ylabel("distance to limit law")
    ax.legend(fontsize=8)
    _save(fig, out_dir, "fig_distance_trend.png")


def _law_from_summary(cfg, srow):
    sig = srow.get("sigma_limit")
    if sig is None:
        return None
    if srow.get("variance_ratio") is not None and srow.get("index_pass") is None:
        return ll.GaussianLaw(0.0, sig * sig)
    alpha = cfg.model.law.alpha
    if srow.get("nu0") and srow["nu0"] != cfg.model.nu:
        alpha = 1.0 + (cfg.model.nu / srow["nu0"]) * (alpha - 1.0)
    try:
        return ll.StableLaw(alpha, 1.0, sig, 0.0)
    except ll.LimitLawError:
        return ll.GaussianLaw(0.0, sig * sig)


def _condition_figure(cfg, table, out_dir: str):
    rows = table.summary
    lam = np.array([r["lambda"] for r in rows])
    tv = np.array([r["tail_volume"] for r in rows])
    slope = rows[0]["slope"]
    thr = rows[0]["threshold"]
    fig, ax = plt.subplots(figsize=(5.0, 3.8))
    ax.loglog(lam, tv, "o", label="mean tail volume")
    anchor = tv[0] / lam[0] ** slope
    ax.loglog(lam, anchor * lam ** slope, "-", label=f"fit slope {slope:.3f}")
    ax.loglog(lam, tv[0] * (lam / lam[0]) ** thr, "k--",
              label=f"threshold slope {thr:.3f}")
    ax.set_xlabel("lambda")
    ax.set_ylabel("E Leb(grain beyond lambda)")
    ax.set_title(f"verdict: {rows[0]['verdict']}")
    ax.legend(fontsize=8)
    _save(fig, out_dir, "fig_condition.png")


def _covariance_figures(cfg, table, out_dir: str):
    rx = [r for r in table.summary if r["quantity"] == "r_X"]
    if rx:
        fig, ax = plt.subplots(figsize=(5.0, 3.6))
        ax.errorbar([r["separation"] for r in rx], [r["value"] for r in rx],
                    yerr=[4 * r["se"] for r in rx], fmt="o-")
        ax.set_xlabel("|t|")
        ax.set_ylabel("r_X(t)")
        _save(fig, out_dir, "fig_covariance.png")
    ind = [r for r in table.summary if r["quantity"] == "indicator_cov"]
    if ind:
        fig, ax = plt.subplots(figsize=(5.0, 3.6))
        ax.errorbar([r["separation"] for r in ind], [r["value"] for r in ind],
                    yerr=[4 * r["se"] for r in ind], fmt="o", label="empirical (4 SE)")
        ax.plot([r["separation"] for r in ind], [r["theory"] for r in ind],
                "r--", label="exp(-2mu)(exp(r_X)-1)")
        ax.set_xlabel("|t|")
        ax.set_ylabel("indicator covariance")
        ax.legend(fontsize=8)
        _save(fig, out_dir, "fig_indicator_cov.png")
    ell = [r for r in table.summary if r["quantity"] == "ell"]
    if ell:
        fig, ax = plt.subplots(figsize=(5.0, 3.6))
        ax.plot([r["separation"] for r in ell], [r["value"] for r in ell], "o-")
        ax.set_xlabel("direction angle")
        ax.set_ylabel("ell(z)")
        ax.set_ylim(bottom=0)
        _save(fig, out_dir, "fig_ell.png")


def _charlier_figure(cfg, table, out_dir: str):
    res = [r for r in table.summary if r["quantity"].startswith("expansion_residual")]
    if not res:
        return
    fig, ax = plt.subplots(figsize=(5.0, 3.6))
    for mu in sorted({r["mu"] for r in res}):
        rows = [r for r in res if r["mu"] == mu]
        ax.semilogy([r["degree"] for r in rows], [max(r["value"], 1e-18) for r in rows],
                    "o-", label=f"mu={mu:g}")
    ax.set_xlabel("truncation degree")
    ax.set_ylabel("L2(Poisson) residual")
    ax.legend(fontsize=8)
    _save(fig, out_dir, "fig_charlier_residual.png")


def _render_figure(cfg, table, out_dir: str):
    pgms = [r["file"] for r in table.summary if str(r.get("file", "")).endswith(".pgm")
            and "_k" not in str(r["file"])]
    for name in pgms:
        path = os.path.join(out_dir, name)
        with open(path, "rb") as fh:
            assert fh.readline().strip() == b"P5"
            w, h = map(int, fh.readline().split())
            fh.readline()
            img = np.frombuffer(fh.read(), dtype=np.uint8).reshape(h, w)
        fig, ax = plt.subplots(figsize=(4.6, 4.6))
        ax.imshow(img, cmap="gray_r", interpolation="nearest")
        ax.set_xticks([])
        ax.set_yticks([])
        _save(fig, out_dir, name.replace(".pgm", ".png"))
