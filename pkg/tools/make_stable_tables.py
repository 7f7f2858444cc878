"""Regenerate src/boolgrain/_stable_tables.py.

The quantile-summary tables behind stability_index_fit are derived from the
package's own CDF inversion (stable_ppf) so the fit and the law stay
mutually consistent.  The alpha = 2 edge row comes from the normal law,
which the S1 stable family reaches with variance 2 sigma^2.
"""
import sys
from pathlib import Path

import numpy as np
from scipy.special import ndtri

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from boolgrain.limitlaw import StableLaw, stable_ppf  # noqa: E402

QS = (0.02, 0.25, 0.5, 0.75, 0.98)
ALPHAS = np.round(np.arange(1.02, 2.0001, 0.02), 4)
BETAS = np.round(np.arange(0.0, 1.0001, 0.1), 4)


def quantiles(alpha, beta):
    if alpha >= 2.0:
        return np.sqrt(2.0) * ndtri(np.asarray(QS))
    law = StableLaw(alpha=float(alpha), beta=float(beta))
    return np.array([stable_ppf(q, law) for q in QS])


def main():
    na = np.zeros((len(ALPHAS), len(BETAS)))
    nb = np.zeros_like(na)
    qi = np.zeros_like(na)
    qm = np.zeros_like(na)
    for i, a in enumerate(ALPHAS):
        for j, b in enumerate(BETAS):
            q = quantiles(a, b)
            na[i, j] = (q[4] - q[0]) / (q[3] - q[1])
            nb[i, j] = (q[4] + q[0] - 2 * q[2]) / (q[4] - q[0])
            qi[i, j] = q[3] - q[1]
            qm[i, j] = q[2]
        print(f"alpha={a} done", flush=True)
    out = Path(__file__).resolve().parent.parent / "src" / "boolgrain" / "_stable_tables.py"
    with open(out, "w") as fh:
        fh.write('"""Quantile summaries of the S1 stable family on an (alpha, beta) grid.\n\n')
        fh.write("Generated by tools/make_stable_tables.py from this package's own CDF\n")
        fh.write("inversion; quantile levels " + repr(QS) + ".\nDo not edit by hand.\n")
        fh.write('"""\n\n')

        def dump(name, arr):
            fh.write(f"{name} = [\n")
            if arr.ndim == 1:
                fh.write("    " + ", ".join(f"{v:.8g}" for v in arr) + ",\n")
            else:
                for row in arr:
                    fh.write("    [" + ", ".join(f"{v:.8g}" for v in row) + "],\n")
            fh.write("]\n\n")

        dump("ALPHAS", ALPHAS)
        dump("BETAS", BETAS)
        dump("NU_ALPHA", na)
        dump("NU_BETA", nb)
        dump("Q_IQR", qi)
        dump("Q_MEDIAN", qm)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
