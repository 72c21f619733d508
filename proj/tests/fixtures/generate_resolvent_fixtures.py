#!/usr/bin/env python3
"""Regenerates resolvent_residuals.json with an independent numpy evaluation.

Builds truncated one-mode field matrices from the ladder operator, forms the
resolvents directly with numpy inverses, and records the compressed residual
of the two form-carrying generator relations at M = 16, 32, 64 with cutoff 4.
The frozen values pin the acceptance targets; the C++ implementation must
reproduce them independently.
"""
import json
import pathlib

import numpy as np

SETS = [
    ("product",    0.989, 0.754, ("-1", "1"),    ("0", "1")),
    ("commutator", 0.989, 0.754, ("-1", "1"),    ("0", "1")),
    ("product",    0.941, 1.197, ("-1", "1/2"),  ("0", "1/2")),
    ("commutator", 0.941, 1.197, ("-1", "1/2"),  ("0", "1/2")),
    ("product",    0.616, 1.041, ("-1/2", "-1/2"), ("0", "-1")),
    ("commutator", 0.616, 1.041, ("-1/2", "-1/2"), ("0", "-1")),
    ("product",    0.748, 0.952, ("-1", "1"),    ("-1", "1/2")),
    ("commutator", 0.748, 0.952, ("-1", "1"),    ("-1", "1/2")),
    ("product",    1.599, 0.714, ("1/2", "0"),   ("1", "1")),
    ("commutator", 0.814, 0.811, ("-1/2", "0"),  ("0", "-1")),
]

CUTOFF = 4
LEVELS = (16, 32, 64)


def rat(text):
    if "/" in text:
        num, den = text.split("/")
        return float(num) / float(den)
    return float(text)


def field(levels, f):
    a = np.zeros((levels, levels), dtype=complex)
    for n in range(1, levels):
        a[n - 1, n] = np.sqrt(n)
    q = (a + a.conj().T) / np.sqrt(2.0)
    p = -1j * (a - a.conj().T) / np.sqrt(2.0)
    return rat(f[0]) * q + rat(f[1]) * p


def resolvent(levels, lam, f):
    return np.linalg.inv(1j * lam * np.eye(levels) - field(levels, f))


def compressed(kind, levels, lam, nu, f, g):
    sigma = rat(f[0]) * rat(g[1]) - rat(f[1]) * rat(g[0])
    rf = resolvent(levels, lam, f)
    rg = resolvent(levels, nu, g)
    if kind == "product":
        fg = (str(rat(f[0]) + rat(g[0])), str(rat(f[1]) + rat(g[1])))
        rfg = resolvent(levels, lam + nu, fg)
        defect = rf @ rg - rfg @ (rf + rg + 1j * sigma * rf @ rf @ rg)
    else:
        defect = rf @ rg - rg @ rf - 1j * sigma * rf @ rg @ rg @ rf
    return float(np.linalg.norm(defect[:CUTOFF, :CUTOFF], 2))


def main():
    out = []
    for kind, lam, nu, f, g in SETS:
        values = {str(m): compressed(kind, m, lam, nu, f, g) for m in LEVELS}
        out.append(
            dict(relation=kind, lam=lam, nu=nu, f=list(f), g=list(g),
                 cutoff=CUTOFF, compressed=values))
    path = pathlib.Path(__file__).parent / "resolvent_residuals.json"
    path.write_text(json.dumps(out, indent=2) + "\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
