#!/usr/bin/env python3
# Copyright 2026 The augerqc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Generate the oxygen K-shell one-centre Auger integral table.

Values are <chi_Elm chi_1s | chi_nu chi_rho> in hartree atomic units, with the
continuum function chi_Elm energy-normalised and the MBS functions taken from
STO-3G. The continuum is a Numerov solution in a spherical O2+ potential
(1s2 2s2 2p2, Hartree plus LDA exchange) built from the same STO-3G radial
functions. Angular factors use real spherical harmonics.

Usage: gen_oxygen_k.py [--ekin-ev 490] [--out data/oca/O_K.csv]
"""
import argparse
import math

import numpy as np

HARTREE_EV = 27.211386245988

S_EXP = [130.70932, 23.808861, 6.4436083]
S_COEF = [0.15432897, 0.53532814, 0.44463454]
SP_EXP = [5.0331513, 1.1695961, 0.380389]
S2_COEF = [-0.09996723, 0.39951283, 0.70011547]
P2_COEF = [0.15591627, 0.60768372, 0.39195739]

# (label, l, real m); p ordering x, y, z with m = +1, -1, 0
MBS = [("1s", 0, 0), ("2s", 0, 0), ("2px", 1, 1), ("2py", 1, -1), ("2pz", 1, 0)]


def radial(r, exps, coefs, l):
    u = np.zeros_like(r)
    for a, c in zip(exps, coefs):
        norm = (2 * a / math.pi) ** 0.75 * (4 * a) ** (l / 2)
        u += c * norm * np.exp(-a * r * r)
    u *= r ** (l + 1)
    return u / math.sqrt(np.trapezoid(u * u, r))


def real_sph(l, m, x, y, z):
    if l == 0:
        return np.full_like(x, 0.5 / math.sqrt(math.pi))
    if l == 1:
        c = math.sqrt(3 / (4 * math.pi))
        return c * {1: x, -1: y, 0: z}[m]
    c = 0.5 * math.sqrt(15 / math.pi)
    return {
        -2: c * x * y,
        -1: c * y * z,
        0: 0.25 * math.sqrt(5 / math.pi) * (3 * z * z - 1),
        1: c * x * z,
        2: 0.5 * c * (x * x - y * y),
    }[m]


def gaunt_table():
    ct, wt = np.polynomial.legendre.leggauss(24)
    nphi = 48
    phi = 2 * math.pi * np.arange(nphi) / nphi
    CT, PH = np.meshgrid(ct, phi, indexing="ij")
    W = np.outer(wt, np.full(nphi, 2 * math.pi / nphi))
    st = np.sqrt(1 - CT * CT)
    x, y, z = st * np.cos(PH), st * np.sin(PH), CT

    def g(a, b, c):
        return float(np.sum(W * real_sph(*a, x, y, z) * real_sph(*b, x, y, z) * real_sph(*c, x, y, z)))

    return g



def continuum(r, v, e, l):
    h = r[1] - r[0]
    f = np.empty_like(r)
    f[1:] = 2 * (v[1:] - e) + l * (l + 1) / r[1:] ** 2
    f[0] = 0.0
    u = np.zeros_like(r)
    u[1] = h ** (l + 1)
    w = 1 - h * h * f / 12
    for i in range(1, len(r) - 1):
        u[i + 1] = ((12 - 10 * w[i]) * u[i] - w[i - 1] * u[i - 1]) / w[i + 1]
    du = np.gradient(u, h)
    p = np.sqrt(np.maximum(-f, 1e-12))
    tail = slice(int(0.8 * len(r)), len(r))
    amp2 = np.mean((u[tail] ** 2 + (du[tail] / p[tail]) ** 2) * p[tail])
    return u * math.sqrt(2 / math.pi / amp2)


def slater_potential(r, density_u2, k):
    # Y^k(r) = r^-(k+1) int_0^r s^k P ds + r^k int_r^inf s^-(k+1) P ds
    rs = r[1:]
    p = density_u2[1:]
    inner = np.concatenate([[0.0], np.cumsum(0.5 * (p[1:] * rs[1:] ** k + p[:-1] * rs[:-1] ** k) * np.diff(rs))])
    g = p / rs ** (k + 1)
    outer_c = np.concatenate([[0.0], np.cumsum(0.5 * (g[1:] + g[:-1]) * np.diff(rs))])
    outer = outer_c[-1] - outer_c
    y = np.zeros_like(r)
    y[1:] = inner / rs ** (k + 1) + rs ** k * outer
    return y


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--ekin-ev", type=float, default=490.0)
    ap.add_argument("--rmax", type=float, default=30.0)
    ap.add_argument("--step", type=float, default=2e-4)
    ap.add_argument("--out", default="data/oca/O_K.csv")
    ap.add_argument("--p-electrons", type=int, default=2, help="2p occupation of the ion (2 for O2+)")
    ap.add_argument("--exchange", choices=["lda", "none"], default="lda")
    ap.add_argument("--no-orthogonalize", dest="orthogonalize", action="store_false",
                    help="keep the continuum unprojected from bound orbitals of the same l")
    args = ap.parse_args()

    r = np.arange(0.0, args.rmax + args.step / 2, args.step)
    u = {
        "1s": radial(r, S_EXP, S_COEF, 0),
        "2s": radial(r, SP_EXP, S2_COEF, 0),
        "2p": radial(r, SP_EXP, P2_COEF, 1),
    }
    occ = 2 * u["1s"] ** 2 + 2 * u["2s"] ** 2 + args.p_electrons * u["2p"] ** 2
    z_ion = 8.0
    rho = np.zeros_like(r)
    rho[1:] = occ[1:] / (4 * math.pi * r[1:] ** 2)
    v = np.zeros_like(r)
    v[1:] = -z_ion / r[1:] + slater_potential(r, occ, 0)[1:]
    if args.exchange == "lda":
        v[1:] -= np.cbrt(3 * rho[1:] / math.pi)

    e = args.ekin_ev / HARTREE_EV
    cont = {l: continuum(r, v, e, l) for l in range(3)}
    if args.orthogonalize:
        bound = {0: [u["1s"], u["2s"]], 1: [u["2p"]]}
        for l, orbs in bound.items():
            basis = []
            for b in orbs:
                for q in basis:
                    b = b - np.trapezoid(b * q, r) * q
                basis.append(b / math.sqrt(np.trapezoid(b * b, r)))
            for q in basis:
                cont[l] = cont[l] - np.trapezoid(cont[l] * q, r) * q
    gaunt = gaunt_table()
    norm2 = np.trapezoid(u["1s"] ** 2, r)
    assert abs(norm2 - 1) < 1e-8

    def ur(label):
        return u["2p"] if label.startswith("2p") else u[label]

    rows = []
    for l in range(3):
        for m in range(-l, l + 1):
            for nu in MBS:
                for rho_f in MBS:
                    k, q = rho_f[1], rho_f[2]
                    ang = 4 * math.pi / (2 * k + 1) / math.sqrt(4 * math.pi) * gaunt((l, m), (k, q), (nu[1], nu[2]))
                    val = 0.0
                    if abs(ang) > 1e-12:
                        y = slater_potential(r, u["1s"] * ur(rho_f[0]), k)
                        val = ang * np.trapezoid(cont[l] * ur(nu[0]) * y, r)
                    rows.append((l, m, nu[0], rho_f[0], val))

    with open(args.out, "w") as fh:
        fh.write("# provenance: tools/atomic_table/gen_oxygen_k.py; STO-3G O MBS; "
                 f"energy-normalised Numerov continuum at E_kin = {args.ekin_ev:g} eV in a spherical "
                 f"O (1s2 2s2 2p{args.p_electrons}) Hartree{' + LDA exchange' if args.exchange == 'lda' else ''} potential; "
                 f"continuum {'orthogonalised to' if args.orthogonalize else 'not projected from'} same-l bound orbitals; "
                 f"grid step {args.step:g} bohr to {args.rmax:g} bohr; real spherical harmonics "
                 "(p: m=+1 x, m=-1 y, m=0 z)\n")
        fh.write("element,core,l,m,nu,rho,value\n")
        for l, m, a, b, val in rows:
            fh.write(f"O,1s,{l},{m},{a},{b},{val:.12e}\n")
    print(f"wrote {len(rows)} entries to {args.out}")


if __name__ == "__main__":
    main()
