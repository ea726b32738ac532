"""Independent reference values for the unit tests.

Every number here comes from mpmath at 30 digits by direct quadrature of the
defining integrals; nothing calls into the C++ library. Run once and commit
the generated header:  python3 tests/oracle/make_oracle.py > tests/oracle_values.hpp
"""
import mpmath as mp

mp.mp.dps = 30
inf = mp.inf


def k0(x):
    return mp.besselk(0, x)


def k0_laplace_numeric(s):
    return mp.quad(lambda x: mp.e ** (-s * x) * k0(x), [0, 1, 2, inf])


def arcsine1(f, r):
    return 4 / mp.pi * mp.quad(lambda w: f(r * r + w * w), [0, 1, inf])


def upsilon(f, tau, r):
    return mp.quad(lambda u: f(r / u) * tau(u) / u, [0, 1, inf])


def frac_half(f, u):
    return 2 / mp.sqrt(mp.pi) * mp.quad(lambda w: f(u + w * w), [0, 1, inf])


def gauss_tail(u):
    return mp.sqrt(mp.pi) / 2 * mp.erfc(u)


def gauss_tail_inverse(t):
    return mp.findroot(lambda u: gauss_tail(u) - t, 1.0)


# Poisson-type triplet: Sigma, gamma, atom at r0 with mass m (1-D).
SIG, GAM, R0, M0 = mp.mpf("0.5"), mp.mpf("0.3"), mp.mpf(1), mp.mpf(2)


def psi_atom(z):
    return -SIG * z * z / 2 + 1j * GAM * z + M0 * (mp.expj(z * R0) - 1 - 1j * z * R0 / (1 + R0 * R0))


def psi_exp(z):
    # nu(dr) = e^{-r} dr on (0, inf), no Gaussian part, gamma = 0.
    return mp.quad(lambda r: (mp.expj(z * r) - 1 - 1j * z * r / (1 + r * r)) * mp.e ** (-r), [0, 1, inf])


def phi_f(psi, f, T, z, breaks=()):
    pts = [0, *breaks, T]
    re = mp.quad(lambda t: mp.re(psi(f(t) * z)), pts)
    im = mp.quad(lambda t: mp.im(psi(f(t) * z)), pts)
    return re, im


INTEGRANDS = {
    "cos_pi_half": (lambda t: mp.cos(mp.pi * t / 2), mp.mpf(1)),
    "log_sqrt": (lambda t: mp.sqrt(-mp.log(t)), mp.mpf(1)),
    "log": (lambda t: -mp.log(t), mp.mpf(1)),
    "gauss_tail_inverse": (None, mp.sqrt(mp.pi) / 2),
}


def emit(name, pairs):
    print(f"inline constexpr RefPair {name}[] = {{")
    for x, y in pairs:
        print(f"    {{{mp.nstr(x, 20)}, {mp.nstr(y, 20)}}},")
    print("};")


def emit_complex(name, rows):
    print(f"inline constexpr RefComplex {name}[] = {{")
    for z, (re, im) in rows:
        print(f"    {{{mp.nstr(z, 20)}, {mp.nstr(re, 20)}, {mp.nstr(im, 20)}}},")
    print("};")


def main():
    print("// Generated by tests/oracle/make_oracle.py (mpmath, 30 digits). Do not edit.")
    print("#pragma once\n")
    print("namespace oracle {\n")
    print("struct RefPair { double x, y; };")
    print("struct RefComplex { double z, re, im; };\n")

    emit("kK0", [(x, k0(x)) for x in map(mp.mpf, ["1e-6", "1e-3", "0.01", "0.3", "1", "1.9", "2.1", "2.5", "7", "20", "50"])])
    emit("kK0Laplace", [(s, k0_laplace_numeric(s)) for s in map(mp.mpf, ["0.25", "0.9999", "1", "1.5", "4"])])

    f_a1 = lambda u: u * mp.e ** (-u)  # exp_power(1, 1, 1, 1)
    emit("kArcsine1UExpU", [(r, arcsine1(f_a1, r)) for r in map(mp.mpf, ["0.2", "1", "2"])])

    f_g = lambda r: mp.e ** (-r * r)  # exp_power(1, 0, 1, 2)
    emit("kUpsilon0Gauss", [(r, upsilon(f_g, lambda u: mp.e ** (-u), r)) for r in map(mp.mpf, ["0.3", "1", "3"])])
    tau_ab = lambda u: 2 * u * mp.e ** (-u * u)  # alpha = -2, beta = 2
    emit("kUpsilonM2_2Gauss", [(r, upsilon(f_g, tau_ab, r)) for r in map(mp.mpf, ["0.3", "1", "3"])])
    emit("kFracHalfExpU", [(u, frac_half(lambda x: mp.e ** (-x), u)) for u in map(mp.mpf, ["0.1", "1", "4"])])

    emit("kGaussTailInverse", [(t, gauss_tail_inverse(t)) for t in map(mp.mpf, ["1e-8", "0.01", "0.3", "0.8"])])

    emit_complex("kPsiAtom", [(z, (mp.re(psi_atom(z)), mp.im(psi_atom(z)))) for z in map(mp.mpf, ["-2", "0.7", "3"])])
    emit_complex("kPsiExp", [(z, (mp.re(psi_exp(z)), mp.im(psi_exp(z)))) for z in map(mp.mpf, ["-1.5", "0.4", "2"])])

    for key, (f, T) in INTEGRANDS.items():
        if key == "gauss_tail_inverse":
            # t = h(u) turns int_0^T psi(h*(t) z) dt into int_0^inf psi(u z) e^{-u^2} du.
            def phi(z):
                g = lambda u: psi_atom(u * z) * mp.e ** (-u * u)
                return mp.quad(lambda u: mp.re(g(u)), [0, 1, inf]), mp.quad(lambda u: mp.im(g(u)), [0, 1, inf])
        else:
            phi = lambda z: phi_f(psi_atom, f, T, z)
        emit_complex("kPhiAtom_" + key, [(z, phi(z)) for z in map(mp.mpf, ["-1.2", "0.5", "2"])])
    rows = [(z, phi_f(psi_exp, INTEGRANDS["cos_pi_half"][0], 1, z)) for z in map(mp.mpf, ["-1", "0.8"])]
    emit_complex("kPhiExp_cos_pi_half", rows)

    print("\n}  // namespace oracle")


if __name__ == "__main__":
    main()
