"""Independent reference values frozen into the C++ tests.

Uses numpy eigendecompositions and mpmath series so that none of the
numbers depend on the C++ implementation paths they check.
"""
import math

import mpmath as mp
import numpy as np

mp.mp.dps = 40


def spectrum(rho):
    return np.linalg.eigvalsh(np.asarray(rho, dtype=complex))


def vn(rho):
    return -sum(l * math.log(l) for l in spectrum(rho) if l > 1e-12)


def renyi(rho, alpha):
    return math.log(sum(l**alpha for l in spectrum(rho) if l > 1e-12)) / (1 - alpha)


def purity(rho):
    return float(sum(l**2 for l in spectrum(rho)))


def arcsin_power_coeffs(k, max_l):
    # Taylor coefficients of (asin(y)/(pi/2))^k by mpmath differentiation.
    f = lambda y: (mp.asin(y) / (mp.pi / 2)) ** k
    return [float(c) for c in mp.taylor(f, 0, max_l)]


def choose_K_vn(lam, eps):
    K = 1
    while (1 - lam) ** (K + 1) / (lam * (K + 1)) > eps / 4:
        K += 1
    return K


def main():
    reference_state = [[0.48786, 0.0094], [0.0094, 0.51214]]
    print("reference eigenvalues", spectrum(reference_state))
    print("reference S        %.12f" % vn(reference_state))
    print("reference R2       %.12f" % renyi(reference_state, 2))
    print("reference purity   %.12f" % purity(reference_state))
    for name, st in {
        "rho1": [[0.37336237, -0.02597119], [-0.02597119, 0.62663763]],
        "rho2": [[0.42050704, -0.08174482], [-0.08174482, 0.57949296]],
        "rho3": [[0.58221067, -0.04587666], [-0.04587666, 0.41778933]],
        "rho4": [[0.42932114, -0.02696812], [-0.02696812, 0.57067886]],
        "noise_state": [[0.5398, -0.1217], [-0.1217, 0.4602]],
    }.items():
        print(name, "S=%.12f R2=%.12f purity=%.12f lmin=%.6f" % (
            vn(st), renyi(st, 2), purity(st), min(spectrum(st))))

    # depolarizing p=0.15 on the noise state by direct Kraus sum
    p = 0.15
    I = np.eye(2)
    X = np.array([[0, 1], [1, 0]])
    Y = np.array([[0, -1j], [1j, 0]])
    Z = np.diag([1, -1])
    rho = np.array([[0.5398, -0.1217], [-0.1217, 0.4602]], dtype=complex)
    ks = [math.sqrt(1 - p) * I] + [math.sqrt(p / 3) * P for P in (X, Y, Z)]
    out = sum(k @ rho @ k.conj().T for k in ks)
    print("depolarized p=0.15:\n", np.real_if_close(out))

    print("b1 (l<=5)", arcsin_power_coeffs(1, 5))
    print("b2[2] = %.12f" % arcsin_power_coeffs(2, 2)[2])
    print("K_vn(0.35,0.2) =", choose_K_vn(0.35, 0.2))
    print("K_vn(0.5,0.5)  =", choose_K_vn(0.5, 0.5))
    print("K_vn(0.9,0.99) =", choose_K_vn(0.9, 0.99))
    H5 = sum(1 / k for k in range(1, 6))
    c = math.log(4 * H5 / 0.2)
    print("H5=%.6f L=%.6f M31=%d" % (H5, c / 0.35**2, math.ceil(math.sqrt(c * 31 / 2))))
    eps_p = 0.2 / 2.79
    print("B(2.79,0.2,0.1) =", math.ceil(2 * (2.79 / 0.2) ** 2 * math.log(40)), "eps'=%.6f" % eps_p)


if __name__ == "__main__":
    main()
