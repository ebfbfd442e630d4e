"""Reference values for crates/core/tests/frozen_values.rs.

Works in mode-operator space at 40 digits: the squeezer acts on (a, a†) as
expm([[0, L], [conj(L), 0]]) and the beamsplitter as a ↦ Y a. The Fisher
information comes from the pure-state Gaussian fidelity
1/sqrt(det(Σ₁+Σ₂))·exp(−½ δmᵀ(Σ₁+Σ₂)⁻¹δm) and F = −2 ∂²fid/∂δ².
"""
import mpmath as mp

mp.mp.dps = 40
I = mp.mpc(0, 1)


def zwm_l(g, t, th):
    T = t * mp.expj(-th)
    r = mp.sqrt(1 - t * t)
    L = mp.zeros(4, 4)
    for i, j, v in [(0, 2, T), (0, 3, r), (1, 2, 1)]:
        L[i, j] = L[j, i] = g * v
    return L


def bogoliubov(L):
    m = L.rows
    K = mp.zeros(2 * m, 2 * m)
    for i in range(m):
        for j in range(m):
            K[i, m + j] = L[i, j]
            K[m + i, j] = mp.conj(L[i, j])
    E = mp.expm(K)
    A = mp.matrix([[E[i, j] for j in range(m)] for i in range(m)])
    B = mp.matrix([[E[i, m + j] for j in range(m)] for i in range(m)])
    return A, B


def beamsplitter(phi):
    e = mp.expj(phi)
    s = 1 / mp.sqrt(2)
    Y = mp.eye(4)
    Y[0, 0], Y[0, 1], Y[1, 0], Y[1, 1] = s, s * I * e, s * I, s * e
    return Y


def dagger(X):
    return X.transpose_conj()


def moments(A, B, alpha):
    m = A.rows
    P, Q = A + B, A - B
    T = mp.zeros(2 * m, 2 * m)
    for i in range(m):
        for j in range(m):
            T[i, j] = mp.re(P[i, j])
            T[i, m + j] = -mp.im(Q[i, j])
            T[m + i, j] = mp.im(P[i, j])
            T[m + i, m + j] = mp.re(Q[i, j])
    m0 = mp.zeros(2 * m, 1)
    for k in range(m):
        m0[k] = mp.sqrt(2) * mp.re(alpha[k])
        m0[m + k] = mp.sqrt(2) * mp.im(alpha[k])
    return T * m0, T * T.T / 2


def signals(g, t, th, phi):
    A, B = bogoliubov(zwm_l(g, t, th))
    C = beamsplitter(phi) * B
    N = C * dagger(C)
    n1, n2 = mp.re(N[0, 0]), mp.re(N[1, 1])
    corr = N[1, 0]
    return n1, n2, abs(corr) / mp.sqrt(n1 * n2)


def probe(g, t, th, beta):
    A, B = bogoliubov(zwm_l(g, t, th))
    return moments(A, B, [beta, 0, 0, 0])


def fidelity(s1, s2):
    (m1, c1), (m2, c2) = s1, s2
    S = c1 + c2
    d = m2 - m1
    return mp.exp(-(d.T * mp.inverse(S) * d)[0] / 2) / mp.sqrt(mp.det(S))


def qfi(g, t, th, beta, h=mp.mpf("1e-12")):
    s0 = probe(g, t, th, beta)
    fp = fidelity(s0, probe(g, t, th + h, beta))
    fm = fidelity(s0, probe(g, t, th - h, beta))
    return -2 * (fp + fm - 2) / (h * h)


def show(x):
    return mp.nstr(x, 17, min_fixed=1, max_fixed=0)


if __name__ == "__main__":
    print("// photocurrents: (g, |T|, θ_T, φ_S, n_S1, n_S2, γ)")
    for g, t, th, phi in [
        (0.2, 0.5, 0.3, 1.1),
        (0.8, 1.0, 0.0, 0.4),
        (1.5, 0.25, 2.0, 0.0),
        (1.0, 0.75, -0.7, 2.9),
        (0.05, 0.9, 1.2, 5.5),
    ]:
        vals = (mp.mpf(g), mp.mpf(t), mp.mpf(th), mp.mpf(phi))
        print("(" + ", ".join(map(str, (g, t, th, phi))) + ", " + ", ".join(show(v) for v in signals(*vals)) + "),")

    print("// network photon numbers and ⟨a_0†a_1⟩ for a fixed 3-mode L")
    L = mp.matrix([[0, mp.mpc(0.3, -0.1), mp.mpc(0.2, 0.25)],
                   [mp.mpc(0.3, -0.1), 0, mp.mpc(-0.15, 0.05)],
                   [mp.mpc(0.2, 0.25), mp.mpc(-0.15, 0.05), 0]])
    A, B = bogoliubov(L)
    N = B * dagger(B)
    print([show(mp.re(N[j, j])) for j in range(3)])
    print(show(mp.re(N[1, 0])), show(mp.im(N[1, 0])))

    print("// probe Fisher information: (g, |T|, θ, β, F)")
    for g, t, th, beta in [(0.15, 0.6, 0.9, 0.4), (0.5, 1.0, 1.5707963267948966, 1.0),
                           (0.8, 0.3, 0.2, 2.0), (0.4, 0.7, 2.5, 0.0)]:
        vals = (mp.mpf(g), mp.mpf(t), mp.mpf(th), mp.mpf(beta))
        print(f"({g}, {t}, {th}, {beta}, {show(qfi(*vals))}),")
