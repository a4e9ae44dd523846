#include "ritt/normal_forms.hpp"

#include <numeric>

#include "ritt/decompose.hpp"
#include "ritt/errors.hpp"
#include "ritt/integer.hpp"

namespace ritt {

ConjugacyNormal conjugacy_canonical(const Poly& f) {
    const int d = f.degree();
    if (d < 2) throw PreconditionError("conjugacy_canonical: degree must be at least 2");
    const Rat beta = -f.coeff(d - 1) / (f.lead() * d);
    const Rat lead = f.lead();
    const unsigned e = static_cast<unsigned>(d - 1);
    const PowerSplit split = split_power(lead, e);
    Rat sigma = 1 / split.root;
    if (e % 2 == 1 && lead < 0) sigma = -sigma;

    Moebius conj = Moebius::affine(sigma, beta);
    Poly g = conjugate(f, conj);
    if (e % 2 == 0) {
        // z -> -z conjugation flips the even-degree coefficients below the top.
        for (int k = d - 1; k >= 0; --k) {
            if (k % 2 != 0 || g.coeff(k) == 0) continue;
            if (g.coeff(k) < 0) {
                conj = Moebius::affine(-sigma, beta);
                g = conjugate(f, conj);
            }
            break;
        }
    }
    return {std::move(g), conj};
}

namespace {

Poly centred_monic(const Poly& f) {
    const int d = f.degree();
    const Rat t = f.coeff(d - 1) / (f.lead() * d);
    return left_normalize(compose(f, Poly::linear(1, -t))).normalized;
}

long ext_gcd(long a, long b, long& x, long& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    long x1, y1;
    const long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

bool affine_equivalent(const Poly& f, const Poly& g) {
    const int d = f.degree();
    if (d != g.degree()) return false;
    if (d <= 2) return d >= 1;
    const Poly a = centred_monic(f);
    const Poly b = centred_monic(g);
    // a(z) = b(alpha z) / alpha^d: a_k = b_k beta^{d-k} with beta = 1/alpha.
    long n_acc = 0;
    Rat rho_acc = 1;  // beta^{n_acc} = rho_acc
    std::vector<std::pair<long, Rat>> ratios;
    for (int k = 1; k < d; ++k) {
        const bool za = a.coeff(k) == 0, zb = b.coeff(k) == 0;
        if (za != zb) return false;
        if (za) continue;
        const long n = d - k;
        const Rat rho = a.coeff(k) / b.coeff(k);
        ratios.emplace_back(n, rho);
        if (n_acc == 0) {
            n_acc = n;
            rho_acc = rho;
            continue;
        }
        long u, v;
        const long gg = ext_gcd(n_acc, n, u, v);
        rho_acc = rat_pow(rho_acc, u) * rat_pow(rho, v);
        n_acc = gg;
    }
    for (const auto& [n, rho] : ratios)
        if (rat_pow(rho_acc, n / n_acc) != rho) return false;
    return true;
}

}  // namespace ritt
