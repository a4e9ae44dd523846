#include "ritt/integer.hpp"

#include <algorithm>
#include <map>

#include "ritt/errors.hpp"

namespace ritt {

std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

namespace {

bool is_probable_prime(const mpz_class& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho; n is composite and odd.
mpz_class pollard_rho(const mpz_class& n) {
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1, q = 1, ys;
        unsigned long r = 1;
        auto f = [&](const mpz_class& v) {
            mpz_class t = v * v + c;
            return mpz_class(t % n);
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min<unsigned long>(128, r - k); ++i) {
                    y = f(y);
                    mpz_class diff = abs(x - y);
                    q = (q * diff) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += 128;
            } while (k < r && d == 1);
            r *= 2;
        } while (d == 1);
        if (d == n) {
            do {
                ys = f(ys);
                mpz_class diff = abs(x - ys);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        factor_into(r, out);
        factor_into(r, out);
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n) {
    if (n == 0) throw PreconditionError("factorize: zero");
    mpz_class m = abs(n);
    std::map<mpz_class, unsigned> found;
    for (unsigned long p = 2; p < 10000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++found[mpz_class(p)];
            m /= p;
        }
    }
    factor_into(m, found);
    return {found.begin(), found.end()};
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Rat> rational_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    const mpz_class& n = r.get_num();
    const mpz_class& d = r.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    Rat out(sn, sd);
    out.canonicalize();
    return out;
}

PowerSplit split_power(const Rat& r, unsigned e) {
    if (r == 0 || e == 0) throw PreconditionError("split_power: zero input");
    Rat residue = 1, root = 1;
    auto absorb = [&](const mpz_class& n, bool inverse) {
        for (const auto& [p, k] : factorize(n)) {
            // Exponent of p in r is +k (numerator) or -k (denominator).
            long exp = inverse ? -static_cast<long>(k) : static_cast<long>(k);
            long rem = ((exp % static_cast<long>(e)) + e) % e;
            long q = (exp - rem) / static_cast<long>(e);
            residue *= rat_pow(Rat(p), rem);
            root *= rat_pow(Rat(p), q);
        }
    };
    absorb(r.get_num(), false);
    absorb(r.get_den(), true);
    return {residue, root};
}

Rat rat_pow(const Rat& r, long e) {
    if (e < 0) {
        if (r == 0) throw ZeroDenominator("rat_pow: zero to a negative power");
        return 1 / rat_pow(r, -e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), r.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), r.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    Rat out(n, d);
    out.canonicalize();
    return out;
}

}  // namespace ritt
