#include "cycemb/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace cycemb {

namespace {

// ---- 64-bit integer helpers (Miller-Rabin + Brent rho) ----

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % sp == 0) return n == sp;
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // deterministic witness set for 64-bit integers
    for (uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        uint64_t x = powmod_u64(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

uint64_t brent_rho(uint64_t n) {
    if (n % 2 == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1;
        auto step = [&](uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
        uint64_t count = 0;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = std::gcd(diff, n);
            if (++count > (1ull << 26)) throw BudgetError("integer factorization budget exceeded");
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_u64_into(uint64_t n, std::map<uint64_t, uint32_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        ++out[n];
        return;
    }
    for (uint64_t d = 2; d < 100000 && d * d <= n; ++d) {
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
        if (n == 1) return;
    }
    if (n == 1) return;
    if (is_prime_u64(n)) {
        ++out[n];
        return;
    }
    uint64_t f = brent_rho(n);
    factor_u64_into(f, out);
    factor_u64_into(n / f, out);
}

std::map<uint64_t, uint32_t> factor_u64(uint64_t n) {
    std::map<uint64_t, uint32_t> out;
    factor_u64_into(n, out);
    return out;
}

// q^d - 1 with an overflow guard.
uint64_t q_pow_minus_one(uint64_t q, uint64_t d) {
    unsigned __int128 v = 1;
    for (uint64_t i = 0; i < d; ++i) {
        v *= q;
        if (v > static_cast<unsigned __int128>(UINT64_MAX))
            throw BudgetError("q^d - 1 exceeds the 64-bit budget (d=" + std::to_string(d) + ")");
    }
    return static_cast<uint64_t>(v) - 1;
}

// ---- polynomial factorization ----

// coefficient-wise p-th root: f = h(X^p) -> h
Poly pth_root(const Field& f, const Poly& a) {
    const uint32_t p = f.p();
    std::vector<uint32_t> r(a.coeffs().size() / p + 1, 0);
    for (size_t i = 0; i * p < a.coeffs().size(); ++i)
        r[i] = f.pow(a.coeff(i * p), f.q() / p);
    return poly_from_raw(std::move(r));
}

// squarefree decomposition of a monic polynomial: multiplicity -> product
void squarefree_decompose(const Field& f, Poly a, uint32_t mult_scale,
                          std::map<uint32_t, Poly>& out) {
    if (a.degree() < 1) return;
    Poly d = poly_derivative(f, a);
    if (d.is_zero()) {
        squarefree_decompose(f, pth_root(f, a), mult_scale * f.p(), out);
        return;
    }
    Poly c = poly_gcd(f, a, d);
    Poly w = poly_divrem(f, a, c).first;
    uint32_t i = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(f, w, c);
        Poly fac = poly_divrem(f, w, y).first;
        if (fac.degree() > 0) {
            auto it = out.find(i * mult_scale);
            if (it == out.end())
                out.emplace(i * mult_scale, fac);
            else
                it->second = poly_mul(f, it->second, fac);
        }
        w = std::move(y);
        c = poly_divrem(f, c, w).first;
        ++i;
    }
    if (c.degree() > 0) squarefree_decompose(f, pth_root(f, c), mult_scale * f.p(), out);
}

// X^{q^k} mod m by k-fold q-powering.
Poly frobenius_pow(const Field& f, Poly x, uint32_t k, const Poly& m) {
    for (uint32_t i = 0; i < k; ++i) x = poly_powmod(f, x, f.q(), m);
    return x;
}

Poly random_poly_below(const Field& f, uint32_t deg_bound, std::mt19937_64& rng) {
    std::vector<uint32_t> c(deg_bound);
    for (auto& x : c) x = static_cast<uint32_t>(rng() % f.q());
    return poly_from_raw(std::move(c));
}

// equal-degree splitting of a monic squarefree product of irreducibles of
// degree d (Cantor-Zassenhaus; trace construction in characteristic 2)
void equal_degree_split(const Field& f, const Poly& a, uint32_t d, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
    if (a.degree() == d) {
        out.push_back(a);
        return;
    }
    const Poly x = Poly::monomial(1);
    Poly g;
    while (true) {
        Poly h = random_poly_below(f, static_cast<uint32_t>(a.degree()), rng);
        if (h.degree() < 1) continue;
        if (f.p() == 2) {
            // trace map over F_2 of the degree-d residue field
            Poly t;
            Poly cur = poly_divrem(f, h, a).second;
            for (uint32_t i = 0; i < f.s() * d; ++i) {
                t = poly_add(f, t, cur);
                cur = poly_divrem(f, poly_mul(f, cur, cur), a).second;
            }
            g = t.is_zero() ? Poly{} : poly_gcd(f, t, a);
        } else {
            uint64_t e = (q_pow_minus_one(f.q(), d)) / 2;
            Poly t = poly_powmod(f, h, e, a);
            t = poly_sub(f, t, Poly::one());
            g = t.is_zero() ? Poly{} : poly_gcd(f, t, a);
        }
        if (!g.is_zero() && g.degree() > 0 && g.degree() < a.degree()) break;
    }
    equal_degree_split(f, g, d, rng, out);
    equal_degree_split(f, poly_divrem(f, a, g).first, d, rng, out);
}

// distinct-degree then equal-degree factorization of a monic squarefree poly
std::vector<Poly> factor_squarefree_monic(const Field& f, Poly a, std::mt19937_64& rng) {
    std::vector<Poly> out;
    const Poly x = Poly::monomial(1);
    Poly h = poly_divrem(f, x, a).second;
    uint32_t d = 0;
    while (a.degree() > 0 && static_cast<int64_t>(2 * (d + 1)) <= a.degree()) {
        ++d;
        h = poly_powmod(f, h, f.q(), a);
        Poly g = poly_gcd(f, poly_sub(f, h, x), a);
        if (g.degree() > 0) {
            equal_degree_split(f, g, d, rng, out);
            a = poly_divrem(f, a, g).first;
            h = poly_divrem(f, h, a.degree() > 0 ? a : Poly::one()).second;
            if (a.degree() == 0) break;
        }
    }
    if (a.degree() > 0) out.push_back(a);
    return out;
}

bool factor_less(const std::pair<Poly, uint32_t>& a, const std::pair<Poly, uint32_t>& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.coeffs() < b.first.coeffs();
}

} // namespace

Factorization poly_factor(const Field& f, const Poly& a) {
    if (a.is_zero()) throw Error("cannot factor the zero polynomial");
    Factorization result;
    result.unit = a.leading();
    Poly monic = poly_make_monic(f, a);
    if (monic.degree() == 0) return result;

    std::map<uint32_t, Poly> sqf;
    squarefree_decompose(f, monic, 1, sqf);

    std::mt19937_64 rng(0x5eedc0de5eedc0deULL);
    for (auto& [mult, part] : sqf) {
        for (auto& irr : factor_squarefree_monic(f, part, rng))
            result.factors.emplace_back(irr, mult);
    }
    std::sort(result.factors.begin(), result.factors.end(), factor_less);
    return result;
}

uint64_t order_of_x(const Field& f, const Poly& g) {
    if (g.degree() < 1) throw Error("order_of_x requires deg g >= 1");
    if (g.coeff(0) == 0) throw Error("order_of_x requires g(0) != 0");

    auto fac = poly_factor(f, g);
    for (auto& [irr, mult] : fac.factors)
        if (mult > 1) throw Error("order_of_x requires a squarefree polynomial");

    uint64_t result = 1;
    for (auto& [irr, mult] : fac.factors) {
        (void)mult;
        uint64_t local = q_pow_minus_one(f.q(), static_cast<uint64_t>(irr.degree()));
        for (auto& [prime, exp] : factor_u64(local)) {
            for (uint32_t i = 0; i < exp; ++i) {
                uint64_t cand = local / prime;
                if (poly_powmod(f, Poly::monomial(1), cand, irr) == Poly::one())
                    local = cand;
                else
                    break;
            }
        }
        uint64_t gcd = std::gcd(result, local);
        unsigned __int128 l = static_cast<unsigned __int128>(result / gcd) * local;
        if (l > static_cast<unsigned __int128>(UINT64_MAX))
            throw BudgetError("order lcm exceeds the 64-bit budget");
        result = static_cast<uint64_t>(l);
    }
    return result;
}

} // namespace cycemb
