#include "cycemb/poly.hpp"

#include <algorithm>

namespace cycemb {

Poly poly_from_raw(std::vector<uint32_t> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    Poly r;
    r.c_ = std::move(c);
    return r;
}

Poly Poly::make(const Field& f, std::vector<uint32_t> coeffs) {
    for (uint32_t c : coeffs) f.check_element(c);
    return poly_from_raw(std::move(coeffs));
}

Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
    std::vector<uint32_t> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = f.add(a.coeff(i), b.coeff(i));
    return poly_from_raw(std::move(r));
}

Poly poly_sub(const Field& f, const Poly& a, const Poly& b) {
    std::vector<uint32_t> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = f.sub(a.coeff(i), b.coeff(i));
    return poly_from_raw(std::move(r));
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    std::vector<uint32_t> r(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        uint32_t ai = a.coeff(i);
        if (ai == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(ai, b.coeff(j)));
    }
    return poly_from_raw(std::move(r));
}

Poly poly_scale(const Field& f, const Poly& a, uint32_t c) {
    std::vector<uint32_t> r(a.coeffs());
    for (auto& x : r) x = f.mul(x, c);
    return poly_from_raw(std::move(r));
}

std::pair<Poly, Poly> poly_divrem(const Field& f, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<uint32_t> rem = a.coeffs();
    std::vector<uint32_t> quot(a.coeffs().size() - b.coeffs().size() + 1, 0);
    uint32_t lead_inv = f.inv(b.leading());
    for (size_t d = rem.size() - 1; d + 1 >= b.coeffs().size(); --d) {
        uint32_t c = rem[d];
        if (c == 0) continue;
        uint32_t qc = f.mul(c, lead_inv);
        size_t shift = d + 1 - b.coeffs().size();
        quot[shift] = qc;
        for (size_t i = 0; i < b.coeffs().size(); ++i)
            rem[shift + i] = f.sub(rem[shift + i], f.mul(qc, b.coeff(i)));
    }
    return {poly_from_raw(std::move(quot)), poly_from_raw(std::move(rem))};
}

Poly poly_derivative(const Field& f, const Poly& a) {
    if (a.degree() < 1) return Poly{};
    std::vector<uint32_t> r(a.coeffs().size() - 1, 0);
    for (size_t i = 1; i < a.coeffs().size(); ++i) {
        uint32_t scalar = static_cast<uint32_t>(i % f.p());
        // i mod p as a field element: p-fold sums of 1 collapse to digit 0
        uint32_t term = 0;
        for (uint32_t t = 0; t < scalar; ++t) term = f.add(term, 1);
        r[i - 1] = f.mul(term, a.coeff(i));
    }
    return poly_from_raw(std::move(r));
}

Poly poly_make_monic(const Field& f, const Poly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return poly_scale(f, a, f.inv(a.leading()));
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw Error("gcd of two zero polynomials");
    while (!b.is_zero()) {
        auto [q, r] = poly_divrem(f, a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(f, a);
}

Poly poly_powmod(const Field& f, const Poly& base, uint64_t e, const Poly& m) {
    if (m.degree() < 1) throw Error("powmod modulus must be nonconstant");
    Poly res = Poly::one();
    Poly b = poly_divrem(f, base, m).second;
    while (e) {
        if (e & 1) res = poly_divrem(f, poly_mul(f, res, b), m).second;
        b = poly_divrem(f, poly_mul(f, b, b), m).second;
        e >>= 1;
    }
    return res;
}

uint32_t poly_eval(const Field& f, const Poly& a, uint32_t x) {
    uint32_t r = 0;
    for (size_t i = a.coeffs().size(); i-- > 0;) r = f.add(f.mul(r, x), a.coeff(i));
    return r;
}

} // namespace cycemb
