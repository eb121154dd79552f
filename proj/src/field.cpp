#include "cycemb/field.hpp"

#include <algorithm>

namespace cycemb {

namespace {

// Small helpers on polynomials over F_p, coefficients ascending, used only
// for modulus validation/search before Field exists.

std::vector<uint32_t> fp_trim(std::vector<uint32_t> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<uint32_t> fp_mul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                             uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return fp_trim(std::move(r));
}

std::vector<uint32_t> fp_mod(std::vector<uint32_t> a, const std::vector<uint32_t>& m, uint32_t p) {
    a = fp_trim(std::move(a));
    const size_t dm = m.size() - 1;
    // m is monic
    while (a.size() > dm) {
        uint32_t lead = a.back();
        size_t shift = a.size() - 1 - dm;
        for (size_t i = 0; i < m.size(); ++i) {
            uint32_t& c = a[shift + i];
            c = (c + p - (lead * m[i]) % p) % p;
        }
        a = fp_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

std::vector<uint32_t> fp_gcd(std::vector<uint32_t> a, std::vector<uint32_t> b, uint32_t p) {
    a = fp_trim(std::move(a));
    b = fp_trim(std::move(b));
    while (!b.empty()) {
        // make b monic so fp_mod applies
        uint32_t lead = b.back();
        if (lead != 1) {
            // lead^{-1} mod p by Fermat
            uint32_t li = 1, base = lead, e = p - 2;
            while (e) {
                if (e & 1) li = (li * base) % p;
                base = (base * base) % p;
                e >>= 1;
            }
            for (auto& c : b) c = (c * li) % p;
        }
        auto r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^{p^k} mod m via repeated p-th powering.
std::vector<uint32_t> fp_xq_pow(const std::vector<uint32_t>& m, uint32_t p, uint32_t k) {
    std::vector<uint32_t> x = {0, 1};
    auto cur = fp_mod(x, m, p);
    for (uint32_t step = 0; step < k; ++step) {
        // cur^p mod m, square-and-multiply on exponent p
        std::vector<uint32_t> res = {1};
        auto base = cur;
        uint32_t e = p;
        while (e) {
            if (e & 1) res = fp_mod(fp_mul(res, base, p), m, p);
            base = fp_mod(fp_mul(base, base, p), m, p);
            e >>= 1;
        }
        cur = std::move(res);
    }
    return cur;
}

// Rabin irreducibility test for monic m of degree s over F_p.
bool fp_irreducible(const std::vector<uint32_t>& m, uint32_t p) {
    const uint32_t s = static_cast<uint32_t>(m.size()) - 1;
    if (s == 0) return false;
    // x^{p^s} == x mod m
    auto xs = fp_xq_pow(m, p, s);
    std::vector<uint32_t> x = {0, 1};
    if (fp_trim(xs) != fp_mod(x, m, p)) return false;
    // for every prime divisor r of s: gcd(x^{p^{s/r}} - x, m) == 1
    uint32_t rem = s;
    for (uint32_t r = 2; r * r <= rem; ++r) {
        if (rem % r) continue;
        while (rem % r == 0) rem /= r;
        auto xr = fp_xq_pow(m, p, s / r);
        xr.resize(std::max(xr.size(), size_t(2)), 0);
        xr[1] = (xr[1] + p - 1) % p;
        auto g = fp_gcd(fp_trim(xr), m, p);
        if (g.size() != 1) return false;
    }
    if (rem > 1) {
        auto xr = fp_xq_pow(m, p, s / rem);
        xr.resize(std::max(xr.size(), size_t(2)), 0);
        xr[1] = (xr[1] + p - 1) % p;
        auto g = fp_gcd(fp_trim(xr), m, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<uint32_t> smallest_irreducible(uint32_t p, uint32_t s, uint64_t q) {
    // enumerate non-leading coefficient vectors in lexicographic order of the
    // integer encoding (constant digit least significant)
    for (uint64_t enc = 0; enc < q; ++enc) {
        std::vector<uint32_t> m(s + 1, 0);
        uint64_t v = enc;
        for (uint32_t i = 0; i < s; ++i) {
            m[i] = static_cast<uint32_t>(v % p);
            v /= p;
        }
        m[s] = 1;
        if (fp_irreducible(m, p)) return m;
    }
    throw Error("no irreducible modulus found"); // unreachable
}

} // namespace

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::make(uint32_t p, uint32_t s, std::optional<std::vector<uint32_t>> modulus) {
    if (!is_prime_u32(p)) throw Error("field characteristic must be prime, got " + std::to_string(p));
    if (s < 1) throw Error("extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < s; ++i) {
        q *= p;
        if (q > (1u << 16)) throw Error("field size q exceeds 2^16");
    }
    Field f;
    f.p_ = p;
    f.s_ = s;
    f.q_ = static_cast<uint32_t>(q);
    if (s == 1) {
        if (modulus && !modulus->empty())
            throw Error("prime field takes no modulus");
        return f;
    }
    if (modulus) {
        auto& m = *modulus;
        if (m.size() != s + 1) throw Error("modulus must have degree s");
        for (uint32_t c : m)
            if (c >= p) throw Error("modulus coefficient out of range");
        if (m.back() != 1) throw Error("modulus must be monic");
        if (!fp_irreducible(m, p)) throw Error("modulus is reducible over F_p");
        f.modulus_ = m;
    } else {
        f.modulus_ = smallest_irreducible(p, s, q);
    }
    return f;
}

void Field::check_element(uint32_t x) const {
    if (!valid_element(x)) throw Error("element " + std::to_string(x) + " out of range for q=" + std::to_string(q_));
}

std::vector<uint32_t> Field::decode(uint32_t x) const {
    check_element(x);
    std::vector<uint32_t> d(s_);
    for (uint32_t i = 0; i < s_; ++i) {
        d[i] = x % p_;
        x /= p_;
    }
    return d;
}

uint32_t Field::encode(const std::vector<uint32_t>& digits) const {
    if (digits.size() != s_) throw Error("digit list must have length s");
    uint32_t x = 0;
    for (uint32_t i = s_; i-- > 0;) {
        if (digits[i] >= p_) throw Error("digit out of range");
        x = x * p_ + digits[i];
    }
    return x;
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    check_element(a);
    check_element(b);
    if (s_ == 1) return (a + b) % p_;
    uint32_t res = 0, place = 1;
    for (uint32_t i = 0; i < s_; ++i) {
        uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        res += ((da + db) % p_) * place;
        place *= p_;
    }
    return res;
}

uint32_t Field::neg(uint32_t a) const {
    check_element(a);
    if (s_ == 1) return (p_ - a) % p_;
    uint32_t res = 0, place = 1;
    for (uint32_t i = 0; i < s_; ++i) {
        uint32_t da = a % p_;
        a /= p_;
        res += ((p_ - da) % p_) * place;
        place *= p_;
    }
    return res;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    check_element(a);
    check_element(b);
    if (s_ == 1) return (a * b) % p_;
    // polynomial-basis product, reduced by the modulus
    std::vector<uint32_t> da = decode(a), db = decode(b);
    std::vector<uint32_t> prod(2 * s_ - 1, 0);
    for (uint32_t i = 0; i < s_; ++i) {
        if (da[i] == 0) continue;
        for (uint32_t j = 0; j < s_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    // reduce by monic modulus
    for (size_t d = prod.size(); d-- > s_;) {
        uint32_t lead = prod[d];
        if (lead == 0) continue;
        prod[d] = 0;
        size_t shift = d - s_;
        for (uint32_t i = 0; i < s_; ++i)
            prod[shift + i] = (prod[shift + i] + p_ - (lead * modulus_[i]) % p_) % p_;
    }
    uint32_t res = 0;
    for (uint32_t i = s_; i-- > 0;) res = res * p_ + prod[i];
    return res;
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    check_element(a);
    uint32_t res = 1, base = a;
    while (e) {
        if (e & 1) res = mul(res, base);
        base = mul(base, base);
        e >>= 1;
    }
    return res;
}

uint32_t Field::inv(uint32_t a) const {
    check_element(a);
    if (a == 0) throw Error("division by zero in F_q");
    return pow(a, q_ - 2);
}

} // namespace cycemb
