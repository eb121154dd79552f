#ifndef CYCEMB_POLY_HPP
#define CYCEMB_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "cycemb/field.hpp"

namespace cycemb {

/// Univariate polynomial over F_q. Coefficients ascending, normal form has
/// no trailing zeros; the zero polynomial is the empty list. The field is
/// passed to the arithmetic functions rather than stored per value.
class Poly {
  public:
    Poly() = default;

    /// Validates coefficients against the field and strips trailing zeros.
    static Poly make(const Field& f, std::vector<uint32_t> coeffs);

    /// X^d
    static Poly monomial(uint32_t degree) {
        Poly r;
        r.c_.assign(degree + 1, 0);
        r.c_.back() = 1;
        return r;
    }

    static Poly one() { return monomial(0); }

    bool is_zero() const { return c_.empty(); }
    /// degree of the zero polynomial is -1
    int64_t degree() const { return static_cast<int64_t>(c_.size()) - 1; }
    const std::vector<uint32_t>& coeffs() const { return c_; }
    uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return leading() == 1; }

    bool operator==(const Poly& other) const = default;

  private:
    std::vector<uint32_t> c_;
    friend Poly poly_from_raw(std::vector<uint32_t> c);
};

/// Normalizes a raw ascending coefficient list without field validation.
Poly poly_from_raw(std::vector<uint32_t> c);

Poly poly_add(const Field& f, const Poly& a, const Poly& b);
Poly poly_sub(const Field& f, const Poly& a, const Poly& b);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
Poly poly_scale(const Field& f, const Poly& a, uint32_t c);

/// (quotient, remainder) with a = q*b + r, deg r < deg b. Throws on b = 0.
std::pair<Poly, Poly> poly_divrem(const Field& f, const Poly& a, const Poly& b);

/// Formal derivative; coefficients multiplied by their degree mod p.
Poly poly_derivative(const Field& f, const Poly& a);

/// Monic gcd via Euclid. Throws when both inputs are zero.
Poly poly_gcd(const Field& f, Poly a, Poly b);

Poly poly_make_monic(const Field& f, const Poly& a);

/// base^e mod m by square-and-multiply. m must be nonconstant.
Poly poly_powmod(const Field& f, const Poly& base, uint64_t e, const Poly& m);

uint32_t poly_eval(const Field& f, const Poly& a, uint32_t x);

/// Complete factorization into monic irreducibles, sorted by
/// (degree, coefficient encoding). Deterministic: the equal-degree split is
/// driven by a fixed-seed generator.
struct Factorization {
    uint32_t unit = 1;
    std::vector<std::pair<Poly, uint32_t>> factors; // (monic irreducible, multiplicity)
};

Factorization poly_factor(const Field& f, const Poly& a);

/// Least e >= 1 with X^e == 1 (mod g). Requires g squarefree, g(0) != 0,
/// deg g >= 1. Works per irreducible factor: the local order divides
/// q^d - 1, which is factored into primes and stripped greedily; the result
/// is the lcm of the local orders.
uint64_t order_of_x(const Field& f, const Poly& g);

/// Raised when an integer factorization or order computation leaves the
/// 64-bit budget.
class BudgetError : public Error {
  public:
    using Error::Error;
};

} // namespace cycemb

#endif
