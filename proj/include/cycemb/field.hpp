#ifndef CYCEMB_FIELD_HPP
#define CYCEMB_FIELD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycemb {

/// Raised on any violated precondition or malformed input.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A finite field F_q, q = p^s with p prime. Elements are integers in [0, q)
/// whose base-p digits are the polynomial-basis coordinates, constant digit
/// first. For s > 1 arithmetic is modulo a monic irreducible polynomial of
/// degree s over F_p.
class Field {
  public:
    /// Builds F_{p^s}. When s > 1 and no modulus is given, the
    /// lexicographically smallest monic irreducible of degree s is chosen,
    /// so construction is deterministic for fixed (p, s).
    static Field make(uint32_t p, uint32_t s,
                      std::optional<std::vector<uint32_t>> modulus = std::nullopt);

    uint32_t p() const { return p_; }
    uint32_t s() const { return s_; }
    uint32_t q() const { return q_; }

    /// Ascending F_p coefficients of the modulus (size s+1); empty for s = 1.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t e) const;

    /// Base-p digit vector of length s, constant digit first.
    std::vector<uint32_t> decode(uint32_t x) const;
    uint32_t encode(const std::vector<uint32_t>& digits) const;

    bool valid_element(uint32_t x) const { return x < q_; }
    void check_element(uint32_t x) const;

    bool operator==(const Field& other) const = default;

    /// Placeholder state (p = q = 0); every operation on it throws. Exists so
    /// aggregates holding a Field can be default-constructed before parsing.
    Field() = default;

  private:
    uint32_t p_ = 0;
    uint32_t s_ = 0;
    uint32_t q_ = 0;
    std::vector<uint32_t> modulus_;
};

bool is_prime_u32(uint32_t n);

} // namespace cycemb

#endif
