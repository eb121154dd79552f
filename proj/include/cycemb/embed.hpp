#ifndef CYCEMB_EMBED_HPP
#define CYCEMB_EMBED_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cycemb/linear_code.hpp"
#include "cycemb/poly.hpp"

namespace cycemb {

/// Ordered basis with the leading/trailing zero profile of each row; rows
/// are sorted by trailing-zero count (nondecreasing), ties broken by the
/// integer encoding of the row.
struct BasisProfile {
    std::vector<std::vector<uint32_t>> rows; // v_1 .. v_k
    std::vector<uint32_t> lead_zeros;        // l_j
    std::vector<uint32_t> core_len;          // d_j
    std::vector<uint32_t> trail_zeros;       // r_j
};

enum class StepOp { Shorten, Puncture };

/// One shorten/puncture record. Coordinates are 1-based against the length
/// the code has when the step is applied.
struct Step {
    char stage = '?'; // A..E
    StepOp op = StepOp::Shorten;
    CoordSet coords;
    uint64_t len_before = 0;
    uint64_t len_after = 0;
    uint64_t dim_after = 0;
    std::vector<uint64_t> surviving_rows; // original shift-row indices spanning the result
};

struct EmbeddingCertificate {
    Field field;
    uint64_t n = 0, k = 0;
    uint64_t m = 0;
    uint32_t p = 0;
    std::vector<uint32_t> f; // length m+1
    Poly g;
    uint64_t e = 0;      // order of X mod g
    uint64_t nprime = 0; // cyclic length
    uint64_t kprime = 0; // cyclic dimension
    std::vector<Step> steps;
    BasisProfile basis;
};

/// Raised when n' would exceed the length budget; carries what the caller
/// needs to raise it.
class LengthBudgetError : public Error {
  public:
    LengthBudgetError(uint64_t order, uint64_t deg_g, uint64_t required, const std::string& what)
        : Error(what), order(order), deg_g(deg_g), required(required) {}
    uint64_t order;
    uint64_t deg_g;
    uint64_t required;
};

inline constexpr uint64_t kDefaultLengthBudget = uint64_t(1) << 20;

BasisProfile normalize_basis(const LinearCode& c);

/// f = [1, v1, 0_n, v2, 0_n, ..., v_{k-1}, 0_n, v_k, 1]; length m+1 with
/// m = 2n(k-1) + n + 1.
std::vector<uint32_t> build_f(const BasisProfile& profile, uint64_t n, uint64_t k);

/// g(X) = sum_{i<m} f_i X^{pi} + X^{(m-1)p+1}; monic, g(0) = 1, squarefree.
Poly build_g(const Field& f, const std::vector<uint32_t>& fvec);

/// Least valid multiplier t: t*e >= 2*deg g and p does not divide t.
uint64_t select_length_multiplier(uint64_t e, uint64_t deg_g, uint32_t p);

/// n' = t*e, minimal over the joint conditions (divisibility, coprimality
/// with q, rate >= 1/2). Throws LengthBudgetError past `bound`.
uint64_t find_length(const Field& f, const Poly& g, uint64_t bound);

/// Full certificate: basis normalization, f, g, n', and the stage A-E
/// shorten/puncture records with expected lengths, dims, and surviving rows.
EmbeddingCertificate build_certificate(const LinearCode& c,
                                       uint64_t bound = kDefaultLengthBudget);

} // namespace cycemb

#endif
