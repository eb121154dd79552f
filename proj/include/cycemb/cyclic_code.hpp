#ifndef CYCEMB_CYCLIC_CODE_HPP
#define CYCEMB_CYCLIC_CODE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "cycemb/linear_code.hpp"
#include "cycemb/poly.hpp"

namespace cycemb {

/// Cyclic code C(n', g) held as the (length, generator polynomial) pair.
/// Generator-matrix rows are produced lazily; nothing of size k' x n' is
/// ever stored.
class CyclicCode {
  public:
    /// Validates every invariant: g monic, g(0) != 0, g | X^{n'} - 1,
    /// n' not divisible by p, and k' = n' - deg g >= 1.
    static CyclicCode make(const Field& f, uint64_t nprime, const Poly& g);

    const Field& field() const { return field_; }
    uint64_t length() const { return nprime_; }
    uint64_t dimension() const { return kprime_; }
    const Poly& gen_poly() const { return g_; }

    /// Row i of the canonical shift generator matrix: g's coefficients at
    /// positions i .. i+deg g (0-based), zeros elsewhere. 0 <= i < k'.
    std::vector<uint32_t> row(uint64_t i) const;

    /// Membership: word(X) mod g(X) = 0.
    bool contains(const std::vector<uint32_t>& word) const;

  private:
    CyclicCode(Field f, uint64_t nprime, Poly g, uint64_t kprime)
        : field_(std::move(f)), nprime_(nprime), g_(std::move(g)), kprime_(kprime) {}
    Field field_;
    uint64_t nprime_;
    Poly g_;
    uint64_t kprime_;
};

inline constexpr uint64_t kRestrictedRankGuard = uint64_t(1) << 16;

/// Exact rank of the k' x |L| matrix whose rows are the shift rows of c
/// restricted to the columns in L. Rows are streamed through an incremental
/// elimination basis; at most |L| pivots are ever held and the scan
/// early-exits once they saturate. Guarded by |L| <= 2^16.
uint64_t restricted_rank(const CyclicCode& c, const CoordSet& L);

/// Serial reference implementation of restricted_rank.
uint64_t restricted_rank_serial(const CyclicCode& c, const CoordSet& L);

/// OpenMP kernel: shards the row range into per-thread elimination bases and
/// merges them. Must return exactly the serial result.
uint64_t restricted_rank_parallel(const CyclicCode& c, const CoordSet& L);

/// Same rank, restricted to an explicit subset of shift-row indices. Used by
/// the structural verifier.
uint64_t restricted_rank_rows(const CyclicCode& c, std::span<const uint64_t> row_ids,
                              const CoordSet& L);

} // namespace cycemb

#endif
