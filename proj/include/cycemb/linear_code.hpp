#ifndef CYCEMB_LINEAR_CODE_HPP
#define CYCEMB_LINEAR_CODE_HPP

#include <cstdint>
#include <vector>

#include "cycemb/field.hpp"

namespace cycemb {

/// Strictly increasing list of 1-based coordinate indices into a vector of
/// length `bound`. May be empty.
struct CoordSet {
    std::vector<uint64_t> coords;
    uint64_t bound = 0;

    static CoordSet make(std::vector<uint64_t> coords, uint64_t bound);
    static CoordSet range(uint64_t first, uint64_t last, uint64_t bound);
    size_t size() const { return coords.size(); }
    bool empty() const { return coords.empty(); }
    bool operator==(const CoordSet&) const = default;
};

/// In-place reduced row-echelon form over F_q; returns the rank. Zero rows
/// are removed. Uses a bit-packed elimination path when q = 2.
size_t rref(const Field& f, std::vector<std::vector<uint32_t>>& rows);

/// A linear block code held as its canonical RREF generator matrix.
class LinearCode {
  public:
    /// Canonicalizes the row space of the given spanning rows. Rejects
    /// ragged input and the zero row space.
    static LinearCode from_rows(const Field& f, std::vector<std::vector<uint32_t>> rows);

    const Field& field() const { return field_; }
    uint64_t length() const { return n_; }
    uint64_t dimension() const { return k_; }
    const std::vector<std::vector<uint32_t>>& generator() const { return rows_; }

    /// Canonical comparison; both sides must share field and length.
    bool row_space_equal(const LinearCode& other) const;

    /// Deletes the coordinates in L from every codeword (Definition-1 style,
    /// realized on the generator rows). Errors when the result collapses to
    /// the zero space or L covers everything.
    LinearCode punctured(const CoordSet& L) const;

    /// Restricts to the subcode vanishing on L, then deletes L. Errors when
    /// the vanishing subcode is zero.
    LinearCode shortened(const CoordSet& L) const;

  private:
    LinearCode(Field f, uint64_t n, uint64_t k, std::vector<std::vector<uint32_t>> rows)
        : field_(std::move(f)), n_(n), k_(k), rows_(std::move(rows)) {}
    Field field_;
    uint64_t n_ = 0;
    uint64_t k_ = 0;
    std::vector<std::vector<uint32_t>> rows_;
};

/// Literal-enumeration shortening used only as a test oracle; iterates all
/// q^k codewords. Guarded by q^k <= 2^20.
LinearCode enumerate_shorten_oracle(const LinearCode& c, const CoordSet& L);

} // namespace cycemb

#endif
