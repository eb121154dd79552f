#include "cycemb/linear_code.hpp"

#include <algorithm>
#include <cstring>

namespace cycemb {

CoordSet CoordSet::make(std::vector<uint64_t> coords, uint64_t bound) {
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] < 1 || coords[i] > bound)
            throw Error("coordinate " + std::to_string(coords[i]) + " out of bound " +
                        std::to_string(bound));
        if (i > 0 && coords[i] <= coords[i - 1])
            throw Error("coordinate set must be strictly increasing");
    }
    return CoordSet{std::move(coords), bound};
}

CoordSet CoordSet::range(uint64_t first, uint64_t last, uint64_t bound) {
    std::vector<uint64_t> c;
    for (uint64_t i = first; i <= last; ++i) c.push_back(i);
    return make(std::move(c), bound);
}

namespace {

size_t rref_q2(std::vector<std::vector<uint32_t>>& rows) {
    const size_t n = rows[0].size();
    const size_t words = (n + 63) / 64;
    std::vector<std::vector<uint64_t>> packed(rows.size(), std::vector<uint64_t>(words, 0));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < n; ++c)
            if (rows[r][c]) packed[r][c / 64] |= uint64_t(1) << (c % 64);

    size_t rank = 0;
    for (size_t col = 0; col < n && rank < rows.size(); ++col) {
        const size_t w = col / 64;
        const uint64_t bit = uint64_t(1) << (col % 64);
        size_t pivot = rank;
        while (pivot < packed.size() && !(packed[pivot][w] & bit)) ++pivot;
        if (pivot == packed.size()) continue;
        std::swap(packed[rank], packed[pivot]);
        for (size_t r = 0; r < packed.size(); ++r) {
            if (r == rank || !(packed[r][w] & bit)) continue;
            uint64_t* dst = packed[r].data();
            const uint64_t* src = packed[rank].data();
            for (size_t i = w; i < words; ++i) dst[i] ^= src[i];
        }
        ++rank;
    }
    rows.resize(rank);
    for (size_t r = 0; r < rank; ++r)
        for (size_t c = 0; c < n; ++c)
            rows[r][c] = (packed[r][c / 64] >> (c % 64)) & 1;
    return rank;
}

size_t rref_general(const Field& f, std::vector<std::vector<uint32_t>>& rows) {
    const size_t n = rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        uint32_t inv = f.inv(rows[rank][col]);
        if (inv != 1)
            for (size_t c = col; c < n; ++c) rows[rank][c] = f.mul(rows[rank][c], inv);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            uint32_t factor = rows[r][col];
            if (factor == 0) continue;
            for (size_t c = col; c < n; ++c)
                rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[rank][c]));
        }
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

std::vector<uint32_t> delete_columns(const std::vector<uint32_t>& row,
                                     const std::vector<uint64_t>& coords) {
    std::vector<uint32_t> out;
    out.reserve(row.size() - coords.size());
    size_t j = 0;
    for (size_t c = 0; c < row.size(); ++c) {
        if (j < coords.size() && coords[j] == c + 1) {
            ++j;
            continue;
        }
        out.push_back(row[c]);
    }
    return out;
}

} // namespace

size_t rref(const Field& f, std::vector<std::vector<uint32_t>>& rows) {
    if (rows.empty()) return 0;
    if (f.q() == 2) return rref_q2(rows);
    return rref_general(f, rows);
}

LinearCode LinearCode::from_rows(const Field& f, std::vector<std::vector<uint32_t>> rows) {
    if (rows.empty()) throw Error("a code needs at least one spanning row");
    const size_t n = rows[0].size();
    if (n == 0) throw Error("code length must be >= 1");
    for (auto& r : rows) {
        if (r.size() != n) throw Error("ragged generator rows");
        for (uint32_t x : r) f.check_element(x);
    }
    size_t k = rref(f, rows);
    if (k == 0) throw Error("zero row space");
    return LinearCode(f, n, k, std::move(rows));
}

bool LinearCode::row_space_equal(const LinearCode& other) const {
    if (field_ != other.field_) throw Error("row_space_equal: field mismatch");
    if (n_ != other.n_) throw Error("row_space_equal: length mismatch");
    return rows_ == other.rows_;
}

LinearCode LinearCode::punctured(const CoordSet& L) const {
    if (L.bound != n_) throw Error("puncture: coordinate bound mismatch");
    if (L.size() >= n_) throw Error("puncture: cannot delete every coordinate");
    std::vector<std::vector<uint32_t>> rows;
    rows.reserve(k_);
    for (auto& r : rows_) rows.push_back(delete_columns(r, L.coords));
    size_t k = rref(field_, rows);
    if (k == 0) throw Error("puncture: row space collapsed to zero");
    return LinearCode(field_, n_ - L.size(), k, std::move(rows));
}

LinearCode LinearCode::shortened(const CoordSet& L) const {
    if (L.bound != n_) throw Error("shorten: coordinate bound mismatch");
    if (L.empty()) return *this;
    // messages x with x * (G restricted to columns L) = 0
    std::vector<std::vector<uint32_t>> at(k_, std::vector<uint32_t>(L.size()));
    for (size_t r = 0; r < k_; ++r)
        for (size_t j = 0; j < L.size(); ++j) at[r][j] = rows_[r][L.coords[j] - 1];
    // nullspace of the k x |L| matrix acting on the left: row-reduce and read
    // free rows off the transposed elimination
    // transpose so we solve A^T y = 0 with y the message vector
    std::vector<std::vector<uint32_t>> m(L.size(), std::vector<uint32_t>(k_));
    for (size_t r = 0; r < k_; ++r)
        for (size_t j = 0; j < L.size(); ++j) m[j][r] = at[r][j];
    size_t rank = rref(field_, m);
    // pivot columns of m
    std::vector<size_t> pivots;
    std::vector<bool> is_pivot(k_, false);
    {
        size_t col = 0;
        for (size_t r = 0; r < rank; ++r) {
            while (col < k_ && m[r][col] == 0) ++col;
            pivots.push_back(col);
            is_pivot[col] = true;
        }
    }
    if (rank == k_) throw Error("shorten: vanishing subcode is zero");
    // one nullspace vector per free column
    std::vector<std::vector<uint32_t>> rows;
    for (size_t free = 0; free < k_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint32_t> x(k_, 0);
        x[free] = 1;
        for (size_t r = 0; r < rank; ++r) x[pivots[r]] = field_.neg(m[r][free]);
        // codeword x * G with columns L removed
        std::vector<uint32_t> word(n_, 0);
        for (size_t r = 0; r < k_; ++r) {
            if (x[r] == 0) continue;
            for (size_t c = 0; c < n_; ++c)
                word[c] = field_.add(word[c], field_.mul(x[r], rows_[r][c]));
        }
        rows.push_back(delete_columns(word, L.coords));
    }
    return from_rows(field_, std::move(rows));
}

LinearCode enumerate_shorten_oracle(const LinearCode& c, const CoordSet& L) {
    if (L.bound != c.length()) throw Error("oracle: coordinate bound mismatch");
    const Field& f = c.field();
    double total = 1;
    for (uint64_t i = 0; i < c.dimension(); ++i) total *= f.q();
    if (total > double(1 << 20)) throw Error("oracle: enumeration guard q^k <= 2^20 exceeded");

    std::vector<std::vector<uint32_t>> kept;
    std::vector<uint32_t> msg(c.dimension(), 0);
    while (true) {
        std::vector<uint32_t> word(c.length(), 0);
        for (size_t r = 0; r < c.dimension(); ++r) {
            if (msg[r] == 0) continue;
            for (size_t col = 0; col < c.length(); ++col)
                word[col] = f.add(word[col], f.mul(msg[r], c.generator()[r][col]));
        }
        bool vanishes = true;
        for (uint64_t coord : L.coords)
            if (word[coord - 1] != 0) {
                vanishes = false;
                break;
            }
        bool nonzero = std::any_of(word.begin(), word.end(), [](uint32_t x) { return x != 0; });
        if (vanishes && nonzero) {
            std::vector<uint32_t> out;
            size_t j = 0;
            for (size_t col = 0; col < word.size(); ++col) {
                if (j < L.coords.size() && L.coords[j] == col + 1) {
                    ++j;
                    continue;
                }
                out.push_back(word[col]);
            }
            kept.push_back(std::move(out));
        }
        // next message
        size_t i = 0;
        while (i < msg.size() && ++msg[i] == f.q()) msg[i++] = 0;
        if (i == msg.size()) break;
    }
    if (kept.empty()) throw Error("oracle: vanishing subcode is zero");
    return LinearCode::from_rows(f, std::move(kept));
}

} // namespace cycemb
