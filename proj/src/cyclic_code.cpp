#include "cycemb/cyclic_code.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cycemb {

CyclicCode CyclicCode::make(const Field& f, uint64_t nprime, const Poly& g) {
    if (g.degree() < 1) throw Error("cyclic: generator polynomial must be nonconstant");
    if (!g.is_monic()) throw Error("cyclic: generator polynomial must be monic");
    if (g.coeff(0) == 0) throw Error("cyclic: generator polynomial must satisfy g(0) != 0");
    for (uint32_t c : g.coeffs()) f.check_element(c);
    if (nprime % f.p() == 0)
        throw Error("cyclic: length " + std::to_string(nprime) + " shares the characteristic " +
                    std::to_string(f.p()));
    if (nprime <= static_cast<uint64_t>(g.degree()))
        throw Error("cyclic: length must exceed deg g");
    if (poly_powmod(f, Poly::monomial(1), nprime, g) != Poly::one())
        throw Error("cyclic: g does not divide X^n' - 1");
    return CyclicCode(f, nprime, g, nprime - g.degree());
}

std::vector<uint32_t> CyclicCode::row(uint64_t i) const {
    if (i >= kprime_) throw Error("cyclic: row index out of range");
    std::vector<uint32_t> r(nprime_, 0);
    for (size_t j = 0; j < g_.coeffs().size(); ++j) r[i + j] = g_.coeff(j);
    return r;
}

bool CyclicCode::contains(const std::vector<uint32_t>& word) const {
    if (word.size() != nprime_) throw Error("cyclic: word length mismatch");
    return poly_divrem(field_, Poly::make(field_, word), g_).second.is_zero();
}

namespace {

// A row of the elimination basis, dense only over its support: `v` holds the
// entries at column indices start .. start+|v|-1 (L-index space), v.front()
// nonzero.
struct Window {
    size_t start = 0;
    std::vector<uint32_t> v;
};

class Eliminator {
  public:
    Eliminator(const Field& f, size_t ncols) : f_(f), pivot_at_(ncols, -1) {}

    size_t rank() const { return rows_.size(); }

    std::vector<Window> take_rows() { return std::move(rows_); }

    // Reduces w against the basis; inserts it (made monic) when independent.
    bool insert(Window w) {
        while (true) {
            size_t z = 0;
            while (z < w.v.size() && w.v[z] == 0) ++z;
            if (z == w.v.size()) return false;
            if (z > 0) {
                w.v.erase(w.v.begin(), w.v.begin() + z);
                w.start += z;
            }
            int64_t idx = pivot_at_[w.start];
            if (idx < 0) {
                if (w.v[0] != 1) {
                    uint32_t inv = f_.inv(w.v[0]);
                    for (auto& x : w.v) x = f_.mul(x, inv);
                }
                pivot_at_[w.start] = static_cast<int64_t>(rows_.size());
                rows_.push_back(std::move(w));
                return true;
            }
            const Window& b = rows_[static_cast<size_t>(idx)];
            if (w.v.size() < b.v.size()) w.v.resize(b.v.size(), 0);
            if (f_.q() == 2) {
                for (size_t i = 0; i < b.v.size(); ++i) w.v[i] ^= b.v[i];
            } else {
                uint32_t factor = w.v[0];
                for (size_t i = 0; i < b.v.size(); ++i)
                    w.v[i] = f_.sub(w.v[i], f_.mul(factor, b.v[i]));
            }
        }
    }

  private:
    const Field& f_;
    std::vector<int64_t> pivot_at_;
    std::vector<Window> rows_;
};

// Shift row i restricted to the 0-based sorted columns `cols`, as a window.
Window restrict_row(const Poly& g, uint64_t i, const std::vector<uint64_t>& cols) {
    Window w;
    const uint64_t lo_col = i;
    const uint64_t hi_col = i + static_cast<uint64_t>(g.degree());
    auto lo = std::lower_bound(cols.begin(), cols.end(), lo_col);
    auto hi = std::upper_bound(cols.begin(), cols.end(), hi_col);
    if (lo == hi) return w;
    w.start = static_cast<size_t>(lo - cols.begin());
    w.v.resize(static_cast<size_t>(hi - lo));
    for (size_t j = 0; j < w.v.size(); ++j)
        w.v[j] = g.coeff(static_cast<size_t>(cols[w.start + j] - i));
    return w;
}

std::vector<uint64_t> checked_zero_based(const CyclicCode& c, const CoordSet& L) {
    if (L.bound != c.length()) throw Error("restricted_rank: coordinate bound mismatch");
    if (L.size() > kRestrictedRankGuard)
        throw Error("restricted_rank: working-set guard |L| <= 2^16 exceeded");
    std::vector<uint64_t> cols(L.coords);
    for (auto& x : cols) --x;
    return cols;
}

template <typename RowIdAt>
uint64_t rank_serial_impl(const CyclicCode& c, const std::vector<uint64_t>& cols, uint64_t nrows,
                          RowIdAt row_id) {
    Eliminator elim(c.field(), cols.size());
    const uint64_t max_rank = std::min<uint64_t>(cols.size(), nrows);
    for (uint64_t r = 0; r < nrows; ++r) {
        elim.insert(restrict_row(c.gen_poly(), row_id(r), cols));
        if (elim.rank() == max_rank) break;
    }
    return elim.rank();
}

template <typename RowIdAt>
uint64_t rank_parallel_impl(const CyclicCode& c, const std::vector<uint64_t>& cols, uint64_t nrows,
                            RowIdAt row_id) {
#ifdef _OPENMP
    const int threads = omp_get_max_threads();
    if (threads > 1 && nrows >= 256) {
        std::vector<std::vector<Window>> locals(static_cast<size_t>(threads));
#pragma omp parallel num_threads(threads)
        {
            const int t = omp_get_thread_num();
            const uint64_t chunk = (nrows + threads - 1) / threads;
            const uint64_t begin = chunk * static_cast<uint64_t>(t);
            const uint64_t end = std::min(nrows, begin + chunk);
            Eliminator local(c.field(), cols.size());
            for (uint64_t r = begin; r < end; ++r)
                local.insert(restrict_row(c.gen_poly(), row_id(r), cols));
            locals[static_cast<size_t>(t)] = local.take_rows();
        }
        Eliminator merged(c.field(), cols.size());
        for (auto& part : locals)
            for (auto& w : part) merged.insert(std::move(w));
        return merged.rank();
    }
#endif
    return rank_serial_impl(c, cols, nrows, row_id);
}

} // namespace

uint64_t restricted_rank_serial(const CyclicCode& c, const CoordSet& L) {
    auto cols = checked_zero_based(c, L);
    if (cols.empty()) return 0;
    return rank_serial_impl(c, cols, c.dimension(), [](uint64_t r) { return r; });
}

uint64_t restricted_rank_parallel(const CyclicCode& c, const CoordSet& L) {
    auto cols = checked_zero_based(c, L);
    if (cols.empty()) return 0;
    return rank_parallel_impl(c, cols, c.dimension(), [](uint64_t r) { return r; });
}

uint64_t restricted_rank(const CyclicCode& c, const CoordSet& L) {
    return restricted_rank_parallel(c, L);
}

uint64_t restricted_rank_rows(const CyclicCode& c, std::span<const uint64_t> row_ids,
                              const CoordSet& L) {
    auto cols = checked_zero_based(c, L);
    if (cols.empty() || row_ids.empty()) return 0;
    for (uint64_t id : row_ids)
        if (id >= c.dimension()) throw Error("restricted_rank_rows: row id out of range");
    return rank_parallel_impl(c, cols, row_ids.size(),
                              [&](uint64_t r) { return row_ids[static_cast<size_t>(r)]; });
}

} // namespace cycemb
