#include "cycemb/verify.hpp"

#include <algorithm>
#include <chrono>

namespace cycemb {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

LinearCode apply_step(const Step& st, const LinearCode& cur) {
    if (st.op == StepOp::Shorten) return cur.shortened(st.coords);
    return cur.punctured(st.coords);
}

// Survivor map from current 1-based coordinates to original 0-based columns.
struct SurvivorColumns {
    std::vector<uint64_t> cols; // original 0-based, sorted

    explicit SurvivorColumns(uint64_t n) {
        cols.resize(n);
        for (uint64_t i = 0; i < n; ++i) cols[i] = i;
    }

    CoordSet to_original(const CoordSet& current, uint64_t bound) const {
        std::vector<uint64_t> orig;
        orig.reserve(current.size());
        for (uint64_t c : current.coords) {
            if (c < 1 || c > cols.size()) throw Error("step coordinate out of current bound");
            orig.push_back(cols[c - 1] + 1);
        }
        return CoordSet::make(std::move(orig), bound);
    }

    void remove(const CoordSet& current) {
        std::vector<uint64_t> next;
        next.reserve(cols.size() - current.size());
        size_t j = 0;
        for (size_t i = 0; i < cols.size(); ++i) {
            if (j < current.coords.size() && current.coords[j] == i + 1) {
                ++j;
                continue;
            }
            next.push_back(cols[i]);
        }
        cols = std::move(next);
    }
};

bool row_vanishes_on(const Poly& g, uint64_t row, const CoordSet& original) {
    const uint64_t deg = static_cast<uint64_t>(g.degree());
    for (uint64_t c : original.coords) {
        const uint64_t col = c - 1;
        if (col < row || col > row + deg) continue;
        if (g.coeff(static_cast<size_t>(col - row)) != 0) return false;
    }
    return true;
}

bool is_subset(const std::vector<uint64_t>& sub, const std::vector<uint64_t>& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

// Rows of the shift matrix restricted to a set of original 0-based columns.
std::vector<std::vector<uint32_t>> materialize_restriction(const Poly& g,
                                                           const std::vector<uint64_t>& row_ids,
                                                           const std::vector<uint64_t>& cols) {
    std::vector<std::vector<uint32_t>> rows;
    rows.reserve(row_ids.size());
    const uint64_t deg = static_cast<uint64_t>(g.degree());
    for (uint64_t i : row_ids) {
        std::vector<uint32_t> r(cols.size(), 0);
        for (size_t j = 0; j < cols.size(); ++j)
            if (cols[j] >= i && cols[j] <= i + deg) r[j] = g.coeff(static_cast<size_t>(cols[j] - i));
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace

LinearCode replay(const EmbeddingCertificate& cert, const LinearCode& start) {
    LinearCode cur = start;
    for (const Step& st : cert.steps) cur = apply_step(st, cur);
    return cur;
}

VerifyReport verify_oracle(const LinearCode& c, const EmbeddingCertificate& cert) {
    if (cert.nprime > kOracleGuard || cert.kprime > kOracleGuard)
        throw Error("oracle verification guard n',k' <= 4096 exceeded; use structural mode");
    VerifyReport report;
    report.mode = VerifyMode::Oracle;

    CyclicCode cyclic = CyclicCode::make(cert.field, cert.nprime, cert.g);
    std::vector<std::vector<uint32_t>> all_rows;
    all_rows.reserve(cert.kprime);
    for (uint64_t i = 0; i < cert.kprime; ++i) all_rows.push_back(cyclic.row(i));
    LinearCode cur = LinearCode::from_rows(cert.field, all_rows);

    SurvivorColumns survivors(cert.nprime);
    bool all_ok = cur.length() == cert.nprime && cur.dimension() == cert.kprime;

    for (const Step& st : cert.steps) {
        StepCheck chk;
        chk.stage = st.stage;
        chk.op = st.op;
        auto t0 = Clock::now();
        try {
            if (st.coords.bound != cur.length() || st.len_before != cur.length())
                throw Error("length bookkeeping mismatch");
            LinearCode next = apply_step(st, cur);
            chk.length_ok = next.length() == st.len_after &&
                            st.len_after == st.len_before - st.coords.size();
            chk.dim_ok = next.dimension() == st.dim_after;

            // the certified surviving shift rows, column-restricted through
            // the survivor map, must span exactly the stepped code
            survivors.remove(st.coords);
            auto span_rows = materialize_restriction(cert.g, st.surviving_rows, survivors.cols);
            chk.surviving_rows_ok = st.surviving_rows.size() == st.dim_after;
            if (chk.surviving_rows_ok) {
                LinearCode span = LinearCode::from_rows(cert.field, span_rows);
                chk.surviving_rows_ok = span.dimension() == st.dim_after &&
                                        next.row_space_equal(span);
            }
            cur = std::move(next);
        } catch (const Error& err) {
            chk.note = err.what();
            chk.length_ok = chk.dim_ok = chk.surviving_rows_ok = false;
            report.steps.push_back(chk);
            report.note = err.what();
            report.final_equal = false;
            return report;
        }
        chk.elapsed_s = seconds_since(t0);
        all_ok = all_ok && chk.ok();
        report.steps.push_back(chk);
    }

    // stage A, iterated per range: must land on the same code as the merged
    // shorten before the remaining steps are applied
    try {
        auto it = std::find_if(cert.steps.begin(), cert.steps.end(),
                               [](const Step& s) { return s.stage == 'A'; });
        if (it != cert.steps.end()) {
            LinearCode merged = apply_step(*it, LinearCode::from_rows(cert.field, all_rows));
            LinearCode iterated = LinearCode::from_rows(cert.field, all_rows);
            SurvivorColumns map(cert.nprime);
            for (uint64_t j = 1; j <= cert.m - 1; ++j) {
                // original range [(j-1)p+2, jp], remapped to current indices
                std::vector<uint64_t> cur_coords;
                for (uint64_t orig = (j - 1) * cert.p + 2; orig <= j * cert.p; ++orig) {
                    auto pos = std::lower_bound(map.cols.begin(), map.cols.end(), orig - 1);
                    cur_coords.push_back(static_cast<uint64_t>(pos - map.cols.begin()) + 1);
                }
                CoordSet cs = CoordSet::make(std::move(cur_coords), iterated.length());
                iterated = iterated.shortened(cs);
                map.remove(cs);
            }
            if (!merged.row_space_equal(iterated)) {
                all_ok = false;
                report.note = "stage A union and iterated shortenings disagree";
            }
        }
    } catch (const Error& err) {
        all_ok = false;
        report.note = err.what();
    }

    report.final_equal = all_ok && cur.field() == c.field() && cur.length() == c.length() &&
                         cur.row_space_equal(c);
    return report;
}

VerifyReport verify_structural(const LinearCode& c, const EmbeddingCertificate& cert) {
    VerifyReport report;
    report.mode = VerifyMode::Structural;

    CyclicCode cyclic = CyclicCode::make(cert.field, cert.nprime, cert.g);
    SurvivorColumns survivors(cert.nprime);
    std::vector<uint64_t> surviving_rows(cert.kprime);
    for (uint64_t i = 0; i < cert.kprime; ++i) surviving_rows[i] = i;
    uint64_t prev_dim = cert.kprime;
    bool all_ok = true;

    for (const Step& st : cert.steps) {
        StepCheck chk;
        chk.stage = st.stage;
        chk.op = st.op;
        auto t0 = Clock::now();
        try {
            chk.length_ok = st.len_before == survivors.cols.size() &&
                            st.coords.bound == st.len_before &&
                            st.len_after == st.len_before - st.coords.size();
            CoordSet orig = survivors.to_original(st.coords, cert.nprime);
            chk.surviving_rows_ok = st.surviving_rows.size() == st.dim_after &&
                                    std::is_sorted(st.surviving_rows.begin(),
                                                   st.surviving_rows.end()) &&
                                    is_subset(st.surviving_rows, surviving_rows);
            if (st.op == StepOp::Shorten) {
                // dim of the vanishing subcode: k_prev - rank(G|_L)
                uint64_t rank = restricted_rank_rows(cyclic, surviving_rows, orig);
                chk.dim_ok = st.dim_after == prev_dim - rank;
                if (chk.surviving_rows_ok)
                    for (uint64_t row : st.surviving_rows)
                        if (!row_vanishes_on(cert.g, row, orig)) {
                            chk.surviving_rows_ok = false;
                            break;
                        }
            } else {
                // puncturing must not lose dimension: the surviving rows stay
                // independent on the kept columns
                survivors.remove(st.coords);
                CoordSet kept = CoordSet::make(
                    [&] {
                        std::vector<uint64_t> one_based(survivors.cols);
                        for (auto& x : one_based) ++x;
                        return one_based;
                    }(),
                    cert.nprime);
                uint64_t rank = restricted_rank_rows(cyclic, st.surviving_rows, kept);
                chk.dim_ok = st.dim_after == prev_dim && rank == st.dim_after;
            }
            if (st.op == StepOp::Shorten) survivors.remove(st.coords);
        } catch (const Error& err) {
            chk.note = err.what();
            chk.length_ok = chk.dim_ok = chk.surviving_rows_ok = false;
            report.steps.push_back(chk);
            report.note = err.what();
            report.final_equal = false;
            return report;
        }
        chk.elapsed_s = seconds_since(t0);
        all_ok = all_ok && chk.ok();
        report.steps.push_back(chk);
        surviving_rows = st.surviving_rows;
        prev_dim = st.dim_after;
    }

    try {
        if (survivors.cols.size() != c.length() || surviving_rows.size() != c.dimension()) {
            all_ok = false;
        } else {
            auto final_rows = materialize_restriction(cert.g, surviving_rows, survivors.cols);
            LinearCode final_code = LinearCode::from_rows(cert.field, final_rows);
            all_ok = all_ok && final_code.row_space_equal(c);
        }
    } catch (const Error& err) {
        all_ok = false;
        report.note = err.what();
    }
    report.final_equal = all_ok;
    return report;
}

} // namespace cycemb
