// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is self-contained and uses only public API plus
// the shared test oracles.
#include <cstdint>
#include <iostream>
#include <random>
#include <vector>

#include "cycemb/io.hpp"
#include "cycemb/verify.hpp"
#include "test_util.hpp"

using namespace cycemb;
using namespace cycemb::testutil;

namespace {

using Rows = std::vector<std::vector<uint32_t>>;

// certificates produced while running criteria 1-2, re-checked by criterion 8
std::vector<EmbeddingCertificate> g_corpus;

// all binary codes of length n in RREF, enumerated by pivot columns
std::vector<LinearCode> all_f2_codes(uint64_t n, uint64_t max_k) {
    Field f2 = Field::make(2, 1);
    std::vector<LinearCode> out;
    for (uint64_t k = 1; k <= std::min(n, max_k); ++k) {
        // iterate over k-subsets of {0..n-1} via counters
        std::vector<uint64_t> idx(k);
        for (uint64_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            // free positions: non-pivot columns to the right of each pivot
            std::vector<std::pair<uint64_t, uint64_t>> free_pos; // (row, col)
            for (uint64_t r = 0; r < k; ++r)
                for (uint64_t c = idx[r] + 1; c < n; ++c) {
                    bool is_pivot = false;
                    for (uint64_t r2 = 0; r2 < k; ++r2)
                        if (idx[r2] == c) is_pivot = true;
                    if (!is_pivot) free_pos.push_back({r, c});
                }
            for (uint64_t mask = 0; mask < (uint64_t(1) << free_pos.size()); ++mask) {
                Rows rows(k, std::vector<uint32_t>(n, 0));
                for (uint64_t r = 0; r < k; ++r) rows[r][idx[r]] = 1;
                for (size_t b = 0; b < free_pos.size(); ++b)
                    if (mask >> b & 1) rows[free_pos[b].first][free_pos[b].second] = 1;
                out.push_back(LinearCode::from_rows(f2, rows));
            }
            // next k-subset
            uint64_t r = k;
            while (r > 0 && idx[r - 1] == n - k + (r - 1)) --r;
            if (r == 0) break;
            ++idx[r - 1];
            for (uint64_t j = r; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

bool verification_rejects(const LinearCode& c, const EmbeddingCertificate& cert) {
    bool oracle_rejects;
    try {
        oracle_rejects = !verify_oracle(c, cert).final_equal;
    } catch (const Error&) {
        oracle_rejects = true;
    }
    bool structural_rejects;
    try {
        structural_rejects = !verify_structural(c, cert).final_equal;
    } catch (const Error&) {
        structural_rejects = true;
    }
    return oracle_rejects && structural_rejects;
}

bool criterion1() {
    Field f2 = Field::make(2, 1);
    LinearCode rep = LinearCode::from_rows(f2, Rows{{1, 1}});
    EmbeddingCertificate cert = build_certificate(rep);
    g_corpus.push_back(cert);
    bool ok = cert.m == 3 && cert.f == std::vector<uint32_t>{1, 1, 1, 1} &&
              cert.g == Poly::make(f2, {1, 0, 1, 0, 1, 1}) && cert.e == 15 &&
              cert.nprime == 15 && cert.kprime == 10 && cert.steps.size() == 4;
    if (!ok) return false;
    const Step& a = cert.steps[0];
    const Step& b = cert.steps[1];
    const Step& c = cert.steps[2];
    const Step& e = cert.steps[3];
    ok = a.op == StepOp::Shorten && a.coords.coords == std::vector<uint64_t>{2, 4} &&
         b.op == StepOp::Shorten &&
         b.coords.coords == std::vector<uint64_t>{5, 6, 7, 8, 9, 10, 11, 12, 13} &&
         c.op == StepOp::Puncture && c.coords.coords == std::vector<uint64_t>{4} &&
         e.op == StepOp::Puncture && e.coords.coords == std::vector<uint64_t>{1};
    if (!ok) return false;
    VerifyReport rpt = verify_oracle(rep, cert);
    return rpt.final_equal;
}

bool criterion2() {
    // exhaustive over F_2, n <= 2
    for (uint64_t n = 1; n <= 2; ++n)
        for (const LinearCode& c : all_f2_codes(n, n)) {
            EmbeddingCertificate cert = build_certificate(c);
            g_corpus.push_back(cert);
            VerifyReport rpt = cert.nprime <= kOracleGuard ? verify_oracle(c, cert)
                                                           : verify_structural(c, cert);
            if (!rpt.final_equal) return false;
        }
    // >= 20 random codes over F_2/F_3 with n <= 3, k <= 2 and n' <= 2^16
    std::mt19937_64 rng(101);
    int done = 0, attempts = 0;
    while (done < 20) {
        if (++attempts > 4000) return false;
        const Field f = attempts % 2 ? Field::make(2, 1) : Field::make(3, 1);
        uint64_t n = 1 + rng() % 3;
        uint64_t k = 1 + rng() % std::min<uint64_t>(n, 2);
        LinearCode c = random_code(f, n, k, rng);
        EmbeddingCertificate cert;
        try {
            cert = build_certificate(c, uint64_t(1) << 16);
        } catch (const Error&) {
            continue; // n' would exceed 2^16
        }
        g_corpus.push_back(cert);
        VerifyReport rpt = cert.nprime <= kOracleGuard ? verify_oracle(c, cert)
                                                       : verify_structural(c, cert);
        if (!rpt.final_equal) return false;
        ++done;
    }
    return true;
}

bool criterion3() {
    std::mt19937_64 rng(103);
    int done = 0;
    for (const Field& f :
         {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2)}) {
        for (int i = 0; i < 70; ++i) {
            uint64_t n = 1 + rng() % 4;
            uint64_t k = 1 + rng() % std::min<uint64_t>(n, 3);
            LinearCode c = random_code(f, n, k, rng);
            uint64_t m = 2 * n * (k - 1) + n + 1;
            std::vector<uint32_t> fv = build_f(normalize_basis(c), n, k);
            if (fv.size() != m + 1 || fv.front() != 1 || fv.back() != 1) return false;
            Poly g = build_g(f, fv);
            if (g.degree() != static_cast<int64_t>((m - 1) * f.p() + 1)) return false;
            Poly d = poly_derivative(f, g);
            if (d != Poly::monomial((m - 1) * f.p())) return false;
            if (poly_gcd(f, g, d) != Poly::one()) return false;
            ++done;
        }
    }
    return done >= 200;
}

bool criterion4() {
    std::mt19937_64 rng(107);
    int done = 0;
    for (const Field& f : {Field::make(2, 1), Field::make(3, 1)}) {
        int per_field = 0;
        while (per_field < 100) {
            Poly g = random_squarefree(f, 12, rng);
            uint64_t e;
            try {
                e = order_of_x(f, g);
            } catch (const BudgetError&) {
                continue;
            }
            if (e > (uint64_t(1) << 16)) continue;
            if (brute_force_order(f, g, e) != e) return false;
            ++per_field;
            ++done;
        }
    }
    return done >= 200;
}

bool criterion5() {
    Field f2 = Field::make(2, 1);
    // exhaustive: every F_2 code with n <= 6, k <= 4, every |L| <= 2
    for (uint64_t n = 1; n <= 6; ++n)
        for (const LinearCode& c : all_f2_codes(n, 4)) {
            for (uint64_t a = 1; a <= n; ++a)
                for (uint64_t b = a; b <= n; ++b) {
                    CoordSet L = a == b ? CoordSet::make({a}, n)
                                        : CoordSet::make({a, b}, n);
                    if (L.size() >= n) continue;
                    bool threw1 = false, threw2 = false;
                    LinearCode s1 = c, s2 = c;
                    try {
                        s1 = c.shortened(L);
                    } catch (const Error&) {
                        threw1 = true;
                    }
                    try {
                        s2 = enumerate_shorten_oracle(c, L);
                    } catch (const Error&) {
                        threw2 = true;
                    }
                    if (threw1 != threw2) return false;
                    if (!threw1 && !s1.row_space_equal(s2)) return false;
                }
        }
    // 500 random (code, L) pairs over F_3
    Field f3 = Field::make(3, 1);
    std::mt19937_64 rng(109);
    for (int i = 0; i < 500; ++i) {
        uint64_t n = 2 + rng() % 5;
        uint64_t k = 1 + rng() % std::min<uint64_t>(n, 4);
        LinearCode c = random_code(f3, n, k, rng);
        CoordSet L = random_coords(n, rng() % n, rng);
        bool threw1 = false, threw2 = false;
        LinearCode s1 = c, s2 = c;
        try {
            s1 = c.shortened(L);
        } catch (const Error&) {
            threw1 = true;
        }
        try {
            s2 = enumerate_shorten_oracle(c, L);
        } catch (const Error&) {
            threw2 = true;
        }
        if (threw1 != threw2) return false;
        if (!threw1 && !s1.row_space_equal(s2)) return false;
    }
    return true;
}

bool criterion6() {
    std::mt19937_64 rng(113);
    int done = 0;
    while (done < 100) {
        const Field f = done % 2 ? Field::make(3, 1) : Field::make(2, 1);
        Poly g = random_squarefree(f, 8, rng);
        uint64_t e = brute_force_order(f, g, 1024);
        if (e == 0) continue;
        uint64_t t = 1 + rng() % 3;
        while (t % f.p() == 0) ++t;
        if (t * e > 1024 || t * e <= static_cast<uint64_t>(g.degree())) continue;
        CyclicCode c = CyclicCode::make(f, t * e, g);
        CoordSet L = random_coords(c.length(), rng() % (c.length() + 1), rng);
        std::vector<std::vector<uint32_t>> mat;
        for (uint64_t r = 0; r < c.dimension(); ++r) {
            auto full = c.row(r);
            std::vector<uint32_t> restr(L.size());
            for (size_t j = 0; j < L.size(); ++j) restr[j] = full[L.coords[j] - 1];
            mat.push_back(std::move(restr));
        }
        if (restricted_rank(c, L) != materialized_rank(f, mat)) return false;
        ++done;
    }
    return true;
}

bool criterion7() {
    Field f2 = Field::make(2, 1);
    Field f3 = Field::make(3, 1);
    std::vector<LinearCode> bases;
    bases.push_back(LinearCode::from_rows(f2, Rows{{1}}));
    bases.push_back(LinearCode::from_rows(f2, Rows{{1, 0}}));
    bases.push_back(LinearCode::from_rows(f2, Rows{{0, 1}}));
    bases.push_back(LinearCode::from_rows(f2, Rows{{1, 1}}));
    bases.push_back(LinearCode::from_rows(f2, Rows{{1, 0}, {0, 1}}));
    bases.push_back(LinearCode::from_rows(f3, Rows{{1, 2}}));

    int mutations = 0;
    for (const LinearCode& c : bases) {
        EmbeddingCertificate good = build_certificate(c);

        // single g coefficient changed to a different field element
        for (size_t pos = 0; pos < good.g.coeffs().size(); ++pos)
            for (uint32_t v = 0; v < c.field().q(); ++v) {
                if (v == good.g.coeff(pos)) continue;
                EmbeddingCertificate bad = good;
                std::vector<uint32_t> coeffs = good.g.coeffs();
                coeffs[pos] = v;
                bad.g = poly_from_raw(std::move(coeffs));
                if (!verification_rejects(c, bad)) return false;
                ++mutations;
            }

        // single expected dimension off by one
        for (size_t s = 0; s < good.steps.size(); ++s)
            for (int delta : {-1, 1}) {
                if (good.steps[s].dim_after == 1 && delta == -1) continue;
                EmbeddingCertificate bad = good;
                bad.steps[s].dim_after += delta;
                if (!verification_rejects(c, bad)) return false;
                ++mutations;
            }

        // single shorten coordinate moved to a free neighbouring column
        for (size_t s = 0; s < good.steps.size(); ++s) {
            const Step& st = good.steps[s];
            if (st.op != StepOp::Shorten) continue;
            for (size_t i = 0; i < st.coords.size(); ++i)
                for (int64_t delta : {int64_t(-1), int64_t(1)}) {
                    int64_t moved = static_cast<int64_t>(st.coords.coords[i]) + delta;
                    if (moved < 1 || moved > static_cast<int64_t>(st.len_before)) continue;
                    std::vector<uint64_t> coords = st.coords.coords;
                    bool taken = false;
                    for (uint64_t x : coords)
                        if (x == static_cast<uint64_t>(moved)) taken = true;
                    if (taken) continue;
                    coords[i] = static_cast<uint64_t>(moved);
                    std::sort(coords.begin(), coords.end());
                    EmbeddingCertificate bad = good;
                    bad.steps[s].coords = CoordSet::make(std::move(coords), st.len_before);
                    if (!verification_rejects(c, bad)) return false;
                    ++mutations;
                }
        }
    }
    return mutations >= 100;
}

bool criterion8() {
    if (g_corpus.empty()) return false;
    for (const EmbeddingCertificate& cert : g_corpus) {
        if (2 * cert.kprime < cert.nprime) return false;
        if (cert.nprime % cert.p == 0) return false;
    }
    return true;
}

} // namespace

int main() {
    struct Entry {
        int id;
        const char* desc;
        bool (*fn)();
    };
    const Entry entries[] = {
        {1, "worked-example golden values and oracle verification", criterion1},
        {2, "exhaustive/randomized corpus embeds and verifies", criterion2},
        {3, "construction invariants on random bases", criterion3},
        {4, "order_of_x matches brute force", criterion4},
        {5, "shorten matches the enumeration oracle", criterion5},
        {6, "streaming rank matches materialized rank", criterion6},
        {7, "single-symbol certificate mutations are rejected", criterion7},
        {8, "rate bound and length coprimality across the corpus", criterion8},
    };
    int failures = 0;
    for (const Entry& e : entries) {
        bool ok = false;
        try {
            ok = e.fn();
        } catch (const std::exception& ex) {
            std::cout << "criterion " << e.id << ": exception: " << ex.what() << "\n";
        }
        std::cout << "criterion " << e.id << " (" << e.desc << "): "
                  << (ok ? "pass" : "FAIL") << std::endl;
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
