#include "cycemb/embed.hpp"

#include <algorithm>

namespace cycemb {

BasisProfile normalize_basis(const LinearCode& c) {
    BasisProfile profile;
    profile.rows = c.generator();
    std::stable_sort(profile.rows.begin(), profile.rows.end(),
                     [](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
                         auto trail = [](const std::vector<uint32_t>& v) {
                             size_t t = 0;
                             while (t < v.size() && v[v.size() - 1 - t] == 0) ++t;
                             return t;
                         };
                         size_t ta = trail(a), tb = trail(b);
                         if (ta != tb) return ta < tb;
                         return a < b;
                     });
    for (const auto& row : profile.rows) {
        uint32_t lead = 0;
        while (lead < row.size() && row[lead] == 0) ++lead;
        uint32_t trail = 0;
        while (trail < row.size() && row[row.size() - 1 - trail] == 0) ++trail;
        profile.lead_zeros.push_back(lead);
        profile.trail_zeros.push_back(trail);
        profile.core_len.push_back(static_cast<uint32_t>(row.size()) - lead - trail);
    }
    return profile;
}

std::vector<uint32_t> build_f(const BasisProfile& profile, uint64_t n, uint64_t k) {
    if (profile.rows.size() != k) throw Error("build_f: profile/dimension mismatch");
    std::vector<uint32_t> f;
    f.reserve((2 * k - 1) * n + 2);
    f.push_back(1);
    for (uint64_t j = 0; j < k; ++j) {
        f.insert(f.end(), profile.rows[j].begin(), profile.rows[j].end());
        if (j + 1 < k) f.insert(f.end(), n, 0);
    }
    f.push_back(1);
    const uint64_t m = 2 * n * (k - 1) + n + 1;
    if (f.size() != m + 1) throw Error("build_f: length bookkeeping failed");
    return f;
}

Poly build_g(const Field& field, const std::vector<uint32_t>& fvec) {
    if (fvec.size() < 2 || fvec.front() != 1 || fvec.back() != 1)
        throw Error("build_g: f must have f_0 = f_m = 1");
    const uint64_t m = fvec.size() - 1;
    const uint32_t p = field.p();
    std::vector<uint32_t> coeffs((m - 1) * p + 2, 0);
    for (uint64_t i = 0; i < m; ++i) coeffs[p * i] = fvec[i];
    coeffs.back() = 1;
    return Poly::make(field, std::move(coeffs));
}

uint64_t select_length_multiplier(uint64_t e, uint64_t deg_g, uint32_t p) {
    uint64_t t = (2 * deg_g + e - 1) / e;
    if (t == 0) t = 1;
    while (t % p == 0) ++t;
    return t;
}

uint64_t find_length(const Field& f, const Poly& g, uint64_t bound) {
    const uint64_t e = order_of_x(f, g);
    const uint64_t deg_g = static_cast<uint64_t>(g.degree());
    const uint64_t t = select_length_multiplier(e, deg_g, f.p());
    const uint64_t nprime = t * e;
    if (nprime > bound)
        throw LengthBudgetError(e, deg_g, nprime,
                                "length budget exceeded: e=" + std::to_string(e) +
                                    " deg_g=" + std::to_string(deg_g) +
                                    " required nprime=" + std::to_string(nprime) +
                                    " bound=" + std::to_string(bound));
    return nprime;
}

EmbeddingCertificate build_certificate(const LinearCode& c, uint64_t bound) {
    EmbeddingCertificate cert;
    cert.field = c.field();
    cert.n = c.length();
    cert.k = c.dimension();
    cert.p = c.field().p();
    cert.basis = normalize_basis(c);
    cert.m = 2 * cert.n * (cert.k - 1) + cert.n + 1;
    cert.f = build_f(cert.basis, cert.n, cert.k);
    cert.g = build_g(cert.field, cert.f);
    cert.nprime = find_length(cert.field, cert.g, bound);
    cert.e = order_of_x(cert.field, cert.g);
    cert.kprime = cert.nprime - static_cast<uint64_t>(cert.g.degree());

    const uint64_t n = cert.n, k = cert.k, m = cert.m, p = cert.p;
    const uint64_t kp = cert.kprime;

    // Stage A: shorten at the union of [(j-1)p+2, jp], j = 1..m-1. The
    // ranges are disjoint and simultaneous, so one pass suffices.
    {
        Step st;
        st.stage = 'A';
        st.op = StepOp::Shorten;
        std::vector<uint64_t> coords;
        for (uint64_t j = 1; j <= m - 1; ++j)
            for (uint64_t c2 = (j - 1) * p + 2; c2 <= j * p; ++c2) coords.push_back(c2);
        st.coords = CoordSet::make(std::move(coords), cert.nprime);
        st.len_before = cert.nprime;
        st.len_after = cert.nprime - (m - 1) * (p - 1);
        st.dim_after = kp - (m - 1) * (p - 1);
        for (uint64_t j = 0; j <= m - 1; ++j) st.surviving_rows.push_back(j * p);
        for (uint64_t i = (m - 1) * p + 1; i < kp; ++i) st.surviving_rows.push_back(i);
        cert.steps.push_back(std::move(st));
    }

    // Stage B: shorten the trailing k'-1 - 2np(k-1) coordinates, plus the
    // tail selector column m+1+ip for every intermediate shift row ip with
    // 0 < i <= 2n(k-1) and 2n not dividing i. Column m+1+ip carries only the
    // leading term of row ip (any other shift row would need 1 = 0 mod p),
    // so these columns eliminate exactly the rows between consecutive
    // survivors 0, 2np, 4np, ..., 2n(k-1)p.
    std::vector<uint64_t> survivors;
    for (uint64_t j = 0; j < k; ++j) survivors.push_back(2 * n * j * p);
    {
        const uint64_t len_before = kp + m;
        Step st;
        st.stage = 'B';
        st.op = StepOp::Shorten;
        std::vector<uint64_t> coords;
        for (uint64_t i = 1; i <= 2 * n * (k - 1); ++i)
            if (i % (2 * n) != 0) coords.push_back(m + 1 + i * p);
        for (uint64_t c2 = m + 2 + 2 * n * p * (k - 1); c2 <= len_before; ++c2)
            coords.push_back(c2);
        st.len_before = len_before;
        st.len_after = len_before - coords.size();
        st.coords = CoordSet::make(std::move(coords), len_before);
        st.dim_after = k;
        st.surviving_rows = survivors;
        cert.steps.push_back(std::move(st));
    }

    // Stage C: puncture everything after the initial m columns.
    {
        const uint64_t len_before = cert.steps.back().len_after;
        Step st;
        st.stage = 'C';
        st.op = StepOp::Puncture;
        st.coords = CoordSet::range(m + 1, len_before, len_before);
        st.len_before = len_before;
        st.len_after = m;
        st.dim_after = k;
        st.surviving_rows = survivors;
        cert.steps.push_back(std::move(st));
    }

    // Stage E: puncture everything before the last n coordinates; survivor
    // 2njp restricted to those columns is exactly v_{k-j}.
    {
        Step st;
        st.stage = 'E';
        st.op = StepOp::Puncture;
        st.coords = CoordSet::range(1, m - n, m);
        st.len_before = m;
        st.len_after = n;
        st.dim_after = k;
        st.surviving_rows = survivors;
        cert.steps.push_back(std::move(st));
    }

    return cert;
}

} // namespace cycemb
