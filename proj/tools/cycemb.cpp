// Command-line front end: build embedding certificates, verify them in
// oracle or structural mode, and run the built-in demonstration corpus.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "cycemb/embed.hpp"
#include "cycemb/io.hpp"
#include "cycemb/verify.hpp"

namespace {

using namespace cycemb;

uint64_t default_bound() {
    if (const char* env = std::getenv("CYCLIC_EMBED_BOUND")) {
        try {
            return std::stoull(env);
        } catch (...) {
            std::cerr << "warning: ignoring malformed CYCLIC_EMBED_BOUND\n";
        }
    }
    return kDefaultLengthBudget;
}

int cmd_embed(const std::string& in_path, const std::string& out_path, uint64_t bound) {
    LinearCode code = read_code_file(in_path);
    EmbeddingCertificate cert = build_certificate(code, bound);
    write_certificate_file(out_path, cert);
    std::cout << "n=" << cert.n << " k=" << cert.k << " q=" << cert.field.q()
              << " m=" << cert.m << " deg_g=" << cert.g.degree() << " e=" << cert.e
              << " nprime=" << cert.nprime << " kprime=" << cert.kprime
              << " steps=" << cert.steps.size() << "\n";
    return 0;
}

int cmd_verify(const std::string& in_path, const std::string& cert_path,
               const std::string& mode, const std::string& report_path) {
    LinearCode code = read_code_file(in_path);
    EmbeddingCertificate cert = read_certificate_file(cert_path);
    if (cert.field != code.field()) throw Error("code and certificate field headers differ");
    if (cert.n != code.length() || cert.k != code.dimension())
        throw Error("code and certificate disagree on (n, k)");

    VerifyReport report;
    if (mode == "oracle" || (mode == "auto" && cert.nprime <= kOracleGuard))
        report = verify_oracle(code, cert);
    else
        report = verify_structural(code, cert);

    std::string text = render_report(report);
    std::cout << text;
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw Error("cannot open '" + report_path + "' for writing");
        out << text;
    }
    return report.final_equal ? 0 : 1;
}

// every nonzero row space over F_2 with length n
std::vector<LinearCode> all_f2_codes(uint64_t n) {
    Field f2 = Field::make(2, 1);
    const uint64_t words = uint64_t(1) << n;
    std::vector<LinearCode> out;
    // enumerate subsets of nonzero words, keep one representative per row
    // space (its RREF)
    std::vector<std::vector<std::vector<uint32_t>>> seen;
    for (uint64_t mask = 1; mask < (uint64_t(1) << (words - 1)); ++mask) {
        std::vector<std::vector<uint32_t>> rows;
        for (uint64_t w = 1; w < words; ++w)
            if (mask & (uint64_t(1) << (w - 1))) {
                std::vector<uint32_t> row(n);
                for (uint64_t b = 0; b < n; ++b) row[b] = (w >> b) & 1;
                rows.push_back(std::move(row));
            }
        LinearCode code = LinearCode::from_rows(f2, std::move(rows));
        bool fresh = true;
        for (auto& g : seen)
            if (g == code.generator()) {
                fresh = false;
                break;
            }
        if (fresh) {
            seen.push_back(code.generator());
            out.push_back(std::move(code));
        }
    }
    return out;
}

LinearCode random_code(const Field& f, uint64_t n, uint64_t k, std::mt19937_64& rng) {
    while (true) {
        std::vector<std::vector<uint32_t>> rows(k, std::vector<uint32_t>(n));
        for (auto& row : rows)
            for (auto& x : row) x = static_cast<uint32_t>(rng() % f.q());
        try {
            LinearCode c = LinearCode::from_rows(f, std::move(rows));
            if (c.dimension() == k) return c;
        } catch (const Error&) {
        }
    }
}

int cmd_demo(uint64_t bound, uint64_t seed) {
    std::vector<LinearCode> corpus;
    for (uint64_t n = 1; n <= 3; ++n)
        for (auto& c : all_f2_codes(n)) corpus.push_back(std::move(c));

    std::mt19937_64 rng(seed);
    Field f3 = Field::make(3, 1);
    Field f4 = Field::make(2, 2);
    for (int i = 0; i < 4; ++i) corpus.push_back(random_code(f3, 2 + i % 2, 1, rng));
    for (int i = 0; i < 2; ++i) corpus.push_back(random_code(f4, 2, 1, rng));

    bool all_ok = true;
    for (const LinearCode& code : corpus) {
        std::cout << "q=" << code.field().q() << " n=" << code.length()
                  << " k=" << code.dimension() << " ";
        try {
            EmbeddingCertificate cert = build_certificate(code, bound);
            bool verifiable = true;
            for (const Step& st : cert.steps)
                verifiable = verifiable && st.coords.size() <= kRestrictedRankGuard;
            if (!verifiable) {
                std::cout << "skipped (nprime=" << cert.nprime << " exceeds verifier guard)\n";
                continue;
            }
            VerifyReport report = cert.nprime <= kOracleGuard ? verify_oracle(code, cert)
                                                              : verify_structural(code, cert);
            std::cout << "nprime=" << cert.nprime << " "
                      << (report.final_equal ? "ok" : "FAIL") << "\n";
            all_ok = all_ok && report.final_equal;
        } catch (const LengthBudgetError& e) {
            std::cout << "skipped (nprime=" << e.required << " > bound)\n";
        } catch (const BudgetError&) {
            std::cout << "skipped (order computation over 64-bit budget)\n";
        }
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic-code embedding certificates: construct and verify"};
    app.require_subcommand(1);

    std::string in_path, out_path, cert_path, report_path;
    std::string mode = "auto";
    uint64_t bound = default_bound();
    uint64_t seed = 1;

    auto* embed = app.add_subcommand("embed", "build a certificate for a code file");
    embed->add_option("--in", in_path, "input code file")->required();
    embed->add_option("--out", out_path, "output certificate file")->required();
    embed->add_option("--bound", bound, "length budget for n'");

    auto* verify = app.add_subcommand("verify", "check a certificate against a code file");
    verify->add_option("--in", in_path, "input code file")->required();
    verify->add_option("--cert", cert_path, "certificate file")->required();
    verify->add_option("--mode", mode, "oracle|structural|auto")
        ->check(CLI::IsMember({"oracle", "structural", "auto"}));
    verify->add_option("--report", report_path, "also write the report to this file");

    auto* demo = app.add_subcommand("demo", "run the built-in corpus");
    demo->add_option("--bound", bound, "length budget for n'");
    demo->add_option("--seed", seed, "seed for the sampled corpus members");

    CLI11_PARSE(app, argc, argv);

    try {
        if (embed->parsed()) return cmd_embed(in_path, out_path, bound);
        if (verify->parsed()) return cmd_verify(in_path, cert_path, mode, report_path);
        return cmd_demo(bound, seed);
    } catch (const cycemb::LengthBudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cycemb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
