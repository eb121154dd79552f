#ifndef CYCEMB_VERIFY_HPP
#define CYCEMB_VERIFY_HPP

#include <string>
#include <vector>

#include "cycemb/cyclic_code.hpp"
#include "cycemb/embed.hpp"

namespace cycemb {

enum class VerifyMode { Oracle, Structural };

struct StepCheck {
    char stage = '?';
    StepOp op = StepOp::Shorten;
    bool length_ok = false;
    bool dim_ok = false;
    bool surviving_rows_ok = false;
    double elapsed_s = 0.0;
    std::string note; // set when a step could not even be applied

    bool ok() const { return length_ok && dim_ok && surviving_rows_ok; }
};

struct VerifyReport {
    VerifyMode mode = VerifyMode::Oracle;
    std::vector<StepCheck> steps;
    bool final_equal = false;
    std::string note;
};

inline constexpr uint64_t kOracleGuard = 4096;

/// Applies the certificate's steps to `start` with the exact shorten and
/// puncture operations; `start` is expected to be the materialized cyclic
/// code. Throws on any step precondition failure.
LinearCode replay(const EmbeddingCertificate& cert, const LinearCode& start);

/// Brute-force checker: materializes all k' shift rows, replays every step,
/// compares lengths/dims/surviving spans, re-runs stage A as iterated
/// per-range shortenings, and checks the final row space against c.
/// Requires n' <= 4096 and k' <= 4096.
VerifyReport verify_oracle(const LinearCode& c, const EmbeddingCertificate& cert);

/// Scalable checker: never materializes C(n', g). Shorten dims are checked
/// via streaming restricted rank over the surviving original rows, survivor
/// membership is checked against the generator polynomial's support, and the
/// final k x n restriction is compared against c.
VerifyReport verify_structural(const LinearCode& c, const EmbeddingCertificate& cert);

} // namespace cycemb

#endif
