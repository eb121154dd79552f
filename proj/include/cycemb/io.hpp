#ifndef CYCEMB_IO_HPP
#define CYCEMB_IO_HPP

#include <iosfwd>
#include <string>

#include "cycemb/embed.hpp"
#include "cycemb/linear_code.hpp"
#include "cycemb/verify.hpp"

namespace cycemb {

/// `q=<int> p=<int> s=<int> modulus=<comma-separated ascending F_p coeffs or "-">`
std::string format_field_header(const Field& f);
Field parse_field_header(const std::string& line);

/// Code file: field header; `n=<int> k=<int>`; k generator rows of n
/// space-separated integer-encoded symbols.
void write_code(std::ostream& out, const LinearCode& c);
LinearCode read_code(std::istream& in);
void write_code_file(const std::string& path, const LinearCode& c);
LinearCode read_code_file(const std::string& path);

/// Certificate file, line oriented; see the step-line grammar in the tool
/// docs. Parse errors carry 1-based line numbers.
void write_certificate(std::ostream& out, const EmbeddingCertificate& cert);
EmbeddingCertificate read_certificate(std::istream& in);
void write_certificate_file(const std::string& path, const EmbeddingCertificate& cert);
EmbeddingCertificate read_certificate_file(const std::string& path);

/// Report text mirroring the certificate's step lines with ok=/fail=
/// annotations.
std::string render_report(const VerifyReport& report);

} // namespace cycemb

#endif
