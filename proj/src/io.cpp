#include "cycemb/io.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace cycemb {

namespace {

class LineReader {
  public:
    explicit LineReader(std::istream& in) : in_(in) {}

    std::string next() {
        std::string line;
        while (std::getline(in_, line)) {
            ++lineno_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return line;
        }
        throw Error("unexpected end of file at line " + std::to_string(lineno_));
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error("line " + std::to_string(lineno_) + ": " + what);
    }

    size_t lineno() const { return lineno_; }

  private:
    std::istream& in_;
    size_t lineno_ = 0;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            if (!cur.empty()) parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

uint64_t parse_u64(const std::string& s) {
    size_t pos = 0;
    uint64_t v = std::stoull(s, &pos);
    if (pos != s.size()) throw Error("bad integer '" + s + "'");
    return v;
}

std::vector<uint64_t> parse_u64_list(const std::string& s) {
    std::vector<uint64_t> out;
    if (s == "-") return out;
    for (auto& tok : split(s, ',')) out.push_back(parse_u64(tok));
    return out;
}

std::vector<uint32_t> parse_u32_list(const std::string& s) {
    std::vector<uint32_t> out;
    for (uint64_t v : parse_u64_list(s)) out.push_back(static_cast<uint32_t>(v));
    return out;
}

std::string join(const std::vector<uint64_t>& v) {
    if (v.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(v[i]);
    }
    return s;
}

std::string join32(const std::vector<uint32_t>& v) {
    std::vector<uint64_t> tmp(v.begin(), v.end());
    return join(tmp);
}

// key=value tokens separated by spaces; duplicate keys rejected
std::map<std::string, std::string> kv_line(const std::string& line) {
    std::map<std::string, std::string> kv;
    for (auto& tok : split(line, ' ')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw Error("expected key=value, got '" + tok + "'");
        if (!kv.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second)
            throw Error("duplicate key '" + tok.substr(0, eq) + "'");
    }
    return kv;
}

std::string want(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error("missing key '" + key + "'");
    return it->second;
}

} // namespace

std::string format_field_header(const Field& f) {
    std::string s = "q=" + std::to_string(f.q()) + " p=" + std::to_string(f.p()) +
                    " s=" + std::to_string(f.s()) + " modulus=";
    s += f.modulus().empty() ? "-" : join32(f.modulus());
    return s;
}

Field parse_field_header(const std::string& line) {
    auto kv = kv_line(line);
    uint32_t p = static_cast<uint32_t>(parse_u64(want(kv, "p")));
    uint32_t s = static_cast<uint32_t>(parse_u64(want(kv, "s")));
    uint32_t q = static_cast<uint32_t>(parse_u64(want(kv, "q")));
    std::string mod = want(kv, "modulus");
    Field f = mod == "-" ? Field::make(p, s) : Field::make(p, s, parse_u32_list(mod));
    if (f.q() != q) throw Error("field header q does not match p^s");
    return f;
}

void write_code(std::ostream& out, const LinearCode& c) {
    out << format_field_header(c.field()) << "\n";
    out << "n=" << c.length() << " k=" << c.dimension() << "\n";
    for (auto& row : c.generator()) {
        for (size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
        out << "\n";
    }
}

LinearCode read_code(std::istream& in) {
    LineReader lr(in);
    Field f = [&] {
        std::string line = lr.next();
        try {
            return parse_field_header(line);
        } catch (const Error& e) {
            lr.fail(e.what());
        }
    }();
    uint64_t n = 0, k = 0;
    try {
        auto kv = kv_line(lr.next());
        n = parse_u64(want(kv, "n"));
        k = parse_u64(want(kv, "k"));
    } catch (const Error& e) {
        lr.fail(e.what());
    }
    std::vector<std::vector<uint32_t>> rows;
    for (uint64_t r = 0; r < k; ++r) {
        std::string line = lr.next();
        std::vector<uint32_t> row;
        for (auto& tok : split(line, ' ')) {
            try {
                row.push_back(static_cast<uint32_t>(parse_u64(tok)));
            } catch (const Error& e) {
                lr.fail(e.what());
            }
        }
        if (row.size() != n) lr.fail("expected " + std::to_string(n) + " symbols");
        rows.push_back(std::move(row));
    }
    try {
        LinearCode code = LinearCode::from_rows(f, std::move(rows));
        if (code.dimension() != k)
            throw Error("generator rows have rank " + std::to_string(code.dimension()) +
                        ", header says k=" + std::to_string(k));
        return code;
    } catch (const Error& e) {
        lr.fail(e.what());
    }
}

void write_certificate(std::ostream& out, const EmbeddingCertificate& cert) {
    out << format_field_header(cert.field) << "\n";
    out << "n=" << cert.n << " k=" << cert.k << " m=" << cert.m << " p=" << cert.p << "\n";
    out << "f=" << join32(cert.f) << "\n";
    out << "g=" << join32(cert.g.coeffs()) << "\n";
    out << "e=" << cert.e << " nprime=" << cert.nprime << " kprime=" << cert.kprime << "\n";
    for (const Step& st : cert.steps) {
        out << "step " << st.stage << " "
            << (st.op == StepOp::Shorten ? "shorten" : "puncture")
            << " len_before=" << st.len_before << " len_after=" << st.len_after
            << " dim_after=" << st.dim_after << " coords=" << join(st.coords.coords)
            << " rows=" << join(st.surviving_rows) << "\n";
    }
    for (const auto& row : cert.basis.rows) out << "basis=" << join32(row) << "\n";
}

EmbeddingCertificate read_certificate(std::istream& in) {
    LineReader lr(in);
    EmbeddingCertificate cert;
    try {
        cert.field = parse_field_header(lr.next());
        auto kv = kv_line(lr.next());
        cert.n = parse_u64(want(kv, "n"));
        cert.k = parse_u64(want(kv, "k"));
        cert.m = parse_u64(want(kv, "m"));
        cert.p = static_cast<uint32_t>(parse_u64(want(kv, "p")));

        std::string fl = lr.next();
        if (fl.rfind("f=", 0) != 0) lr.fail("expected f= line");
        cert.f = parse_u32_list(fl.substr(2));

        std::string gl = lr.next();
        if (gl.rfind("g=", 0) != 0) lr.fail("expected g= line");
        cert.g = Poly::make(cert.field, parse_u32_list(gl.substr(2)));

        kv = kv_line(lr.next());
        cert.e = parse_u64(want(kv, "e"));
        cert.nprime = parse_u64(want(kv, "nprime"));
        cert.kprime = parse_u64(want(kv, "kprime"));

        uint64_t current_len = cert.nprime;
        std::string line;
        while (true) {
            line = lr.next();
            if (line.rfind("step ", 0) != 0) break;
            auto toks = split(line, ' ');
            if (toks.size() != 8) lr.fail("malformed step line");
            Step st;
            st.stage = toks[1][0];
            if (toks[2] == "shorten")
                st.op = StepOp::Shorten;
            else if (toks[2] == "puncture")
                st.op = StepOp::Puncture;
            else
                lr.fail("unknown step op '" + toks[2] + "'");
            auto kv2 = kv_line(toks[3] + " " + toks[4] + " " + toks[5] + " " + toks[6] + " " +
                               toks[7]);
            st.len_before = parse_u64(want(kv2, "len_before"));
            st.len_after = parse_u64(want(kv2, "len_after"));
            st.dim_after = parse_u64(want(kv2, "dim_after"));
            st.coords = CoordSet::make(parse_u64_list(want(kv2, "coords")), st.len_before);
            st.surviving_rows = parse_u64_list(want(kv2, "rows"));
            if (st.len_before != current_len) lr.fail("step length chain broken");
            current_len = st.len_after;
            cert.steps.push_back(std::move(st));
        }
        // remaining lines are the basis rows; the first one is in `line`
        for (uint64_t r = 0; r < cert.k; ++r) {
            if (r > 0) line = lr.next();
            if (line.rfind("basis=", 0) != 0) lr.fail("expected basis= line");
            cert.basis.rows.push_back(parse_u32_list(line.substr(6)));
        }
        for (const auto& row : cert.basis.rows) {
            if (row.size() != cert.n) lr.fail("basis row has wrong length");
            uint32_t lead = 0, trail = 0;
            while (lead < row.size() && row[lead] == 0) ++lead;
            while (trail < row.size() && row[row.size() - 1 - trail] == 0) ++trail;
            cert.basis.lead_zeros.push_back(lead);
            cert.basis.trail_zeros.push_back(trail);
            cert.basis.core_len.push_back(static_cast<uint32_t>(row.size()) - lead - trail);
        }
    } catch (const Error& e) {
        std::string what = e.what();
        if (what.rfind("line ", 0) == 0) throw;
        lr.fail(what);
    }
    return cert;
}

void write_code_file(const std::string& path, const LinearCode& c) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    write_code(out, c);
}

LinearCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return read_code(in);
}

void write_certificate_file(const std::string& path, const EmbeddingCertificate& cert) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    write_certificate(out, cert);
}

EmbeddingCertificate read_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return read_certificate(in);
}

std::string render_report(const VerifyReport& report) {
    std::ostringstream out;
    out << "mode=" << (report.mode == VerifyMode::Oracle ? "oracle" : "structural") << "\n";
    auto flag = [](bool ok) { return ok ? "ok" : "fail"; };
    for (const StepCheck& chk : report.steps) {
        out << "step " << chk.stage << " "
            << (chk.op == StepOp::Shorten ? "shorten" : "puncture") << " length="
            << flag(chk.length_ok) << " dim=" << flag(chk.dim_ok)
            << " surviving_rows=" << flag(chk.surviving_rows_ok) << " elapsed="
            << std::fixed << std::setprecision(6) << chk.elapsed_s << "s";
        if (!chk.note.empty()) out << " note=\"" << chk.note << "\"";
        out << "\n";
    }
    if (!report.note.empty()) out << "note=\"" << report.note << "\"\n";
    out << "final=" << flag(report.final_equal) << "\n";
    return out.str();
}

} // namespace cycemb
