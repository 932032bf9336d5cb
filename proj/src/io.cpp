#include "ordinary/io.hpp"

#include <fstream>
#include <sstream>

namespace ordinary {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

Rat parse_field(const std::string& tok, int lineno) {
    try {
        if (auto slash = tok.find('/'); slash != std::string::npos) {
            Int num(tok.substr(0, slash));
            Int den(tok.substr(slash + 1));
            return make_rat(num, den);
        }
        return Rat(Int(tok));
    } catch (const std::invalid_argument&) {
        fail(Err::ParseError, "line " + std::to_string(lineno) + ": bad field '" + tok + "'");
    } catch (const Error&) {
        fail(Err::ParseError, "line " + std::to_string(lineno) + ": bad field '" + tok + "'");
    }
}

} // namespace

PointSet parse_points(const std::string& text) {
    std::vector<ProjPoint> pts;
    std::vector<int> linenos;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto fields = split_ws(line);
        if (fields.empty()) continue;
        if (fields.size() != 2 && fields.size() != 3)
            fail(Err::ParseError, "line " + std::to_string(lineno) + ": expected 2 or 3 fields");
        Rat x = parse_field(fields[0], lineno);
        Rat y = parse_field(fields[1], lineno);
        Rat z = fields.size() == 3 ? parse_field(fields[2], lineno) : Rat(1);
        ProjPoint p = [&] {
            try {
                return ProjPoint::from_rationals(x, y, z);
            } catch (const Error&) {
                fail(Err::ParseError, "line " + std::to_string(lineno) + ": zero coordinate vector");
            }
        }();
        for (size_t i = 0; i < pts.size(); ++i)
            if (pts[i] == p)
                fail(Err::DuplicatePoint, "line " + std::to_string(lineno) + ": duplicate of line " +
                                              std::to_string(linenos[i]));
        pts.push_back(std::move(p));
        linenos.push_back(lineno);
    }
    return PointSet(std::move(pts));
}

std::string write_points(const PointSet& A) {
    std::ostringstream os;
    for (const auto& p : A) os << p.v[0] << " " << p.v[1] << " " << p.v[2] << "\n";
    return os.str();
}

namespace {

const char* kCertKeys[] = {"degree", "monomial-order", "coeffs", "incident",
                           "base",   "case",           "method", "dual-witness"};

std::string join_ints(const std::vector<Int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

std::string join_indices(const std::vector<int>& v) {
    if (v.empty()) return "-";
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

} // namespace

std::string write_certificate(const Certificate& cert) {
    std::ostringstream os;
    os << "degree " << cert.degree << "\n";
    os << "monomial-order graded-lex\n";
    os << "coeffs " << join_ints(cert.coeffs) << "\n";
    os << "incident " << join_indices(cert.incident) << "\n";
    os << "base " << join_indices(cert.base) << "\n";
    os << "case " << cert.case_tag << "\n";
    os << "method " << cert.method << "\n";
    if (cert.dual_witness) {
        const auto& w = *cert.dual_witness;
        os << "dual-witness " << w[0] << " " << w[1] << " " << w[2] << "\n";
    } else {
        os << "dual-witness -\n";
    }
    return os.str();
}

Certificate read_certificate(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::pair<std::string, std::string>> kv;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto sp = line.find(' ');
        if (sp == std::string::npos) fail(Err::FormatError, "certificate line without a value: " + line);
        kv.emplace_back(line.substr(0, sp), line.substr(sp + 1));
    }
    if (kv.size() != 8) fail(Err::FormatError, "certificate must have exactly eight keys");
    for (size_t i = 0; i < 8; ++i)
        if (kv[i].first != kCertKeys[i])
            fail(Err::FormatError, "unexpected key '" + kv[i].first + "' (wanted '" + kCertKeys[i] + "')");

    Certificate cert;
    try {
        cert.degree = std::stoi(kv[0].second);
    } catch (const std::exception&) {
        fail(Err::FormatError, "bad degree");
    }
    if (cert.degree < 1 || cert.degree > kMaxDegree) fail(Err::FormatError, "degree out of range");
    if (kv[1].second != "graded-lex") fail(Err::FormatError, "unsupported monomial order");
    try {
        for (const auto& tok : split_ws(kv[2].second)) cert.coeffs.emplace_back(tok);
    } catch (const std::invalid_argument&) {
        fail(Err::FormatError, "bad coefficient");
    }
    if (static_cast<int>(cert.coeffs.size()) != form_dim(cert.degree))
        fail(Err::FormatError, "coeffs must have exactly " + std::to_string(form_dim(cert.degree)) +
                                   " entries for degree " + std::to_string(cert.degree));
    auto parse_index_list = [](const std::string& s, std::vector<int>& out) {
        if (s == "-") return;
        for (const auto& tok : split_ws(s)) {
            try {
                out.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                fail(Err::FormatError, "bad index '" + tok + "'");
            }
        }
    };
    parse_index_list(kv[3].second, cert.incident);
    parse_index_list(kv[4].second, cert.base);
    cert.case_tag = kv[5].second;
    cert.method = kv[6].second;
    if (cert.case_tag.empty() || cert.method.empty()) fail(Err::FormatError, "empty case or method");
    if (kv[7].second != "-") {
        auto toks = split_ws(kv[7].second);
        if (toks.size() != 3) fail(Err::FormatError, "dual-witness needs three coordinates or '-'");
        try {
            cert.dual_witness = Triple{Int(toks[0]), Int(toks[1]), Int(toks[2])};
        } catch (const std::invalid_argument&) {
            fail(Err::FormatError, "bad dual-witness coordinate");
        }
    }
    return cert;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(Err::ParseError, "cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(Err::ParseError, "cannot write " + path);
    f << content;
}

} // namespace ordinary
