#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include "cotilt/parse.hpp"

namespace cotilt {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void syntax(int line, std::size_t col, const std::string& msg)
{
    fail(Errc::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(col + 1) + ": " + msg);
}

bool is_number(const std::string& s)
{
    static const std::regex num(R"(\d+(/\d+)?)");
    return std::regex_match(s, num);
}

Relation parse_relation(const std::string& body, const Quiver& q, const Field& f, int line, std::size_t offset)
{
    Relation r;
    std::size_t i = 0;
    auto skip = [&] { while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i; };
    skip();
    bool first = true;
    while (i < body.size()) {
        int sign = 1;
        skip();
        if (i < body.size() && (body[i] == '+' || body[i] == '-')) {
            if (body[i] == '-') sign = -1;
            ++i;
            skip();
        } else if (!first) {
            syntax(line, offset + i, "expected '+' or '-'");
        }
        first = false;
        std::size_t start = i;
        while (i < body.size() && body[i] != '+' && body[i] != '-') ++i;
        std::string term = trim(body.substr(start, i - start));
        if (term.empty()) syntax(line, offset + start, "empty term");
        std::vector<std::string> parts;
        std::stringstream ss(term);
        for (std::string tok; std::getline(ss, tok, '*');) parts.push_back(trim(tok));
        PathTerm pt{f(sign), {}};
        std::size_t k = 0;
        if (is_number(parts[0])) {
            pt.coeff = Scalar::from_string(parts[0], f.p) * f(sign);
            k = 1;
        }
        for (; k < parts.size(); ++k) {
            int a = q.arrow_index(parts[k]);
            if (a < 0) {
                if (parts[k].empty()) syntax(line, offset + start, "empty factor in '" + term + "'");
                fail(Errc::SemanticError, "line " + std::to_string(line) + ": unknown arrow '" + parts[k] + "'");
            }
            pt.path.push_back(a);
        }
        if (pt.path.empty()) syntax(line, offset + start, "term without a path");
        r.terms.push_back(std::move(pt));
    }
    if (r.terms.empty()) syntax(line, offset, "empty relation");
    return r;
}

}  // namespace

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) fail(Errc::InvalidArgument, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

AlgebraPresentation parse_algebra(const std::string& text)
{
    static const std::regex header(R"(\[algebra\])");
    static const std::regex field_re(R"(field\s*=\s*(Q|Fp\((\d+)\)))");
    static const std::regex vert_n(R"(vertices\s*=\s*(\d+))");
    static const std::regex vert_range(R"(vertices\s*=\s*(-?\d+)\s*\.\.\s*(-?\d+))");
    static const std::regex arrow_re(R"(arrow\s+([A-Za-z_][A-Za-z0-9_']*)\s*:\s*(-?\d+)\s*->\s*(-?\d+))");
    static const std::regex rel_re(R"(relation\s+(.*))");

    AlgebraPresentation p;
    bool seen_header = false, seen_vertices = false;
    std::vector<std::pair<int, std::string>> rel_lines;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw.substr(0, raw.find('#'));
        s = trim(s);
        if (s.empty()) continue;
        std::smatch m;
        if (std::regex_match(s, header)) {
            if (seen_header) syntax(line, 0, "duplicate [algebra] header");
            seen_header = true;
            continue;
        }
        if (!seen_header) syntax(line, 0, "expected [algebra] header");
        if (std::regex_match(s, m, field_re)) {
            if (m[2].matched) {
                unsigned long pr = std::stoul(m[2]);
                bool prime = pr >= 2;
                for (unsigned long d = 2; d * d <= pr && prime; ++d) prime = pr % d != 0;
                if (!prime) fail(Errc::SemanticError, "line " + std::to_string(line) + ": modulus is not prime");
                p.field.p = pr;
            } else {
                p.field.p = 0;
            }
        } else if (std::regex_match(s, m, vert_range)) {
            int lo = std::stoi(m[1]), hi = std::stoi(m[2]);
            if (hi < lo) fail(Errc::SemanticError, "line " + std::to_string(line) + ": empty vertex range");
            p.quiver = Quiver(hi - lo + 1, lo);
            seen_vertices = true;
        } else if (std::regex_match(s, m, vert_n)) {
            p.quiver = Quiver(std::stoi(m[1]), 1);
            seen_vertices = true;
        } else if (std::regex_match(s, m, arrow_re)) {
            if (!seen_vertices) syntax(line, 0, "arrow before vertices");
            try {
                p.quiver.add_arrow(m[1], std::stoi(m[2]), std::stoi(m[3]));
            } catch (const Error& e) {
                fail(Errc::SemanticError, "line " + std::to_string(line) + ": " + e.what());
            }
        } else if (std::regex_match(s, m, rel_re)) {
            rel_lines.push_back({line, raw});
        } else {
            syntax(line, 0, "unrecognized line '" + s + "'");
        }
    }
    if (!seen_header) syntax(line, 0, "missing [algebra] header");
    if (!seen_vertices) fail(Errc::SemanticError, "missing vertices line");
    for (const auto& [ln, raw] : rel_lines) {
        std::string s = raw.substr(0, raw.find('#'));
        auto pos = s.find("relation") + 8;
        p.relations.push_back(parse_relation(s.substr(pos), p.quiver, p.field, ln, pos));
    }
    return p;
}

AlgebraPresentation load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

std::string format_algebra(const AlgebraPresentation& p)
{
    std::ostringstream os;
    const Quiver& q = p.quiver;
    os << "[algebra]\n";
    os << "field = " << p.field.name() << "\n";
    if (q.first_label() == 1) os << "vertices = " << q.vertex_count() << "\n";
    else os << "vertices = " << q.first_label() << ".." << q.label(q.vertex_count() - 1) << "\n";
    for (const auto& a : q.arrows())
        os << "arrow " << a.name << ": " << q.label(a.source) << " -> " << q.label(a.target) << "\n";
    for (const auto& r : p.relations) {
        os << "relation ";
        for (std::size_t i = 0; i < r.terms.size(); ++i) {
            Scalar c = r.terms[i].coeff;
            bool neg = p.field.is_rational() && c < Scalar(0);
            if (i) os << (neg ? " - " : " + ");
            else if (neg) os << "-";
            if (neg) c = -c;
            if (!c.is_one()) os << c << "*";
            for (std::size_t k = 0; k < r.terms[i].path.size(); ++k)
                os << (k ? "*" : "") << q.arrows()[r.terms[i].path[k]].name;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace cotilt
