#include "cotilt/expr.hpp"

#include <cctype>
#include <regex>
#include <sstream>

namespace cotilt {

namespace {

class ExprParser {
public:
    ExprParser(const std::string& s, int line, int column) : s_(s), line_(line), col0_(column) {}

    ModExpr parse()
    {
        ModExpr e = sum();
        skip();
        if (i_ != s_.size()) error("unexpected '" + std::string(1, s_[i_]) + "'");
        return e;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
    int line_, col0_;

    [[noreturn]] void error(const std::string& msg) const
    {
        // a multi-line expression moves the line and resets the column
        int line = line_;
        std::size_t col = col0_ + i_;
        for (std::size_t k = 0; k < i_ && k < s_.size(); ++k)
            if (s_[k] == '\n') {
                ++line;
                col = i_ - k;
            }
        fail(Errc::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
    }

    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool eat(char c)
    {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!eat(c)) error(std::string("expected '") + c + "'");
    }

    int integer()
    {
        skip();
        std::size_t b = i_;
        if (i_ < s_.size() && s_[i_] == '-') ++i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ == b || (i_ == b + 1 && s_[b] == '-')) {
            i_ = b;
            error("expected an integer");
        }
        return std::stoi(s_.substr(b, i_ - b));
    }

    ModExpr sum()
    {
        ModExpr first = term();
        if (!(skip(), i_ < s_.size() && s_[i_] == '+')) return first;
        ModExpr e;
        e.kind = ModExpr::Kind::Sum;
        e.args.push_back(std::move(first));
        while (eat('+')) e.args.push_back(term());
        return e;
    }

    ModExpr term()
    {
        skip();
        std::size_t b = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])))) ++i_;
        std::string w = s_.substr(b, i_ - b);
        ModExpr e;
        using K = ModExpr::Kind;
        if (w.empty()) error("expected a module term");
        if (w == "R") {
            e.kind = K::R;
            return e;
        }
        if (w == "0") {
            e.kind = K::Zero;
            return e;
        }
        if (w == "P" || w == "I" || w == "S") {
            e.kind = w == "P" ? K::P : w == "I" ? K::I : K::S;
            expect('(');
            e.n = integer();
            expect(')');
            return e;
        }
        if (w == "rad" || w == "soc" || w == "top" || w == "radq" || w == "socq") {
            e.kind = w == "rad" ? K::Rad : w == "soc" ? K::Soc : w == "top" ? K::Top : w == "radq" ? K::Radq : K::Socq;
            expect('(');
            e.args.push_back(sum());
            if (e.kind == K::Radq || e.kind == K::Socq) {
                expect(',');
                e.n = integer();
                e.has_n = true;
            } else if (e.kind != K::Top && eat(',')) {
                e.n = integer();
                e.has_n = true;
            }
            expect(')');
            if (e.has_n && e.n < 0) error("layer count must be nonnegative");
            return e;
        }
        i_ = b;
        error("unknown term '" + w + "'");
    }
};

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int vertex(const AlgebraPtr& a, int label)
{
    const auto& q = a->quiver();
    if (q) {
        if (!q->has_label(label))
            fail(Errc::SemanticError, "vertex " + std::to_string(label) + " out of range " + std::to_string(q->first_label()) +
                                          ".." + std::to_string(q->first_label() + q->vertex_count() - 1));
        return q->index_of(label);
    }
    if (label < 1 || label > a->vertex_count()) fail(Errc::SemanticError, "vertex " + std::to_string(label) + " out of range");
    return label - 1;
}

}  // namespace

ModExpr parse_module_expr(const std::string& text, int line, int column) { return ExprParser(text, line, column).parse(); }

std::string format_module_expr(const ModExpr& e)
{
    using K = ModExpr::Kind;
    auto arg = [&](const char* f) {
        std::string s = std::string(f) + "(" + format_module_expr(e.args[0]);
        if (e.has_n) s += "," + std::to_string(e.n);
        return s + ")";
    };
    switch (e.kind) {
    case K::P: return "P(" + std::to_string(e.n) + ")";
    case K::I: return "I(" + std::to_string(e.n) + ")";
    case K::S: return "S(" + std::to_string(e.n) + ")";
    case K::R: return "R";
    case K::Zero: return "0";
    case K::Rad: return arg("rad");
    case K::Soc: return arg("soc");
    case K::Top: return arg("top");
    case K::Radq: return arg("radq");
    case K::Socq: return arg("socq");
    case K::Sum: {
        std::string s;
        for (const auto& t : e.args) s += (s.empty() ? "" : "+") + format_module_expr(t);
        return s;
    }
    }
    return "";
}

FinModule evaluate(const AlgebraPtr& a, const ModExpr& e)
{
    using K = ModExpr::Kind;
    switch (e.kind) {
    case K::P: return projective(a, vertex(a, e.n));
    case K::I: return injective(a, vertex(a, e.n));
    case K::S: return simple(a, vertex(a, e.n));
    case K::R: return regular_module(a);
    case K::Zero: return FinModule::zero(a);
    case K::Rad: return rad(evaluate(a, e.args[0]), e.has_n ? e.n : 1);
    case K::Soc: return soc(evaluate(a, e.args[0]), e.has_n ? e.n : 1);
    case K::Top: return top(evaluate(a, e.args[0]));
    case K::Radq: return radq(evaluate(a, e.args[0]), e.n);
    case K::Socq: return socq(evaluate(a, e.args[0]), e.n);
    case K::Sum: {
        std::vector<FinModule> parts;
        for (const auto& t : e.args) parts.push_back(evaluate(a, t));
        return direct_sum(parts).module;
    }
    }
    return FinModule::zero(a);
}

FinModule module_from_expr(const AlgebraPtr& a, const std::string& text) { return evaluate(a, parse_module_expr(text)); }

std::vector<FinModule> summands_from_expr(const AlgebraPtr& a, const std::string& text)
{
    ModExpr e = parse_module_expr(text);
    std::vector<ModExpr> terms = e.kind == ModExpr::Kind::Sum ? e.args : std::vector<ModExpr>{e};
    std::vector<FinModule> out;
    for (const auto& t : terms) {
        if (t.kind == ModExpr::Kind::R) {
            for (int v = 0; v < a->vertex_count(); ++v) out.push_back(projective(a, v));
            continue;
        }
        FinModule m = evaluate(a, t);
        if (m.dim() == 0) fail(Errc::SemanticError, "zero summand " + format_module_expr(t));
        out.push_back(m);
    }
    return out;
}

ComplexSpec parse_complex(const std::string& text)
{
    static const std::regex degrees(R"(degrees\s*=\s*(-?\d+)\s*\.\.\s*(-?\d+))");
    static const std::regex term(R"(term\s+(-?\d+)\s*=\s*)");
    static const std::regex diff(R"(diff\s+(-?\d+)\s*=\s*(.*))");
    static const std::regex coeffs(R"(coeffs\s+(.*))");
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool header = false, have_degrees = false;
    ComplexSpec c;
    std::vector<std::optional<ModExpr>> terms;
    std::vector<bool> diff_seen;
    auto where = [&](const std::string& msg) -> std::string { return "line " + std::to_string(line) + ", column 1: " + msg; };
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw.substr(0, raw.find('#'));
        s = trim(s);
        if (s.empty()) continue;
        if (!header) {
            if (s != "[complex]") fail(Errc::SyntaxError, where("expected [complex]"));
            header = true;
            continue;
        }
        std::smatch m;
        if (std::regex_match(s, m, degrees)) {
            c.lo = std::stoi(m[1]);
            c.hi = std::stoi(m[2]);
            if (c.hi < c.lo) fail(Errc::SemanticError, where("empty degree range"));
            terms.assign(c.hi - c.lo + 1, std::nullopt);
            c.diffs.assign(c.hi - c.lo, std::nullopt);
            diff_seen.assign(c.hi - c.lo, false);
            have_degrees = true;
            continue;
        }
        if (!have_degrees) fail(Errc::SyntaxError, where("degrees must come first"));
        if (std::regex_search(s, m, term) && m.position(0) == 0) {
            int k = std::stoi(m[1]);
            if (k < c.lo || k > c.hi) fail(Errc::SemanticError, where("term degree out of range"));
            std::size_t col = raw.find(s) + m.length(0) + 1;
            terms[k - c.lo] = parse_module_expr(s.substr(m.length(0)), line, static_cast<int>(col));
            continue;
        }
        if (std::regex_match(s, m, diff)) {
            int k = std::stoi(m[1]);
            if (k < c.lo || k >= c.hi) fail(Errc::SemanticError, where("differential degree out of range"));
            std::string body = trim(m[2]);
            std::smatch cm;
            if (body == "auto") {
                c.diffs[k - c.lo] = std::nullopt;
            } else if (std::regex_match(body, cm, coeffs)) {
                std::vector<Scalar> v;
                std::string list = cm[1];
                std::stringstream ls(list);
                std::string tok;
                static const std::regex num(R"(-?\d+(/\d+)?)");
                while (std::getline(ls, tok, ',')) {
                    tok = trim(tok);
                    if (!std::regex_match(tok, num)) fail(Errc::SyntaxError, where("bad coefficient '" + tok + "'"));
                    v.push_back(Scalar::from_string(tok));
                }
                c.diffs[k - c.lo] = v;
            } else {
                fail(Errc::SyntaxError, where("expected auto or coeffs"));
            }
            diff_seen[k - c.lo] = true;
            continue;
        }
        fail(Errc::SyntaxError, where("unrecognized line"));
    }
    if (!have_degrees) fail(Errc::SyntaxError, "missing degrees line");
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (!terms[k]) fail(Errc::SemanticError, "missing term " + std::to_string(c.lo + static_cast<int>(k)));
        c.terms.push_back(*terms[k]);
    }
    return c;
}

std::string format_complex(const ComplexSpec& c)
{
    std::ostringstream out;
    out << "[complex]\ndegrees = " << c.lo << ".." << c.hi << "\n";
    for (int k = c.lo; k <= c.hi; ++k) out << "term " << k << " = " << format_module_expr(c.terms[k - c.lo]) << "\n";
    for (int k = c.lo; k < c.hi; ++k) {
        const auto& d = c.diffs[k - c.lo];
        out << "diff " << k << " = ";
        if (!d) {
            out << "auto";
        } else {
            out << "coeffs ";
            for (std::size_t i = 0; i < d->size(); ++i) out << (i ? "," : "") << (*d)[i];
        }
        out << "\n";
    }
    return out.str();
}

Complex build_complex(const AlgebraPtr& a, const ComplexSpec& c)
{
    std::vector<FinModule> terms;
    for (const auto& t : c.terms) terms.push_back(evaluate(a, t));
    std::vector<bool> automatic;
    std::vector<std::optional<Vector>> co;
    for (std::size_t k = 0; k < c.diffs.size(); ++k) {
        automatic.push_back(!c.diffs[k]);
        if (c.diffs[k]) {
            Vector v(static_cast<Index>(c.diffs[k]->size()));
            for (std::size_t i = 0; i < c.diffs[k]->size(); ++i) v(static_cast<Index>(i)) = a->field()((*c.diffs[k])[i].value());
            co.push_back(v);
        } else {
            co.push_back(std::nullopt);
        }
    }
    int bad = 0;
    auto d = auto_differentials(terms, automatic, co, &bad);
    if (!d) fail(Errc::SemanticError, "differential in degree " + std::to_string(c.lo + bad) + " is not determined; give coeffs");
    return make_complex(a, Side::Left, c.lo, terms, *d);
}

}  // namespace cotilt
