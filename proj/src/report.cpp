#include "cotilt/report.hpp"

#include <algorithm>
#include <sstream>

namespace cotilt {

void Report::set(const std::string& key, const std::string& value) { entries_.push_back({Kind::Both, key, value}); }

void Report::data(const std::string& key, const std::string& value) { entries_.push_back({Kind::Machine, key, value}); }

void Report::text(const std::string& line) { entries_.push_back({Kind::Human, "", line}); }

void Report::append(const Report& other, const std::string& prefix)
{
    for (const auto& e : other.entries_) entries_.push_back({e.kind, e.kind == Kind::Human ? e.key : prefix + e.key, e.value});
}

std::string Report::render(Format f) const
{
    std::ostringstream out;
    for (const auto& e : entries_) {
        if (e.kind == Kind::Human) {
            if (f == Format::Human) out << e.value << "\n";
        } else if (f == Format::Machine) {
            out << e.key << "=" << e.value << "\n";
        } else if (e.kind == Kind::Both) {
            out << e.key << ": " << e.value << "\n";
        }
    }
    return out.str();
}

std::string module_name(const FinModule& m) { return dim_vector_string(m) + "[" + composition_string(m) + "]"; }

std::string degrees_string(const std::vector<int>& d)
{
    std::string s = "{";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + "}";
}

std::string render_grid(const Page& pg, int p_lo, int p_hi, int q_lo, int q_hi)
{
    std::vector<std::vector<std::string>> rows;
    std::size_t w = 1;
    for (int q = q_hi; q >= q_lo; --q) {
        std::vector<std::string> row;
        for (int p = p_lo; p <= p_hi; ++p) {
            std::string c = composition_string(pg.cell(p, q));
            w = std::max(w, c.size());
            row.push_back(c);
        }
        rows.push_back(row);
    }
    std::ostringstream out;
    out << "      ";
    for (int p = p_lo; p <= p_hi; ++p) {
        std::string h = "p=" + std::to_string(p);
        out << " " << h << std::string(w - std::min(w, h.size()), ' ');
    }
    out << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string lab = "q=" + std::to_string(q_hi - static_cast<int>(i));
        out << lab << std::string(6 - std::min<std::size_t>(6, lab.size()), ' ');
        for (const auto& c : rows[i]) out << " " << c << std::string(w - c.size(), ' ');
        out << "\n";
    }
    return out.str();
}

void add_spectral(Report& r, const SecondSpectral& sp)
{
    const RowSpectral& ss = *sp.ss;
    r.set("spectral.n_first", sp.n_first);
    r.set("spectral.n_second", sp.n_second);
    r.set("spectral.stable", sp.stable);
    r.set("spectral.unit_invertible", sp.unit_invertible());
    auto page = [&](const Page& pg, const std::string& tag, const std::string& title) {
        r.text(title);
        r.text(render_grid(pg, ss.p_lo(), ss.p_hi(), ss.q_lo(), ss.q_hi()));
        for (int q = ss.q_hi(); q >= ss.q_lo(); --q)
            for (int p = ss.p_lo(); p <= ss.p_hi(); ++p)
                r.data(tag + ".cell." + std::to_string(p) + "." + std::to_string(q), module_name(pg.cell(p, q)));
        for (const auto& [k, d] : pg.diffs)
            r.set(tag + ".d." + std::to_string(k.first) + "." + std::to_string(k.second), static_cast<long long>(rank(d)));
    };
    for (const auto& pg : sp.pages) page(pg, "E" + std::to_string(pg.r), "E_" + std::to_string(pg.r) + ":");
    page(sp.lim, "Einf", "E_inf:");
    for (int s = ss.q_lo(); s <= ss.p_hi(); ++s) {
        const SubQuot& h = ss.cohomology(s);
        r.set("abutment." + std::to_string(s), module_name(h.module));
        for (int p = ss.p_lo(); p <= ss.p_hi(); ++p) {
            FinModule f = subquotient(h.module, ss.filtration(s, p), ss.filtration(s, p + 1)).module;
            if (f.dim() != 0) r.set("filtration." + std::to_string(s) + "." + std::to_string(p), module_name(f));
        }
    }
}

}  // namespace cotilt
