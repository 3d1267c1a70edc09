// Reports: ordered key=value entries plus human-only lines.
#pragma once

#include <string>
#include <vector>

#include "cotilt/spectral.hpp"

namespace cotilt {

enum class Format { Human, Machine };

class Report {
public:
    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, const char* value) { set(key, std::string(value)); }
    void set(const std::string& key, bool value) { set(key, std::string(value ? "true" : "false")); }
    void set(const std::string& key, long long value) { set(key, std::to_string(value)); }
    void set(const std::string& key, int value) { set(key, std::to_string(value)); }
    // machine-only entry
    void data(const std::string& key, const std::string& value);
    void text(const std::string& line);
    void append(const Report& other, const std::string& prefix = "");
    std::string render(Format f) const;

private:
    enum class Kind { Both, Human, Machine };
    struct Entry {
        Kind kind;
        std::string key, value;
    };
    std::vector<Entry> entries_;
};

// Dimension vector with composition factors, e.g. (0,1,1,0)[S(2)+S(3)].
std::string module_name(const FinModule& m);
std::string degrees_string(const std::vector<int>& d);

// Grids with rows q (top q = 0) and columns p, one per page and one for E∞,
// followed by differential ranks and the filtration factors of the abutment.
void add_spectral(Report& r, const SecondSpectral& sp);
std::string render_grid(const Page& pg, int p_lo, int p_hi, int q_lo, int q_hi);

}  // namespace cotilt
