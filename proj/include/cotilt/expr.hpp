// Module expressions and complex files.
//
//   expr := term ('+' term)*
//   term := P(i) | I(i) | S(i) | R | 0 | rad(expr[,k]) | soc(expr[,k]) | top(expr)
//         | radq(expr,k) | socq(expr,k)
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cotilt/derived.hpp"

namespace cotilt {

struct ModExpr {
    enum class Kind { P, I, S, R, Zero, Rad, Soc, Top, Radq, Socq, Sum };
    Kind kind = Kind::Zero;
    int n = 0;          // vertex label, or the layer count
    bool has_n = false;  // rad/soc with an explicit layer count
    std::vector<ModExpr> args;
};

// line and column are where text starts, for error positions inside files.
ModExpr parse_module_expr(const std::string& text, int line = 1, int column = 1);
std::string format_module_expr(const ModExpr& e);
FinModule evaluate(const AlgebraPtr& a, const ModExpr& e);
FinModule module_from_expr(const AlgebraPtr& a, const std::string& text);
// Top-level summands, with R expanded into the indecomposable projectives.
std::vector<FinModule> summands_from_expr(const AlgebraPtr& a, const std::string& text);

struct ComplexSpec {
    int lo = 0, hi = 0;
    std::vector<ModExpr> terms;
    std::vector<std::optional<std::vector<Scalar>>> diffs;  // nullopt = auto
};

ComplexSpec parse_complex(const std::string& text);
std::string format_complex(const ComplexSpec& c);
Complex build_complex(const AlgebraPtr& a, const ComplexSpec& c);

}  // namespace cotilt
