// Bounded complexes, truncations, projective replacements and the derived unit.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cotilt/dual.hpp"

namespace cotilt {

// Terms in degrees lo..hi; diffs[i] goes from degree lo+i to lo+i+1.
struct Complex {
    AlgebraPtr alg;
    Side side = Side::Left;
    int lo = 0;
    std::vector<FinModule> terms;
    std::vector<Matrix> diffs;

    int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
    bool in_range(int k) const { return k >= lo && k <= hi(); }
    FinModule term(int k) const;
    Matrix diff(int k) const;  // term(k) -> term(k+1)
    ModuleMap diff_map(int k) const { return {term(k), term(k + 1), diff(k)}; }
};

// Builds a complex, checking d∘d = 0 and that every differential is a homomorphism.
Complex make_complex(AlgebraPtr alg, Side side, int lo, std::vector<FinModule> terms, std::vector<Matrix> diffs);
Complex stalk(const FinModule& m, int degree = 0);
bool is_complex(const Complex& c);

FinModule cohomology(const Complex& c, int i);
// H^i as a subquotient of term(i).
SubQuot cohomology_sq(const Complex& c, int i);
bool is_exact_at(const Complex& c, int i);
// Rank of a homomorphism, summed over vertex blocks.
Index graded_rank(const ModuleMap& f);

struct ComplexMap {
    Complex src, tgt;
    std::map<int, Matrix> comp;  // missing degrees are zero
    Matrix at(int k) const;
};

bool is_chain_map(const ComplexMap& f);
Complex cone(const ComplexMap& f);
bool is_quasi_iso(const ComplexMap& f);
// Cone exactness restricted to degrees from..to.
bool is_quasi_iso(const ComplexMap& f, int from, int to);
ComplexMap identity_map(const Complex& c);
ModuleMap induced_on_cohomology(const ComplexMap& f, int i);

enum class Trunc { TauGt, TauLe, SigmaGt, SigmaLe };

// The canonical map goes truncation -> x for TauGt and SigmaLe, x -> truncation otherwise.
struct Truncation {
    Complex complex;
    ComplexMap map;
};
Truncation truncate(const Complex& x, int n, Trunc kind);

// Free complex p with a quasi-isomorphism q: p -> x, built downwards from hi by
// covering pullbacks. Degrees below lo - depth are dropped; complete records
// whether the construction stopped on its own.
struct Replacement {
    Complex p;
    ComplexMap q;
    bool complete = false;
};
Replacement projective_replacement(const Complex& x, int depth);

// Hom(−,U) applied termwise: degrees [lo,hi] go to [−hi,−lo] without signs.
struct DualComplex {
    Complex complex;
    std::map<int, DualImage> images;  // keyed by source degree
};
DualComplex dual_complex(const HomDual& d, const Complex& x);

// The derived unit of a pair of duals on a complex, computed termwise on a
// truncated projective replacement. Cohomology of g and cone exactness are
// only meaningful in degrees valid_lo..valid_hi.
struct DerivedUnit {
    Replacement rep;
    DualComplex first;   // R of the first dual
    DualComplex second;  // the composite G
    ComplexMap eta_hat;  // rep.p -> G
    int valid_lo = 0, valid_hi = 0;
};

DerivedUnit derived_unit(const HomDual& first, const HomDual& second, const Complex& x, int n_first);

// Derived functors for a duality context. All need the acyclicity of Φ on
// projectives (AcyclicityUnavailable otherwise).
DerivedUnit derived_unit(const DualityContext& ctx, const Complex& x);
DerivedUnit derived_unit_right(const DualityContext& ctx, const Complex& y);
Complex r_phi_complex(const DualityContext& ctx, const Complex& x);
Complex r_psi_complex(const DualityContext& ctx, const Complex& y);
bool is_d_reflexive(const DualityContext& ctx, const Complex& x);
bool is_d_reflexive_object(const DualityContext& ctx, const FinModule& m);
bool is_d_reflexive_right(const DualityContext& ctx, const Complex& y);

// Degrees where G(x) has nonzero cohomology, within the valid window.
std::vector<int> g_cohomology_degrees(const DerivedUnit& u);

// Differentials chosen so that each is unique up to scalar among nonzero maps
// killing the previous one (radical maps preferred when that is ambiguous).
// Returns nullopt at the first degree where no unique choice exists.
std::optional<std::vector<Matrix>> auto_differentials(const std::vector<FinModule>& terms, const std::vector<bool>& automatic,
                                                      const std::vector<std::optional<Vector>>& coeffs, int* failed_at = nullptr);

}  // namespace cotilt
