// Mechanical checks of the Cotilting Theorem, the adjoint pair (R¹Φ, R¹Ψ) and
// the n-dimensional statements, on top of the second spectral sequence.
#pragma once

#include <string>
#include <vector>

#include "cotilt/spectral.hpp"

namespace cotilt {

struct CheckLine {
    std::string name;
    bool ok = false;
    std::string detail;
};

// η_a = H^0(RΨ(ι)) ∘ H^0(η̂_a) with ι: Φ(a) -> RΦ(a), compared as matrices.
bool verify_legame(const DualityContext& ctx, const FinModule& a);

struct DriflessiviReport {
    bool d_reflexive = false;   // is_d_reflexive_object
    bool psi_r1phi_zero = false;
    bool h0_unit_iso = false;
    bool rhs() const { return psi_r1phi_zero && h0_unit_iso; }
    bool agree() const { return d_reflexive == rhs(); }
};
// HypothesisViolated unless n_Φ ≤ 1.
DriflessiviReport verify_driflessivi(const DualityContext& ctx, const FinModule& a);

// γ_a: R¹ΨR¹Φ(a) -> a through E_2^{1,-1} = F^1 H^0 and the inverse unit;
// θ_b the same for a right module. Need min(n_Φ, n_Ψ) ≤ 1.
ModuleMap gamma_map(const DualityContext& ctx, const FinModule& a);
ModuleMap theta_map(const DualityContext& ctx, const FinModule& b);

struct TheoremReport {
    bool d_reflexive = false;
    std::vector<CheckLine> conditions;
    std::vector<CheckLine> consequences;  // checked when d_reflexive
    bool conditions_hold() const;
    bool consequences_hold() const;
    // forward: D-reflexive implies the conditions and consequences; converse: conditions imply D-reflexive
    bool forward() const { return !d_reflexive || (conditions_hold() && consequences_hold()); }
    bool converse() const { return !conditions_hold() || d_reflexive; }
    bool ok() const { return forward() && converse(); }
};

// Conditions (1)(2)(3) for n_Φ, n_Ψ ≤ 1.
TheoremReport bb_check(const DualityContext& ctx, const FinModule& a);
// The same conditions for n_Ψ ≤ 1 and any n_Φ, with R^iΦ(a) = 0 for i > 1 as a consequence.
TheoremReport thm_last_check(const DualityContext& ctx, const FinModule& a);

enum class TorsionClass { Zero, T, F, Mixed, NotDReflexive };
const char* torsion_class_name(TorsionClass c);

struct ClassEntry {
    TorsionClass cls = TorsionClass::Zero;
    bool round_trip = false;  // γ (for T) or η (for F) invertible
};
// n_Φ, n_Ψ ≤ 1.
std::vector<ClassEntry> cotilting_classes(const DualityContext& ctx, const std::vector<FinModule>& modules);

struct AdjointReport {
    bool left = false;   // θ_{R¹Φa} ∘ R¹Φ(γ_a) = 1
    bool right = false;  // γ_{R¹Ψb} ∘ R¹Ψ(θ_b) = 1
};
AdjointReport verify_adjoint_r1(const DualityContext& ctx, const FinModule& a, const FinModule& b);

// A failing orthogonality R^iΨR^jΦ(a) ≠ 0 (kind 0) or R^iΦR^jΨR^jΦ(a) ≠ 0 (kind 1).
struct Violation {
    int kind = 0;
    int i = 0, j = 0;
    FinModule module;
};
std::vector<Violation> lastt_violations(const DualityContext& ctx, const FinModule& a);

struct FiltrationFactor {
    int i = 0;
    FinModule factor;    // A_i / A_{i+1}
    FinModule expected;  // R^iΨR^iΦ(a)
    bool iso = false;
    bool d_reflexive = false;
};
struct FiltrationReport {
    bool d_reflexive = false;
    std::vector<Matrix> chain;              // A_0 ⊇ A_1 ⊇ ... ⊇ A_{n+1} = 0, columns in a
    std::vector<FiltrationFactor> factors;  // bottom-up: i = n first
    bool r_phi_d_reflexive = false;         // condition (1)
    bool ok() const;
};
// HypothesisViolated (with the first failing witness) when the orthogonality fails.
FiltrationReport thm_lastt_filtration(const DualityContext& ctx, const FinModule& a);

struct ExactSequence {
    std::vector<FinModule> modules;  // 0 -> M_0 -> ... -> M_k -> 0
    std::vector<Matrix> maps;
    bool exact = false;
};
bool is_exact_sequence(const std::vector<FinModule>& modules, const std::vector<Matrix>& maps);

struct N2Report {
    bool vanishing = false;  // R^0ΨR^2Φ(a) = R^1ΨR^2Φ(a) = 0
    ExactSequence first, second;
};
// n_Φ ≤ 2 and n_Ψ ≤ 2, a D-reflexive.
N2Report n2_sequences(const DualityContext& ctx, const FinModule& a);

struct LemmaReport {
    bool applicable = false;
    std::vector<int> rho;  // per degree of x, concentration of R*Φ H^j(x); -1 where H^j = 0
    bool cohomology_d_reflexive = false;
    bool condition = false;
    bool agree() const { return !applicable || cohomology_d_reflexive == condition; }
};
// Inapplicable when x is not D-reflexive or some R*Φ H^j(x) is not a stalk.
LemmaReport lemma_lastt_check(const DualityContext& ctx, const Complex& x);

}  // namespace cotilt
