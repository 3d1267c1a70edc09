// The contravariant pair Φ = Hom_Λ(−,U), Ψ = Hom_S(−,U) with S = End(U).
//
// S is stored as E = End(U) with composition as product; its vertex
// idempotents are the projections onto the given summands of U. Right
// S-modules are left E-modules tagged Side::Right.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cotilt/module.hpp"

namespace cotilt {

// One direction of the pair: Hom_X(−, U) from X-modules to Y-modules.
struct HomDual {
    FinModule u_src;  // U over X
    FinModule u_dst;  // U over Y, same basis
    Side dst_side = Side::Left;
};

// Hom_X(M, U) with its hom basis; basis vector k is space.basis[k].
struct DualImage {
    FinModule source;
    FinModule module;
    HomSpace space;
};

DualImage dualize(const HomDual& d, const FinModule& m);
// f: M → M' gives Hom(M', U) → Hom(M, U), g ↦ g∘f.
ModuleMap dualize_map(const HomDual& d, const ModuleMap& f, const DualImage& of_tgt, const DualImage& of_src);
// Evaluation M → Hom(Hom(M,U),U).
ModuleMap evaluation(const DualImage& dm, const DualImage& ddm);

// R^i of Hom_X(−,U) on m as a Y-module, from a free resolution.
FinModule derived_dual(const HomDual& d, const Resolution& r, int i);

// The same as a subquotient of Hom(F_i, U), with that term kept.
struct DerivedDualTerm {
    DualImage term;
    SubQuot h;
};
DerivedDualTerm derived_dual_term(const HomDual& d, const Resolution& r, int i);

// R^i of f: X -> Y, a map R^i(Y) -> R^i(X); rx, ry resolve X and Y.
ModuleMap derived_dual_map(const HomDual& d, const ModuleMap& f, const Resolution& rx, const Resolution& ry, int i);

struct EndAlgebra {
    AlgebraPtr alg;
    std::vector<Matrix> elements;  // basis element i as a dim U × dim U matrix
    std::vector<Index> offsets;    // summand offsets in U
};

// End(⊕ U_k) with basis assembled from the blocks Hom(U_i, U_j), identities first.
EndAlgebra endomorphism_algebra(const std::vector<FinModule>& summands, const std::vector<std::string>& names = {});

struct CotiltingReport {
    std::optional<int> injdim_left, injdim_right;
    bool ext_left = true, ext_right = true;
    bool psi_acyclic_free = true;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

class DualityContext {
public:
    // summands of U over lambda; s_names optionally label the vertices of S.
    DualityContext(AlgebraPtr lambda, const std::vector<FinModule>& summands, const std::vector<std::string>& s_names = {},
                   int cap = 10);

    const AlgebraPtr& lambda() const { return lambda_; }
    const AlgebraPtr& s() const { return end_.alg; }
    const FinModule& u() const { return phi_.u_src; }
    const FinModule& u_right() const { return psi_.u_src; }
    const EndAlgebra& end() const { return end_; }
    const HomDual& phi_side() const { return phi_; }
    const HomDual& psi_side() const { return psi_; }
    int cap() const { return cap_; }
    // Cohomological dimensions injdim _ΛU and injdim U_S; CapExceeded when above the cap.
    int n_phi() const;
    int n_psi() const;
    bool projectives_acyclic() const { return acyclic_; }

    FinModule phi(const FinModule& m) const { return dualize(phi_, m).module; }
    FinModule psi(const FinModule& n) const { return dualize(psi_, n).module; }
    ModuleMap phi_map(const ModuleMap& f) const;
    ModuleMap psi_map(const ModuleMap& f) const;
    FinModule r_phi(const FinModule& m, int i) const;
    FinModule r_psi(const FinModule& n, int i) const;
    // R^iΦ(f): R^iΦ(tgt) -> R^iΦ(src), on the models of r_phi.
    ModuleMap r_phi_map(const ModuleMap& f, int i) const;
    ModuleMap r_psi_map(const ModuleMap& f, int i) const;
    ModuleMap eta(const FinModule& m) const;
    ModuleMap xi(const FinModule& n) const;
    bool is_reflexive(const FinModule& m) const;
    bool is_phi_acyclic(const FinModule& m) const;
    bool is_psi_acyclic(const FinModule& n) const;
    bool is_psi_phi_acyclic(const FinModule& m) const;
    CotiltingReport partial_cotilting(const std::vector<int>& powers = {1, 2, 4}) const;

private:
    AlgebraPtr lambda_;
    EndAlgebra end_;
    HomDual phi_, psi_;
    int cap_;
    std::optional<int> n_phi_, n_psi_;
    bool acyclic_ = false;
};

// Unit maps at the level of matrices, as a pair of duals applied twice.
ModuleMap unit_map(const HomDual& first, const HomDual& second, const FinModule& m);

}  // namespace cotilt
