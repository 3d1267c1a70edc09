// Finite-dimensional modules, homomorphisms, subquotients and resolutions.
//
// Every module is stored as a left module over some BasisAlgebra, with a
// basis adapted to the vertex idempotents. Right S-modules are left modules
// over End(U) with composition as product; the side tag is kept for display.
#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cotilt/algebra.hpp"

namespace cotilt {

enum class Side { Left, Right };

// A summand A·e_v of a projective module, occupying a contiguous block of the
// basis ordered like the algebra basis elements b with rvert(b) = v.
struct ProjSummand {
    int vertex = 0;
    Index offset = 0;
};

class FinModule {
public:
    FinModule() = default;
    // gen_act[k] is the action of the k-th generator alg->gens()[k].
    FinModule(AlgebraPtr alg, std::vector<int> vert, std::vector<Matrix> gen_act, Side side = Side::Left,
              std::optional<std::vector<ProjSummand>> proj = std::nullopt);
    static FinModule zero(AlgebraPtr alg, Side side = Side::Left);

    bool valid() const { return static_cast<bool>(d_); }
    const AlgebraPtr& algebra() const { return d_->alg; }
    Side side() const { return d_->side; }
    Index dim() const { return static_cast<Index>(d_->vert.size()); }
    int vertex(Index i) const { return d_->vert[i]; }
    const std::vector<int>& vertices() const { return d_->vert; }
    const Matrix& gen_action(int k) const { return d_->gen_act[k]; }
    const std::vector<Matrix>& gen_actions() const { return d_->gen_act; }
    // Action of the algebra basis element b_i, or of an arbitrary algebra element.
    const Matrix& action(int i) const { return actions()[i]; }
    Matrix action(const Vector& x) const;
    // All basis actions, computed once per module.
    const std::vector<Matrix>& actions() const;
    std::vector<int> dim_vector() const;
    std::vector<Index> block(int v) const;
    const std::optional<std::vector<ProjSummand>>& projective() const { return d_->proj; }
    // Basis index of the generator e_v of a projective summand.
    Index generator(std::size_t summand) const;
    FinModule with_side(Side s) const;

private:
    struct Data {
        AlgebraPtr alg;
        Side side = Side::Left;
        std::vector<int> vert;
        std::vector<Matrix> gen_act;
        std::optional<std::vector<ProjSummand>> proj;
        mutable std::once_flag acts_once;
        mutable std::vector<Matrix> acts;
    };
    std::shared_ptr<const Data> d_;
};

// Positions in the algebra basis of the elements b with rvert(b) = v, i.e. a basis of A·e_v.
std::vector<int> column_of(const BasisAlgebra& a, int v);

bool is_module(const FinModule& m);

struct ModuleMap {
    FinModule src;
    FinModule tgt;
    Matrix m;  // tgt.dim() × src.dim()
};

bool is_homomorphism(const ModuleMap& f);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g ∘ f
ModuleMap identity_map(const FinModule& m);
ModuleMap zero_map(const FinModule& s, const FinModule& t);

// A basis of Hom(M, N). Each basis map has entry 1 at its own free position and
// 0 at the other free positions, so coordinates are read off those entries.
struct HomSpace {
    std::vector<Matrix> basis;
    std::vector<std::pair<Index, Index>> free;
    int dim() const { return static_cast<int>(basis.size()); }
    Vector coords(const Matrix& f) const;
    Matrix combine(const Vector& c, Index rows, Index cols) const;
};

HomSpace hom_space(const FinModule& m, const FinModule& n);
// Generic commutation solve, bypassing the projective shortcut (used for cross-checks).
HomSpace hom_space_generic(const FinModule& m, const FinModule& n);
std::vector<ModuleMap> hom_basis(const FinModule& m, const FinModule& n);

// Standard modules over an algebra with vertex idempotents.
FinModule projective(const AlgebraPtr& a, int v, Side side = Side::Left);
FinModule projective_sum(const AlgebraPtr& a, const std::vector<int>& verts, Side side = Side::Left);
FinModule regular_module(const AlgebraPtr& a, Side side = Side::Left);
FinModule injective(const AlgebraPtr& a, int v, Side side = Side::Left);
FinModule simple(const AlgebraPtr& a, int v, Side side = Side::Left);

// Module given by a quiver representation: vector spaces of the given
// dimensions and one matrix dims[t] × dims[s] per arrow s -> t.
FinModule from_representation(const AlgebraPtr& a, const std::vector<int>& dims, const std::vector<Matrix>& arrows,
                              Side side = Side::Left);

struct DirectSum {
    FinModule module;
    std::vector<Index> offsets;
};
DirectSum direct_sum(const std::vector<FinModule>& parts);

// Submodule with its inclusion (columns = basis in the ambient coordinates).
struct Sub {
    FinModule module;
    Matrix incl;
    Matrix retract;  // left inverse of incl
};

// Quotient with its projection and a coordinate section.
struct Quot {
    FinModule module;
    Matrix proj;     // Q × M
    Matrix section;  // M × Q, proj * section = 1
};

// Project columns onto vertex blocks and keep a basis; the span must be graded.
Matrix homogenize(const FinModule& m, const Matrix& cols);
Sub submodule(const FinModule& m, const Matrix& span);
Sub submodule_generated(const FinModule& m, const Matrix& gens);
Quot quotient(const FinModule& m, const Matrix& span);

// N/D for submodules D ⊆ N of M (given by spanning columns in M coordinates).
struct SubQuot {
    FinModule module;
    Matrix to_quot;  // dim Q × dim M, defined on N (rows vanish on D)
    Matrix lift;     // dim M × dim Q, representatives in N
};
SubQuot subquotient(const FinModule& m, const Matrix& n, const Matrix& d);

Sub kernel(const ModuleMap& f);
Sub image(const ModuleMap& f);
Quot cokernel(const ModuleMap& f);

// Radical layers. Need characteristic 0.
Matrix radical_span(const FinModule& m, int k = 1);  // rad^k M as columns
Matrix socle_span(const FinModule& m, int k = 1);    // soc^k M as columns
FinModule rad(const FinModule& m, int k = 1);
FinModule soc(const FinModule& m, int k = 1);
FinModule top(const FinModule& m);
FinModule radq(const FinModule& m, int k);
FinModule socq(const FinModule& m, int k);

// Projective cover-like surjection from ⊕ A e_v. Minimal when the radical is known.
ModuleMap free_cover(const FinModule& m);

struct Resolution {
    FinModule module;
    std::vector<FinModule> terms;  // F_0, F_1, ...
    std::vector<ModuleMap> maps;   // maps[0] = F_0 -> M, maps[i] = F_i -> F_{i-1}
    bool complete = false;         // final kernel vanished
    int length() const { return static_cast<int>(terms.size()) - 1; }
};

Resolution free_resolution(const FinModule& m, int len);

// h: F -> M with s ∘ h = g, for F projective and im g ⊆ im s.
ModuleMap lift_through(const ModuleMap& g, const ModuleMap& s);
// Comparison maps F_i -> G_i over f: rx.module -> ry.module, for every F_i of rx.
std::vector<Matrix> lift_to_resolutions(const ModuleMap& f, const Resolution& rx, const Resolution& ry);

// Hom(F, N) ≅ ⊕ e_v N for projective F; the map f ↦ f ∘ d in these coordinates.
Matrix hom_precompose(const ModuleMap& d, const FinModule& n, const HomSpace& src_space, const HomSpace& tgt_space);

struct ExtResult {
    int dim = 0;
    Matrix cocycles;     // in Hom(F_i, N) coordinates
    Matrix coboundaries;
};

ExtResult ext_space(const FinModule& m, const FinModule& n, int i);
ExtResult ext_space(const Resolution& r, const FinModule& n, int i);

bool is_isomorphic(const FinModule& m, const FinModule& n, std::uint64_t seed = 0);
// An invertible homomorphism m -> n, if any.
std::optional<Matrix> find_isomorphism(const FinModule& m, const FinModule& n, std::uint64_t seed = 0);

int injective_dimension(const FinModule& m, int cap = 10);

std::string dim_vector_string(const FinModule& m);
std::string composition_string(const FinModule& m);

}  // namespace cotilt
