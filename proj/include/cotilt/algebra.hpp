// Finite-dimensional algebras: quivers with relations and structure-constant algebras.
//
// Products are written in operator order: for basis paths p, q the product
// q·p is "p, then q". Files use diagrammatic order, so the file path a*b is
// the algebra element b·a.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cotilt/errors.hpp"
#include "cotilt/linalg.hpp"

namespace cotilt {

struct Arrow {
    std::string name;
    int source = 0;  // internal vertex index
    int target = 0;
};

// Vertices carry integer labels first_label, first_label+1, ...
class Quiver {
public:
    Quiver() = default;
    explicit Quiver(int vertex_count, int first_label = 1);

    int add_arrow(const std::string& name, int source_label, int target_label);

    int vertex_count() const { return n_; }
    int first_label() const { return first_; }
    int label(int v) const { return first_ + v; }
    int index_of(int label) const;
    bool has_label(int label) const { return label >= first_ && label < first_ + n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    int arrow_index(const std::string& name) const;

private:
    int n_ = 0;
    int first_ = 1;
    std::vector<Arrow> arrows_;
};

using Path = std::vector<int>;  // arrow indices, diagrammatic order

struct PathTerm {
    Scalar coeff;
    Path path;
};

struct Relation {
    std::vector<PathTerm> terms;
};

struct AlgebraPresentation {
    Field field;
    Quiver quiver;
    std::vector<Relation> relations;
    int path_bound = 64;
};

struct BasisPath {
    int source = 0;
    int target = 0;
    Path arrows;  // empty for the trivial path at source
    int length() const { return static_cast<int>(arrows.size()); }
};

struct PathBasis {
    std::vector<BasisPath> paths;
};

std::string path_name(const Quiver& q, const BasisPath& p);

PathBasis path_basis(const AlgebraPresentation& p);

using SparseVec = std::vector<std::pair<int, Scalar>>;

class BasisAlgebra {
public:
    struct Spec {
        Field field;
        std::string name;
        std::vector<std::string> vertex_names;
        std::vector<std::string> labels;
        std::vector<int> lvert, rvert;             // b_i = e_lvert · b_i · e_rvert
        std::vector<std::vector<SparseVec>> table;  // table[i][j] = b_i · b_j
        std::vector<int> idem;                      // basis index of e_v
        std::vector<std::vector<int>> words;        // b_i = g_k ⋯ g_1 for word (g_1..g_k)
        std::optional<Quiver> quiver;
    };

    explicit BasisAlgebra(Spec s);

    int dim() const { return static_cast<int>(s_.labels.size()); }
    const Field& field() const { return s_.field; }
    const std::string& name() const { return s_.name; }
    int vertex_count() const { return static_cast<int>(s_.idem.size()); }
    const std::string& vertex_name(int v) const { return s_.vertex_names[v]; }
    const std::string& label(int i) const { return s_.labels[i]; }
    int lvert(int i) const { return s_.lvert[i]; }
    int rvert(int i) const { return s_.rvert[i]; }
    int idem(int v) const { return s_.idem[v]; }
    bool is_idempotent_basis(int i) const { return s_.words[i].empty(); }
    const std::vector<int>& word(int i) const { return s_.words[i]; }
    const std::vector<int>& gens() const { return gens_; }
    const SparseVec& mul(int i, int j) const { return s_.table[i][j]; }
    Vector mul(const Vector& x, const Vector& y) const;
    Vector unit() const;
    Vector basis_vector(int i) const;
    const std::optional<Quiver>& quiver() const { return s_.quiver; }
    // Basis indices of the arrows, for path algebras.
    const std::vector<int>& arrow_basis() const { return arrow_basis_; }
    // Basis of the Jacobson radical as columns; homogeneous for the vertex idempotents.
    const Matrix& radical() const;
    // Left multiplication by b_i as a dim×dim matrix.
    Matrix left_matrix(int i) const;
    Matrix left_matrix(const Vector& x) const;

private:
    Spec s_;
    std::vector<int> gens_;
    std::vector<int> arrow_basis_;
    std::optional<Matrix> radical_;
};

using AlgebraPtr = std::shared_ptr<const BasisAlgebra>;

AlgebraPtr to_basis_algebra(const AlgebraPresentation& p);

// Radical via the trace form of the regular representation (characteristic 0).
Matrix radical(const BasisAlgebra& a);

// True iff a/rad(a) is a product of full matrix algebras over the ground field.
bool check_split(const BasisAlgebra& a);

// Associativity on every basis triple.
bool is_associative(const BasisAlgebra& a);

}  // namespace cotilt
