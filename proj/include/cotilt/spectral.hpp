// Cartan–Eilenberg resolutions of bounded complexes, the double complex of a
// dual applied to one, and the spectral sequence of its row filtration.
#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <utility>

#include "cotilt/derived.hpp"

namespace cotilt {

// Column a resolves C^{c.lo+a}. Row k of a column is RB^a_k ⊕ RH^a_k ⊕ RB^{a+1}_k:
// the first two resolve the cycles Z^a by a horseshoe over B^a ⊆ Z^a ↠ H^a, the
// whole row comes from a horseshoe over Z^a ⊆ C^a ↠ B^{a+1}.
struct CEResolution {
    Complex c;
    int depth = 0;
    std::vector<SubQuot> coh;                              // H^a as a subquotient of C^a
    std::vector<Resolution> res_b, res_h;                  // res_b has an extra entry for B past the top
    std::vector<std::vector<FinModule>> q;                 // q[a][k], k = 0..depth
    std::vector<std::vector<std::array<Index, 3>>> parts;  // block sizes of q[a][k]
    std::vector<std::vector<Matrix>> vert;                 // vert[a][0]: Q_0 -> C^a, vert[a][k]: Q_k -> Q_{k-1}
    std::vector<std::vector<Matrix>> horiz;                // horiz[a][k]: Q^a_k -> Q^{a+1}_k
    int columns() const { return static_cast<int>(q.size()); }
};

// coh optionally fixes the cohomology models, one per degree of c.
CEResolution cartan_eilenberg(const Complex& c, int depth, std::vector<SubQuot> coh = {});
// Columns resolve the terms, rows of boundaries and cohomologies are what they
// should be, and every square commutes. why receives the first failure.
bool check_cartan_eilenberg(const CEResolution& ce, std::string* why = nullptr);

// Cells K^{x,y} with x in [x_lo, x_hi], y in [0, y_hi]; d_h raises x, d_v raises y.
struct DoubleComplex {
    AlgebraPtr alg;
    Side side = Side::Left;
    int x_lo = 0, x_hi = 0, y_hi = 0;
    std::map<std::pair<int, int>, FinModule> cells;
    std::map<std::pair<int, int>, Matrix> dh, dv;  // keyed by source cell

    FinModule cell(int x, int y) const;
    Matrix h(int x, int y) const;  // K^{x,y} -> K^{x+1,y}
    Matrix v(int x, int y) const;  // K^{x,y} -> K^{x,y+1}
};

// d_h² = 0, d_v² = 0 and d_h d_v + d_v d_h = 0, all maps homomorphisms.
bool check_double_complex(const DoubleComplex& k, std::string* why = nullptr);

// Hom(Q, U) over a CE resolution: cell (x, y) is Hom(Q^a_y, U) with x = −(c.lo + a),
// vertical maps twisted by (−1)^x.
struct DualCE {
    DoubleComplex k;
    std::map<std::pair<int, int>, DualImage> images;  // keyed by cell
};
DualCE dual_double_complex(const HomDual& d, const CEResolution& ce);

// Direct-sum total complex; the cells of each degree are stacked by ascending y.
struct TotalComplex {
    struct Block {
        int x, y;
        Index offset, size;
    };
    Complex complex;
    std::map<int, std::vector<Block>> blocks;

    // First coordinate of F^p T^s (cells with y >= p).
    Index start(int s, int p) const;
    Vector embed(int s, int x, int y, const Vector& v) const;
    Vector component(int s, int x, int y, const Vector& v) const;
};
TotalComplex total_complex(const DoubleComplex& k);

// E_r^{p,q} = Z_r^p / (Z_{r-1}^{p+1} + B_{r-1}^p) in total degree s = p+q.
struct Page {
    int r = 2;  // 0 for the limit page
    std::map<std::pair<int, int>, SubQuot> cells;  // keyed by (p, q)
    std::map<std::pair<int, int>, Matrix> diffs;   // d_r out of (p, q), when the target is in the window
    FinModule cell(int p, int q) const { return cells.at({p, q}).module; }
};

class RowSpectral {
public:
    RowSpectral(TotalComplex t, int p_lo, int p_hi, int q_lo, int q_hi);

    const TotalComplex& total() const { return t_; }
    int p_lo() const { return p_lo_; }
    int p_hi() const { return p_hi_; }
    int q_lo() const { return q_lo_; }
    int q_hi() const { return q_hi_; }

    // Z_r^p in T^s as columns; r < 0 stands for r = ∞.
    const Matrix& z(int s, int p, int r) const;
    Matrix b(int s, int p, int r) const;
    Page page(int r) const;
    Page limit() const;
    const SubQuot& cohomology(int s) const;
    // F^p H^s as columns in H^s coordinates.
    Matrix filtration(int s, int p) const;
    // Class in E_r^{p,q} of an x in F^p T^{p+q}, corrected by F^{p+1}.
    Vector page_class(const Page& pg, int p, int q, const Vector& x) const;
    // A cycle in F^p congruent to z ∈ Z_r^p modulo Z_{r-1}^{p+1}, for a class that survives.
    Vector cycle_rep(int r, int p, int q, const Vector& z) const;

private:
    TotalComplex t_;
    int p_lo_, p_hi_, q_lo_, q_hi_;
    mutable std::map<std::array<int, 3>, Matrix> zc_;
    mutable std::map<int, SubQuot> hc_;
};

// The second spectral sequence of a pair of duals at a module a:
// P ↠ a free, C = σ_{≤n} first(P), Q a CE resolution of C and K = second(Q).
// E_2^{p,q} ≅ R^p second R^{−q} first (a) and the abutment is H^*(second(first(P))).
struct SecondSpectral {
    int n_first = 0, n_second = 0;
    HomDual first, second;
    FinModule a;
    Resolution res;
    DualComplex d;
    Truncation trunc;
    std::vector<DerivedDualTerm> r_first;  // R^j first(a), j = 0..n_first
    CEResolution ce;
    DualCE dual;
    std::shared_ptr<RowSpectral> ss;
    std::vector<Page> pages;  // r = 2, 3, ...
    Page lim;
    int stable = 2;
    ModuleMap unit;  // a -> H^0(Tot)

    const Page& page(int r) const;
    // R^p second(R^j first(a)) on the models of derived_dual_term -> E_2^{p,−j}.
    ModuleMap e2_witness(int p, int j) const;
    // Images in H^{p+q} of classes of E_r^{p,q} that survive; well defined modulo F^{p+1}.
    Matrix to_abutment(int r, int p, int q, const Matrix& classes) const;
    bool unit_invertible() const { return is_invertible(unit.m); }
    // A_p = unit^{-1}(F^p H^0) as columns in a, for an invertible unit.
    Matrix filtration_of_a(int p) const;
};

// window widens the grid to p <= window and q >= -window.
SecondSpectral second_spectral(const HomDual& first, const HomDual& second, const FinModule& a, int n_first, int n_second,
                               int window = 0);
SecondSpectral second_spectral(const DualityContext& ctx, const FinModule& a);
// The same with the roles of the duals exchanged, for a right module b.
SecondSpectral second_spectral_right(const DualityContext& ctx, const FinModule& b);

}  // namespace cotilt
