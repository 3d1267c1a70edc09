// Exact field elements: rationals, or residues mod a prime.
#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cotilt {

class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : v_(v) {}
    Scalar(long v) : v_(v) {}
    explicit Scalar(const mpq_class& v, unsigned long p = 0) : v_(v), p_(p) { if (p_) reduce(); }

    static Scalar from_string(const std::string& s, unsigned long p = 0)
    {
        mpq_class q(s);
        q.canonicalize();
        return Scalar(q, p);
    }

    unsigned long modulus() const { return p_; }
    const mpq_class& value() const { return v_; }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar& operator+=(const Scalar& o) { unify(o); v_ += coerce(o); if (p_) reduce(); return *this; }
    Scalar& operator-=(const Scalar& o) { unify(o); v_ -= coerce(o); if (p_) reduce(); return *this; }
    Scalar& operator*=(const Scalar& o) { unify(o); v_ *= coerce(o); if (p_) reduce(); return *this; }
    Scalar& operator/=(const Scalar& o)
    {
        unify(o);
        Scalar d = o;
        if (p_ && !d.p_) d = Scalar(d.v_, p_);
        if (d.is_zero()) throw std::domain_error("division by zero");
        if (p_) *this *= d.inverse();
        else v_ /= d.v_;
        return *this;
    }

    Scalar inverse() const
    {
        if (is_zero()) throw std::domain_error("inverse of zero");
        if (!p_) return Scalar(mpq_class(1) / v_);
        mpz_class r;
        mpz_class pz(p_);
        mpz_invert(r.get_mpz_t(), v_.get_num().get_mpz_t(), pz.get_mpz_t());
        return Scalar(mpq_class(r), p_);
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { Scalar r(*this); r.v_ = -r.v_; if (p_) r.reduce(); return r; }

    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        if (a.p_ == b.p_) return a.v_ == b.v_;
        unsigned long p = a.p_ ? a.p_ : b.p_;
        return Scalar(a.v_, p).v_ == Scalar(b.v_, p).v_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    // Ordering is only meaningful over Q; Eigen wants it for pivot heuristics we never use.
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

    std::string str() const { return v_.get_str(); }
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    void unify(const Scalar& o)
    {
        if (o.p_ && p_ && o.p_ != p_) throw std::logic_error("mixed prime fields");
        if (o.p_ && !p_) { p_ = o.p_; reduce(); }
    }
    mpq_class coerce(const Scalar& o) const
    {
        if (p_ && !o.p_) return Scalar(o.v_, p_).v_;
        return o.v_;
    }
    void reduce()
    {
        mpz_class pz(p_);
        mpz_class num = v_.get_num();
        mpz_class den = v_.get_den();
        mpz_class dm;
        mpz_fdiv_r(dm.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
        if (dm == 0) throw std::domain_error("denominator vanishes mod " + std::to_string(p_));
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), dm.get_mpz_t(), pz.get_mpz_t());
        mpz_class r = num * inv;
        mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), pz.get_mpz_t());
        v_ = mpq_class(r);
    }

    mpq_class v_{0};
    unsigned long p_ = 0;
};

inline Scalar abs(const Scalar& s) { return s.modulus() || s >= Scalar(0) ? s : -s; }

// The ground field: Q (p = 0) or F_p.
struct Field {
    unsigned long p = 0;
    Scalar operator()(long v) const { return Scalar(mpq_class(v), p); }
    Scalar operator()(const mpq_class& v) const { return Scalar(v, p); }
    Scalar zero() const { return (*this)(0); }
    Scalar one() const { return (*this)(1); }
    bool is_rational() const { return p == 0; }
    std::string name() const { return p ? "Fp(" + std::to_string(p) + ")" : "Q"; }
    friend bool operator==(const Field&, const Field&) = default;
};

}  // namespace cotilt

namespace Eigen {
template <>
struct NumTraits<cotilt::Scalar> : GenericNumTraits<cotilt::Scalar> {
    typedef cotilt::Scalar Real;
    typedef cotilt::Scalar NonInteger;
    typedef cotilt::Scalar Nested;
    typedef cotilt::Scalar Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 32
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    static inline Real highest() { return Real(0); }
    static inline Real lowest() { return Real(0); }
};
}  // namespace Eigen
