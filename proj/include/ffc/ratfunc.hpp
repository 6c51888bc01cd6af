#ifndef FFC_RATFUNC_HPP
#define FFC_RATFUNC_HPP

#include "ffc/poly.hpp"

namespace ffc {

/// Element of K = F_q(x), kept in lowest terms with monic denominator.
class RationalFunction {
  public:
    RationalFunction() = default;
    explicit RationalFunction(const Poly& num)
        : num_(num), den_(Poly::one(num.field())) {}
    RationalFunction(const Poly& num, const Poly& den) : num_(num), den_(den) { normalize(); }

    static RationalFunction zero(const FieldPtr& F) {
        return RationalFunction(Poly::zero(F), Poly::one(F));
    }
    static RationalFunction x(const FieldPtr& F) { return RationalFunction(Poly::x(F)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FieldPtr& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    RationalFunction operator+(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.is_zero()) throw error(errc::division_by_zero, "division by zero function");
        return RationalFunction(num_ * o.den_, den_ * o.num_);
    }
    RationalFunction operator-() const { return RationalFunction(num_ * (-Fe::one(field())), den_); }

    RationalFunction pow(long long e) const {
        if (e < 0) return RationalFunction(Poly::one(field())) / pow(-e);
        RationalFunction r(Poly::one(field())), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    /// Ratio of leading coefficients; this is the value at infinity of
    /// g * x^{deg den - deg num}.
    Fe leading_ratio() const {
        if (is_zero()) throw error(errc::zero_argument, "leading ratio of zero");
        return num_.leading() / den_.leading();
    }

    /// The function g(1/s) as a rational function in s. The place at infinity
    /// of x becomes the place (s) of the chart, with matching valuations and
    /// unit parts; all local computations at infinity go through this.
    RationalFunction infinity_chart() const {
        if (is_zero()) return *this;
        int dn = num_.degree(), dd = den_.degree();
        Poly rn = num_.reversed(), rd = den_.reversed();
        Poly s = Poly::x(field());
        if (dd >= dn) {
            Poly spow = Poly::one(field());
            for (int i = 0; i < dd - dn; ++i) spow = spow * s;
            return RationalFunction(rn * spow, rd);
        }
        Poly spow = Poly::one(field());
        for (int i = 0; i < dn - dd; ++i) spow = spow * s;
        return RationalFunction(rn, rd * spow);
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw error(errc::division_by_zero, "zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::one(num_.field());
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Fe lc = den_.leading();
        if (!lc.is_one()) {
            Fe inv = lc.inverse();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Poly num_, den_;
};

/// w^p - w, the Artin-Schreier operator.
inline RationalFunction artin_schreier_op(const RationalFunction& w) {
    return w.pow(w.field()->p) - w;
}

} // namespace ffc

#endif
