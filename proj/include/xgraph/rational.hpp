#ifndef XGRAPH_RATIONAL_HPP
#define XGRAPH_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "xgraph/errors.hpp"

namespace xgraph {

using BigInt = boost::multiprecision::cpp_int;
// Always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Exact complex number re + im*i with rational parts. All arithmetic is
// exact; there is no rounding anywhere in this type.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(long long r) : re(r) {}
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw input_error("division by zero");
        Rational n = o.re * o.re + o.im * o.im;
        Rational r = (re * o.re + im * o.im) / n;
        Rational i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) {
        return GaussianRational(-a.re, -a.im);
    }

    // |z|^2, exact.
    Rational norm() const { return re * re + im * im; }

    // "1", "-1", "i", "-i", "1/2", "3-1/2i", ...
    std::string str() const;

    // Unambiguous fixed-format key, used in canonical encodings.
    std::string key() const { return re.str() + "," + im.str(); }

    // Deterministic total order (componentwise); not the complex order,
    // just a tie-break for sorting.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

inline std::string GaussianRational::str() const {
    auto imag_part = [](const Rational& v) -> std::string {
        if (v == 1) return "i";
        if (v == -1) return "-i";
        return v.str() + "i";
    };
    if (im == 0) return re.str();
    if (re == 0) return imag_part(im);
    std::string s = re.str();
    if (im > 0) s += "+";
    return s + imag_part(im);
}

}

#endif
