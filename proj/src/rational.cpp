#include "norton/rational.hpp"

#include <cassert>
#include <stdexcept>

namespace norton {

std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Vector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].get_str();
    }
    return out + ")";
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Vector operator+(const Vector& a, const Vector& b) {
    assert(a.size() == b.size());
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vector operator-(const Vector& a, const Vector& b) {
    assert(a.size() == b.size());
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vector operator*(const Rational& s, const Vector& v) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

Vector hadamard(const Vector& a, const Vector& b) {
    assert(a.size() == b.size());
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

Rational dot(const Vector& a, const Vector& b) {
    assert(a.size() == b.size());
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational rational_pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("0 to a negative power");
        return 1 / rational_pow(base, -exponent);
    }
    Rational result = 1;
    Rational b = base;
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

} // namespace norton
