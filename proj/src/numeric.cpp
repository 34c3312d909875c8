#include "tsq/numeric.hpp"

#include "tsq/errors.hpp"

#include <boost/multiprecision/gmp.hpp>

namespace tsq {

namespace {

Int vectorContent(const IntVector& v) {
    Int g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        g = boost::multiprecision::gcd(g, v[i]);
    return g;
}

} // namespace

RatVector toRational(const IntVector& v) {
    RatVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

RatMatrix toRational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
    return out;
}

IntVector primitivePart(const RatVector& v) {
    Int lcm = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        lcm = boost::multiprecision::lcm(lcm, Int(denominator(v[i])));
    IntVector scaled(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        scaled[i] = Int(numerator(v[i])) * (lcm / Int(denominator(v[i])));
    return primitivePart(scaled);
}

IntVector primitivePart(const IntVector& v) {
    Int g = vectorContent(v);
    if (g == 0) return v;
    IntVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

IntVector primitiveSignNormalized(const RatVector& v) {
    IntVector p = primitivePart(v);
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        if (p[i] < 0) p = -p;
        break;
    }
    return p;
}

bool lexLess(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

bool lexLess(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

std::string rationalToString(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

Rat rationalFromString(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw Error(ErrorKind::UsageError, "zero denominator in rational: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw Error(ErrorKind::UsageError, "malformed rational: " + s);
    }
}

} // namespace tsq
