#ifndef TSQ_NUMERIC_HPP
#define TSQ_NUMERIC_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <vector>

namespace tsq {

// Exact scalars. Nothing in this library computes with floating point.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

RatVector toRational(const IntVector& v);
RatMatrix toRational(const IntMatrix& m);

/// Scale a nonzero rational vector by a positive rational so that the entries
/// become coprime integers; direction is preserved. The zero vector maps to
/// itself.
IntVector primitivePart(const RatVector& v);
IntVector primitivePart(const IntVector& v);

/// Sign-normalized primitive form (first nonzero entry positive); used where a
/// vector stands for an unoriented hyperplane or basis element.
IntVector primitiveSignNormalized(const RatVector& v);

bool lexLess(const IntVector& a, const IntVector& b);
bool lexLess(const RatVector& a, const RatVector& b);

std::string rationalToString(const Rat& x); // "p" or "p/q", q > 0, gcd(p,q)=1
Rat rationalFromString(const std::string& s);

} // namespace tsq

#endif
