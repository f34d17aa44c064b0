// Exact rational scalars, vectors and small dense matrices.
//
// Everything polyhedral in growthlab is computed over Q with GMP-backed
// rationals; floating point only enters when smooth potentials are
// evaluated or sampled.

#ifndef GROWTHLAB_RATIONAL_HPP
#define GROWTHLAB_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace growthlab {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Point or direction in Q^n. Components are always kept in lowest terms
/// by the GMP backend.
using RatVec = std::vector<Rational>;

/// Row-major dense matrix; rows()[i] is the i-th row.
using RatMatrix = std::vector<RatVec>;

// ---------------------------------------------------------------- scalars

/// Parses "p/q", "p" or a finite decimal such as "-1.25" exactly.
/// Throws Error(ParseError) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form; integers are written with denominator 1.
std::string to_string(const Rational& q);

double to_double(const Rational& q);
Rational floor(const Rational& q);
Rational ceil(const Rational& q);
bool is_integer(const Rational& q);

/// Exact rational value of a finite double.
Rational from_double(double x);

/// The rational with the smallest denominator in the closed interval
/// [lo, hi]; requires lo <= hi.
Rational simplest_between(Rational lo, Rational hi);

// ---------------------------------------------------------------- vectors

RatVec parse_ratvec(std::string_view comma_separated);
std::string to_string(const RatVec& v);

RatVec zeros(std::size_t n);
RatVec unit(std::size_t n, std::size_t i);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rational& s, const RatVec& v);
Rational dot(const RatVec& a, const RatVec& b);
Rational coordinate_sum(const RatVec& v);
bool is_zero(const RatVec& v);
bool is_integral(const RatVec& v);
std::vector<double> to_double(const RatVec& v);

/// Positive rational multiple of v whose entries are coprime integers.
/// The zero vector is returned unchanged.
RatVec primitive(const RatVec& v);

// ---------------------------------------------------------------- matrices

Rational determinant(RatMatrix m);
std::size_t rank(RatMatrix m);

/// Inverse of a square nonsingular matrix; throws Error(DegenerateInput)
/// when singular.
RatMatrix inverse(const RatMatrix& m);

RatVec apply(const RatMatrix& m, const RatVec& v);
RatMatrix transpose(const RatMatrix& m);

/// Basis of {x : m x = 0}, each vector made primitive.
std::vector<RatVec> nullspace(RatMatrix m, std::size_t cols);

/// Indices of a maximal linearly independent subset of the rows of m,
/// chosen greedily in order.
std::vector<std::size_t> independent_rows(const RatMatrix& m);

}  // namespace growthlab

#endif  // GROWTHLAB_RATIONAL_HPP
