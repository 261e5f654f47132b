#ifndef SCLAB_COMBINATORICS_HPP
#define SCLAB_COMBINATORICS_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sclab/error.hpp"

namespace sclab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Integer partition: a non-increasing sequence of positive parts.
class IntegerPartition {
public:
    IntegerPartition() = default;
    /// Throws InvalidArgument unless parts are positive and non-increasing.
    explicit IntegerPartition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    /// Number of parts.
    std::size_t length() const noexcept { return parts_.size(); }
    /// Sum of the parts.
    unsigned weight() const noexcept { return weight_; }
    /// part value -> number of occurrences
    std::map<unsigned, unsigned> multiplicities() const;

    friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;

private:
    std::vector<unsigned> parts_;
    unsigned weight_ = 0;
};

std::string to_string(const IntegerPartition& lambda);

/// Polynomial in t with exact integer coefficients, lowest degree first.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    static IntPolynomial constant(BigInt c);
    /// c * t^degree
    static IntPolynomial monomial(std::size_t degree, BigInt c = 1);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree of the zero polynomial is reported as 0.
    std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    BigInt coefficient(std::size_t power) const;

    BigInt evaluate(const BigInt& t) const;
    IntPolynomial derivative() const;
    IntPolynomial pow(unsigned exponent) const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
    friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& p);

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Human-readable form, highest degree first: "t^12 + 4t^9 + ... + 1".
std::string to_string(const IntPolynomial& p);

/// All partitions of n in reverse lexicographic order ([n] first,
/// [1,...,1] last). partitions(0) holds the empty partition only.
std::vector<IntegerPartition> partitions(unsigned n);

/// lambda! = (prod of part factorials) * (prod of multiplicity factorials).
/// n! / lambda! set partitions of {1..n} have shape lambda.
BigInt partition_factorial(const IntegerPartition& lambda);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Bell numbers B_0 .. B_k.
std::vector<BigInt> bell(unsigned k);
/// Rao Uppuluri-Carpenter numbers r_0 .. r_k, r_n = sum_j (-1)^j S(n, j).
std::vector<BigInt> rao(unsigned k);
/// Set partitions without singleton blocks, a_0 .. a_k.
std::vector<BigInt> a296(unsigned k);

/// Stirling number of the second kind. Throws InvalidArgument if k > n.
BigInt stirling2(unsigned n, unsigned k);

/// Complete Bell polynomial A_n evaluated at integer weights, where
/// weights[i - 1] is the weight a_i of a block of size i.
/// Throws InvalidArgument if fewer than n weights are given.
BigInt complete_bell(unsigned n, std::span<const BigInt> weights);

/// Sum of t^part over the parts of lambda.
IntPolynomial p_lambda(const IntegerPartition& lambda);

/// Generating polynomial of saturated n x p tableaux by marked-cell count.
IntPolynomial alpha_poly(unsigned n, unsigned p);

/// Number of saturated n x p tableaux, alpha_poly(n, p) at t = 1.
BigInt alpha(unsigned n, unsigned p);

/// Same count from the double sum over partitions grouped by weight and
/// length. Kept as an independent cross-check of alpha().
BigInt alpha_by_partition_sum(unsigned n, unsigned p);

/// Saturated n x p tableaux with cell (0, 0) marked, from the derivative of
/// alpha_poly at t = 1 divided by n p. Throws NonPositiveDimension.
BigInt alpha_prime(unsigned n, unsigned p);

/// Same count from the closed partition sum with P'_lambda(1).
/// Throws NonPositiveDimension.
BigInt alpha_prime_by_partition_sum(unsigned n, unsigned p);

/// Coefficient of x^i t^j in 1 / (1 - (1 + P_lambda(t)) x).
BigInt kappa(const IntegerPartition& lambda, unsigned i, unsigned j);

/// (m-1)((2^n - 1)(2^p - 1) + 1) + 2^(n-1) 2^(p-1). Throws InvalidArgument
/// unless m, n, p >= 1.
BigInt union_count(unsigned m, unsigned n, unsigned p);

} // namespace sclab

#endif
