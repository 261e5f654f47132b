#include "sclab/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sclab {

namespace {

// The signed factorial sums below must come out integral and, where they
// count tableaux, nonnegative. A violation is an arithmetic bug.
BigInt require_integer(const BigRational& x, const char* what)
{
    if (boost::multiprecision::denominator(x) != 1)
        throw std::logic_error(std::string(what) + ": non-integral result");
    return boost::multiprecision::numerator(x);
}

BigRational ratio(const BigInt& num, const BigInt& den) { return BigRational(num, den); }

void partitions_into(unsigned remaining, unsigned max_part, std::vector<unsigned>& prefix,
                     std::vector<IntegerPartition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_into(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

// Stirling numbers of the second kind S(i, j) for 0 <= j <= i <= n.
std::vector<std::vector<BigInt>> stirling_table(unsigned n)
{
    std::vector<std::vector<BigInt>> s(n + 1);
    s[0] = {1};
    for (unsigned i = 1; i <= n; ++i) {
        s[i].assign(i + 1, 0);
        for (unsigned j = 1; j <= i; ++j) {
            BigInt stay = j < i ? BigInt(j) * s[i - 1][j] : BigInt(0);
            s[i][j] = s[i - 1][j - 1] + stay;
        }
    }
    return s;
}

void require_positive(unsigned n, unsigned p)
{
    if (n == 0 || p == 0)
        throw NonPositiveDimension("alpha_prime needs n >= 1 and p >= 1");
}

} // namespace

// --------------------------------------------------------- IntegerPartition

IntegerPartition::IntegerPartition(std::vector<unsigned> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw InvalidArgument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidArgument("partition parts must be non-increasing");
        weight_ += parts_[i];
    }
}

std::map<unsigned, unsigned> IntegerPartition::multiplicities() const
{
    std::map<unsigned, unsigned> mult;
    for (unsigned part : parts_)
        ++mult[part];
    return mult;
}

std::string to_string(const IntegerPartition& lambda)
{
    std::string out = "[";
    for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
        if (i > 0)
            out += ",";
        out += std::to_string(lambda.parts()[i]);
    }
    return out + "]";
}

// ------------------------------------------------------------ IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(BigInt c) { return IntPolynomial({std::move(c)}); }

IntPolynomial IntPolynomial::monomial(std::size_t degree, BigInt c)
{
    std::vector<BigInt> coeffs(degree + 1, 0);
    coeffs[degree] = std::move(c);
    return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t power) const
{
    return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

BigInt IntPolynomial::evaluate(const BigInt& t) const
{
    BigInt value = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        value = value * t + *it;
    return value;
}

IntPolynomial IntPolynomial::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<BigInt> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * i;
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const
{
    IntPolynomial result = constant(1);
    IntPolynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u)
            result = result * base;
        exponent >>= 1;
        if (exponent > 0)
            base = base * base;
    }
    return result;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs)
{
    if (lhs.is_zero() || rhs.is_zero())
        return {};
    std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& p)
{
    std::vector<BigInt> out = p.coeffs_;
    for (auto& x : out)
        x *= c;
    return IntPolynomial(std::move(out));
}

std::string to_string(const IntPolynomial& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (std::size_t d = p.coeffs().size(); d-- > 0;) {
        const BigInt& c = p.coeffs()[d];
        if (c == 0)
            continue;
        BigInt magnitude = c < 0 ? BigInt(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (magnitude != 1 || d == 0)
            out += magnitude.str();
        if (d >= 1)
            out += "t";
        if (d >= 2)
            out += "^" + std::to_string(d);
    }
    return out;
}

// ------------------------------------------------------------- partitions

std::vector<IntegerPartition> partitions(unsigned n)
{
    std::vector<IntegerPartition> out;
    std::vector<unsigned> prefix;
    partitions_into(n, n, prefix, out);
    return out;
}

BigInt factorial(unsigned n)
{
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

BigInt binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    BigInt c = 1;
    for (unsigned i = 0; i < k; ++i)
        c = c * (n - i) / (i + 1);
    return c;
}

BigInt partition_factorial(const IntegerPartition& lambda)
{
    BigInt f = 1;
    for (unsigned part : lambda.parts())
        f *= factorial(part);
    for (const auto& [part, mult] : lambda.multiplicities())
        f *= factorial(mult);
    return f;
}

// ---------------------------------------------------------------- sequences

std::vector<BigInt> bell(unsigned k)
{
    // Bell triangle: each row starts with the last entry of the previous one.
    std::vector<BigInt> out{1};
    std::vector<BigInt> row{1};
    for (unsigned n = 1; n <= k; ++n) {
        std::vector<BigInt> next{row.back()};
        for (const auto& x : row)
            next.push_back(next.back() + x);
        out.push_back(next.front());
        row = std::move(next);
    }
    return out;
}

BigInt stirling2(unsigned n, unsigned k)
{
    if (k > n)
        throw InvalidArgument("stirling2 needs k <= n");
    return stirling_table(n)[n][k];
}

std::vector<BigInt> rao(unsigned k)
{
    const auto s = stirling_table(k);
    std::vector<BigInt> out;
    for (unsigned n = 0; n <= k; ++n) {
        BigInt r = 0;
        for (unsigned j = 0; j <= n; ++j)
            r += (j % 2 == 0) ? s[n][j] : BigInt(-s[n][j]);
        out.push_back(r);
    }
    return out;
}

std::vector<BigInt> a296(unsigned k)
{
    // Inverse binomial transform of the Bell numbers.
    const auto b = bell(k);
    std::vector<BigInt> out;
    for (unsigned n = 0; n <= k; ++n) {
        BigInt a = 0;
        for (unsigned i = 0; i <= n; ++i) {
            BigInt term = binomial(n, i) * b[i];
            a += ((n - i) % 2 == 0) ? term : BigInt(-term);
        }
        out.push_back(a);
    }
    return out;
}

BigInt complete_bell(unsigned n, std::span<const BigInt> weights)
{
    if (weights.size() < n)
        throw InvalidArgument("complete_bell needs a weight for every block size up to n");
    const BigInt n_fact = factorial(n);
    BigInt total = 0;
    for (const auto& lambda : partitions(n)) {
        BigInt term = n_fact / partition_factorial(lambda);
        for (unsigned part : lambda.parts())
            term *= weights[part - 1];
        total += term;
    }
    return total;
}

// ------------------------------------------------------- tableau counting

IntPolynomial p_lambda(const IntegerPartition& lambda)
{
    IntPolynomial p;
    for (unsigned part : lambda.parts())
        p += IntPolynomial::monomial(part);
    return p;
}

IntPolynomial alpha_poly(unsigned n, unsigned p)
{
    // alpha_{n,p}(t) = -n! sum_i r_{n-i+1} / (n-i)! sum_{lambda |- i} (1 + P_lambda(t))^p / lambda!
    const auto r = rao(n + 1);
    const BigInt n_fact = factorial(n);
    const IntPolynomial one = IntPolynomial::constant(1);

    std::vector<BigRational> acc;
    for (unsigned i = 0; i <= n; ++i) {
        const BigInt& rao_term = r[n - i + 1];
        if (rao_term == 0)
            continue;
        for (const auto& lambda : partitions(i)) {
            BigRational scale =
                -ratio(n_fact * rao_term, factorial(n - i) * partition_factorial(lambda));
            const IntPolynomial power = (one + p_lambda(lambda)).pow(p);
            if (acc.size() < power.coeffs().size())
                acc.resize(power.coeffs().size(), BigRational(0));
            for (std::size_t d = 0; d < power.coeffs().size(); ++d)
                acc[d] += scale * BigRational(power.coeffs()[d]);
        }
    }

    std::vector<BigInt> coeffs;
    for (const auto& c : acc) {
        BigInt v = require_integer(c, "alpha_poly");
        if (v < 0)
            throw std::logic_error("alpha_poly: negative coefficient");
        coeffs.push_back(std::move(v));
    }
    return IntPolynomial(std::move(coeffs));
}

BigInt alpha(unsigned n, unsigned p) { return alpha_poly(n, p).evaluate(1); }

BigInt alpha_by_partition_sum(unsigned n, unsigned p)
{
    // Every lambda of weight w <= n and length k contributes
    // r_{n-w+1} (k+1)^p / (lambda! (n-w)!).
    const auto r = rao(n + 1);
    BigRational sum = 0;
    for (unsigned w = 0; w <= n; ++w)
        for (const auto& lambda : partitions(w)) {
            BigInt power = boost::multiprecision::pow(BigInt(lambda.length() + 1), p);
            sum += ratio(r[n - w + 1] * power, partition_factorial(lambda) * factorial(n - w));
        }
    return require_integer(-BigRational(factorial(n)) * sum, "alpha_by_partition_sum");
}

BigInt alpha_prime(unsigned n, unsigned p)
{
    require_positive(n, p);
    const BigInt marked_cells = alpha_poly(n, p).derivative().evaluate(1);
    return require_integer(BigRational(marked_cells, BigInt(n) * p), "alpha_prime");
}

BigInt alpha_prime_by_partition_sum(unsigned n, unsigned p)
{
    require_positive(n, p);
    // P'_lambda(1) is the weight i of lambda and P_lambda(1) its length.
    const auto r = rao(n + 1);
    BigRational sum = 0;
    for (unsigned i = 0; i <= n; ++i) {
        BigRational inner = 0;
        for (const auto& lambda : partitions(i)) {
            BigInt power = boost::multiprecision::pow(BigInt(lambda.length() + 1), p - 1);
            inner += ratio(BigInt(i) * power, partition_factorial(lambda));
        }
        sum += BigRational(r[n - i + 1], factorial(n - i)) * inner;
    }
    return require_integer(-BigRational(factorial(n - 1)) * sum, "alpha_prime_by_partition_sum");
}

BigInt kappa(const IntegerPartition& lambda, unsigned i, unsigned j)
{
    return (IntPolynomial::constant(1) + p_lambda(lambda)).pow(i).coefficient(j);
}

BigInt union_count(unsigned m, unsigned n, unsigned p)
{
    if (m == 0 || n == 0 || p == 0)
        throw InvalidArgument("union_count needs m, n, p >= 1");
    BigInt two_n = BigInt(1) << n;
    BigInt two_p = BigInt(1) << p;
    return BigInt(m - 1) * ((two_n - 1) * (two_p - 1) + 1) + (two_n / 2) * (two_p / 2);
}

} // namespace sclab
