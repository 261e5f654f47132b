// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sclab/combinatorics.hpp"
#include "sclab/complexity.hpp"
#include "sclab/tableau.hpp"
#include "sclab/witness.hpp"
#include "support.hpp"

using namespace sclab;
using namespace sclab::testing;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool condition, const std::string& what)
    {
        if (condition || !ok)
            return;
        ok = false;
        detail.str("");
        detail << "first failure: " << what;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class T>
std::string str(const T& v)
{
    std::ostringstream s;
    s << v;
    return s.str();
}

// 1. Closed forms against enumeration.
void criterion_1(Check& c)
{
    const auto start = Clock::now();
    int shapes = 0;
    for (unsigned n = 1; n <= 20; ++n)
        for (unsigned p = 1; n * p <= 20; ++p) {
            ++shapes;
            const std::uint64_t all = count_saturated(n, p, 20);
            const std::uint64_t origin = count_saturated_with_origin(n, p, 20);
            c.expect(alpha(n, p) == all, "alpha(" + str(n) + "," + str(p) + ") = " +
                                             str(alpha(n, p)) + ", enumeration " + str(all));
            c.expect(alpha_prime(n, p) == origin, "alpha_prime(" + str(n) + "," + str(p) + ") = " +
                                                      str(alpha_prime(n, p)) + ", enumeration " +
                                                      str(origin));
        }
    if (c.ok)
        c.detail << shapes << " shapes with np <= 20, " << seconds_since(start) << " s";
}

// 2. Table of alpha(n, p), n = 2..7, p = 0..n.
void criterion_2(Check& c)
{
    const std::vector<std::vector<const char*>> table{
        {"1", "4", "12"},
        {"1", "8", "34", "128"},
        {"1", "16", "96", "466", "2100"},
        {"1", "32", "274", "1688", "9226", "48032"},
        {"1", "64", "792", "6154", "40356", "245554", "1444212"},
        {"1", "128", "2314", "22688", "177466", "1251128", "8380114", "54763088"},
    };
    for (unsigned n = 2; n <= 7; ++n)
        for (unsigned p = 0; p <= n; ++p) {
            const BigInt expected(table[n - 2][p]);
            c.expect(alpha(n, p) == expected, "alpha(" + str(n) + "," + str(p) + ") = " +
                                                  str(alpha(n, p)) + ", table " + table[n - 2][p]);
        }
    if (c.ok)
        c.detail << "33 entries";
}

// 3. Generating polynomial.
void criterion_3(Check& c)
{
    const IntPolynomial expected({1, 12, 66, 148, 135, 48, 36, 12, 3, 4, 0, 0, 1});
    c.expect(alpha_poly(3, 4) == expected, "alpha_poly(3,4) = " + to_string(alpha_poly(3, 4)));
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned p = 1; p <= 6; ++p)
            c.expect(alpha_poly(n, p) == alpha_poly(p, n),
                     "alpha_poly asymmetric at (" + str(n) + "," + str(p) + ")");
    if (c.ok)
        c.detail << "alpha_poly(3,4) = " << to_string(expected);
}

// 4. Integer sequences.
void criterion_4(Check& c)
{
    auto same = [](const std::vector<BigInt>& got, std::initializer_list<long long> want) {
        return got == std::vector<BigInt>(want.begin(), want.end());
    };
    c.expect(same(bell(10), {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975}), "Bell prefix");
    c.expect(same(a296(11), {1, 0, 1, 1, 4, 11, 41, 162, 715, 3425, 17722, 98253}), "A000296 prefix");
    c.expect(same(rao(13), {1, -1, 0, 1, 1, -2, -9, -9, 50, 267, 413, -2180, -17731, -50533}),
             "Rao prefix");
    const auto b = bell(14);
    const auto a = a296(14);
    for (unsigned n = 0; n <= 14; ++n) {
        BigInt sum = 0;
        for (unsigned i = 0; i <= n; ++i)
            sum += binomial(n, i) * a[i];
        c.expect(sum == b[n], "binomial transform fails at n = " + str(n));
    }
    if (c.ok)
        c.detail << "prefixes exact, B_n = sum C(n,i) a_i for n <= 14";
}

// 5. Exact complexity of catenation with symmetric difference on the witness.
void criterion_5(Check& c)
{
    double slowest = 0;
    for (unsigned m : {3u, 4u})
        for (unsigned n : {3u, 4u})
            for (unsigned p : {3u, 4u}) {
                const auto start = Clock::now();
                const VerificationReport r = verify(m, n, p, BooleanOp::symmetric_difference());
                slowest = std::max(slowest, seconds_since(start));
                const BigInt formula = BigInt(m - 1) * alpha(n, p) + alpha_prime(n, p);
                c.expect(BigInt(r.computed_sc) == formula,
                         "(" + str(m) + "," + str(n) + "," + str(p) + "): computed " +
                             str(r.computed_sc) + ", formula " + str(formula));
                c.expect(slowest < 60, "case exceeded 60 s");
            }
    if (c.ok)
        c.detail << "8 cases, (4,4,4) = " << BigInt(3) * alpha(4, 4) + alpha_prime(4, 4)
                 << ", slowest " << slowest << " s";
}

// 6. Accessibility of the combined automaton.
void criterion_6(Check& c)
{
    const WitnessTriple w = witness_triple(3, 3, 3);
    const CombinedAutomaton d = build_combined_states(w.a, w.b, w.c, BooleanOp::symmetric_difference());
    const std::size_t accessible = d.dfa.state_count();
    const std::uint64_t census = saturated_state_census(d);
    const std::size_t minimal = minimize(d.dfa).state_count();
    c.expect(accessible == 2 * 512 + 256, "accessible states " + str(accessible));
    c.expect(census == 299, "saturated census " + str(census));
    c.expect(minimal == 299, "minimized size " + str(minimal));
    if (c.ok)
        c.detail << "accessible " << accessible << ", census " << census << ", minimal " << minimal;
}

// 7. Upper bounds on random minimal triples.
void criterion_7(Check& c)
{
    Rng rng(20240607);
    const Alphabet two("ab");
    const Alphabet four("abcd");
    std::size_t max_xor = 0, max_and = 0, max_or = 0;
    const int triples = 120;
    for (int trial = 0; trial < triples; ++trial) {
        const Alphabet& sigma = trial % 2 ? four : two;
        const Dfa a = random_minimal_dfa(rng, 3, sigma);
        const Dfa b = random_minimal_dfa(rng, 3, sigma);
        const Dfa cc = random_minimal_dfa(rng, 3, sigma);
        const std::size_t x = minimize(build_combined(a, b, cc, BooleanOp::symmetric_difference())).state_count();
        const std::size_t i = minimize(build_combined(a, b, cc, BooleanOp::intersection())).state_count();
        const std::size_t u = minimize(build_combined(a, b, cc, BooleanOp::union_op())).state_count();
        max_xor = std::max(max_xor, x);
        max_and = std::max(max_and, i);
        max_or = std::max(max_or, u);
        c.expect(x <= 299, "xor triple " + str(trial) + " has " + str(x) + " states");
        c.expect(i <= 1280, "and triple " + str(trial) + " has " + str(i) + " states");
        c.expect(u <= 116, "or triple " + str(trial) + " has " + str(u) + " states");
    }
    if (c.ok)
        c.detail << triples << " triples, maxima xor " << max_xor << "/299, and " << max_and
                 << "/1280, or " << max_or << "/116";
}

// 8. Direct construction against the generic pipeline.
void criterion_8(Check& c)
{
    const WitnessTriple w = witness_triple(3, 3, 3);
    for (BooleanOp op : non_degenerate_ops()) {
        const Dfa direct = minimize(build_combined(w.a, w.b, w.c, op));
        const Dfa generic =
            minimize(determinize(catenate(w.a, boolean_product(w.b, w.c, op))));
        c.expect(equivalent(direct, generic), std::string("languages differ for ") + std::string(op.name()));
        c.expect(direct.state_count() == generic.state_count(),
                 std::string("sizes differ for ") + std::string(op.name()));
    }
    if (c.ok)
        c.detail << "10 operations equivalent";
}

// 9. Saturation properties.
void criterion_9(Check& c)
{
    Rng rng(9);
    std::uint64_t checked = 0;
    for (std::size_t rows = 1; rows <= 16; ++rows)
        for (std::size_t cols = 1; rows * cols <= 16; ++cols) {
            const std::size_t cells = rows * cols;
            const bool exhaustive = cells <= 9;
            const CellMask limit = CellMask(1) << cells;
            std::uniform_int_distribution<CellMask> any(0, limit - 1);
            const std::uint64_t samples = exhaustive ? limit : 48;
            for (std::uint64_t i = 0; i < samples; ++i) {
                // Sparse samples keep the superset oracle affordable.
                CellMask bits = exhaustive ? i : any(rng) & any(rng) & any(rng);
                const Tableau t(rows, cols, bits);
                const Tableau s = saturate(t);
                const std::string at = " at " + str(rows) + "x" + str(cols) + " bits " + str(bits);
                c.expect(s.contains(t), "not extensive" + at);
                c.expect(saturate(s) == s, "not idempotent" + at);
                c.expect(s == saturate_by_intersection(t), "not the least saturated superset" + at);
                Tableau grown = t;
                grown.mark(i % rows, (i / rows) % cols);
                c.expect(saturate(grown).contains(s), "not monotone" + at);
                Tableau scheduled = t;
                for (auto todo = completing_cells(scheduled); !todo.empty();
                     todo = completing_cells(scheduled)) {
                    std::uniform_int_distribution<std::size_t> pick(0, todo.size() - 1);
                    const auto [j, k] = todo[pick(rng)];
                    scheduled.mark(j, k);
                }
                c.expect(scheduled == s, "schedule dependent" + at);
                ++checked;
            }
        }

    std::uint64_t final_checks = 0;
    for (std::size_t rows = 1; rows <= 3; ++rows)
        for (std::size_t cols = 1; cols <= 3; ++cols)
            for (std::uint64_t fr = 0; fr < (1u << rows); ++fr)
                for (std::uint64_t fc = 0; fc < (1u << cols); ++fc)
                    for (CellMask bits = 0; bits < (CellMask(1) << (rows * cols)); ++bits) {
                        const Tableau t(rows, cols, bits);
                        c.expect(is_final_tableau(t, fr, fc) == is_final_tableau(saturate(t), fr, fc),
                                 "finality changed at " + str(rows) + "x" + str(cols));
                        ++final_checks;
                    }
    if (c.ok)
        c.detail << checked << " tableaux against the oracles, " << final_checks << " finality cases";
}

// 10. Coefficients of 1 / (1 - (1 + P_lambda(t)) x) against word counting.
void criterion_10(Check& c)
{
    c.expect(kappa(IntegerPartition({2, 1, 1}), 2, 2) == 6, "kappa([2,1,1],2,2) != 6");
    std::uint64_t compared = 0;
    for (unsigned size = 0; size <= 4; ++size)
        for (const IntegerPartition& lambda : partitions(size)) {
            // Letters: the empty column and one column per block, weighted
            // by the number of cells they mark.
            std::vector<unsigned> weights{0};
            for (unsigned part : lambda.parts())
                weights.push_back(part);
            const unsigned max_len = 4;
            std::vector<std::vector<std::uint64_t>> counts(max_len + 1,
                                                           std::vector<std::uint64_t>(max_len * size + 1));
            std::function<void(unsigned, unsigned)> walk = [&](unsigned len, unsigned weight) {
                ++counts[len][weight];
                if (len == max_len)
                    return;
                for (unsigned w : weights)
                    walk(len + 1, weight + w);
            };
            walk(0, 0);
            for (unsigned i = 0; i <= max_len; ++i)
                for (unsigned j = 0; j <= max_len * size; ++j) {
                    c.expect(kappa(lambda, i, j) == counts[i][j],
                             "kappa(" + to_string(lambda) + "," + str(i) + "," + str(j) + ") = " +
                                 str(kappa(lambda, i, j)) + ", words " + str(counts[i][j]));
                    ++compared;
                }
        }
    if (c.ok)
        c.detail << compared << " coefficients for every shape of size <= 4";
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, void (*)(Check&)>> criteria{
        {"formula equals brute-force counts for np <= 20", criterion_1},
        {"alpha table for n = 2..7", criterion_2},
        {"alpha_poly(3,4) expansion and symmetry", criterion_3},
        {"Bell, A000296 and Rao prefixes", criterion_4},
        {"sc of catenation with symmetric difference on witnesses in {3,4}^3", criterion_5},
        {"accessible states and saturated census at (3,3,3)", criterion_6},
        {"upper bounds on random minimal (3,3,3) triples", criterion_7},
        {"combined construction matches generic pipeline", criterion_8},
        {"saturation properties", criterion_9},
        {"kappa coefficients against word counting", criterion_10},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail.str("");
            c.detail << "exception: " << e.what();
        }
        failures += !c.ok;
        std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].first
                  << " (" << c.detail.str() << ")" << std::endl;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
