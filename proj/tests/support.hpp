// Shared generators and brute-force oracles for the test suites. The oracles
// are written from the definitions and never call the routine they check.
#ifndef SCLAB_TESTS_SUPPORT_HPP
#define SCLAB_TESTS_SUPPORT_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "sclab/automata.hpp"
#include "sclab/tableau.hpp"

namespace sclab::testing {

using Rng = std::mt19937_64;

inline Dfa random_dfa(Rng& rng, std::size_t states, const Alphabet& sigma, double final_ratio = 0.4)
{
    std::uniform_int_distribution<State> target(0, static_cast<State>(states - 1));
    std::bernoulli_distribution final_coin(final_ratio);
    std::vector<State> delta(states * sigma.size());
    for (auto& t : delta)
        t = target(rng);
    std::vector<bool> finals(states);
    for (std::size_t q = 0; q < states; ++q)
        finals[q] = final_coin(rng);
    return Dfa(sigma, states, 0, std::move(finals), std::move(delta));
}

inline Nfa random_nfa(Rng& rng, std::size_t states, const Alphabet& sigma, double edge_ratio = 0.3)
{
    std::bernoulli_distribution coin(edge_ratio);
    std::bernoulli_distribution half(0.5);
    std::vector<StateSet> delta(states * sigma.size());
    for (auto& img : delta)
        for (State t = 0; t < states; ++t)
            if (coin(rng))
                img.push_back(t);
    StateSet initials, finals;
    for (State q = 0; q < states; ++q) {
        if (q == 0 || coin(rng))
            initials.push_back(q);
        if (half(rng))
            finals.push_back(q);
    }
    return Nfa(sigma, states, std::move(initials), std::move(finals), std::move(delta));
}

/// Calls f on every word over `letters` symbols of length <= max_len,
/// shortest first.
inline void for_each_word(std::size_t letters, std::size_t max_len,
                          const std::function<void(const Word&)>& f)
{
    Word w;
    std::function<void(std::size_t)> rec = [&](std::size_t len) {
        if (w.size() == len) {
            f(w);
            return;
        }
        for (Symbol s = 0; s < letters; ++s) {
            w.push_back(s);
            rec(len);
            w.pop_back();
        }
    };
    for (std::size_t len = 0; len <= max_len; ++len)
        rec(len);
}

/// Direct simulation without any library helper.
inline bool run_dfa(const Dfa& d, const Word& w)
{
    State q = d.initial();
    for (Symbol s : w)
        q = d.next(q, s);
    return d.is_final(q);
}

/// Residual acceptance from an arbitrary state.
inline bool run_from(const Dfa& d, State q, const Word& w)
{
    for (Symbol s : w)
        q = d.next(q, s);
    return d.is_final(q);
}

/// Literal reading of the right-triangle definition: three marked cells
/// (j,k), (j,k2), (j2,k) with (j2,k2) unmarked, j != j2 and k != k2.
inline bool has_right_triangle(const Tableau& t)
{
    for (std::size_t j = 0; j < t.rows(); ++j)
        for (std::size_t j2 = 0; j2 < t.rows(); ++j2)
            for (std::size_t k = 0; k < t.cols(); ++k)
                for (std::size_t k2 = 0; k2 < t.cols(); ++k2)
                    if (j != j2 && k != k2 && t.marked(j, k) && t.marked(j, k2) &&
                        t.marked(j2, k) && !t.marked(j2, k2))
                        return true;
    return false;
}

/// Intersection of all triangle-free supersets of t, by enumerating every
/// superset of its cells.
inline Tableau saturate_by_intersection(const Tableau& t)
{
    const std::size_t cells = t.cell_count();
    const CellMask full = cells == 64 ? ~CellMask(0) : (CellMask(1) << cells) - 1;
    const CellMask free = full & ~t.bits();
    CellMask meet = full;
    for (CellMask sub = free;; sub = (sub - 1) & free) {
        Tableau candidate(t.rows(), t.cols(), t.bits() | sub);
        if (!has_right_triangle(candidate))
            meet &= candidate.bits();
        if (sub == 0)
            break;
    }
    return Tableau(t.rows(), t.cols(), meet);
}

/// Triangle-free tableaux by exhaustive filtering of all 2^(np) grids.
inline std::vector<CellMask> saturated_by_filter(std::size_t rows, std::size_t cols)
{
    std::vector<CellMask> out;
    const CellMask limit = CellMask(1) << (rows * cols);
    for (CellMask bits = 0; bits < limit; ++bits)
        if (!has_right_triangle(Tableau(rows, cols, bits)))
            out.push_back(bits);
    return out;
}

/// Random minimal DFA with exactly `states` states, obtained by rejection.
inline Dfa random_minimal_dfa(Rng& rng, std::size_t states, const Alphabet& sigma)
{
    for (;;) {
        Dfa m = minimize(random_dfa(rng, states, sigma, 0.5));
        if (m.state_count() == states)
            return m;
    }
}

} // namespace sclab::testing

#endif
