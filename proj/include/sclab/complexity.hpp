#ifndef SCLAB_COMPLEXITY_HPP
#define SCLAB_COMPLEXITY_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sclab/automata.hpp"
#include "sclab/combinatorics.hpp"
#include "sclab/tableau.hpp"

namespace sclab {

/// Default bound on the number of states materialized by the combined
/// construction.
inline constexpr std::uint64_t default_state_budget = std::uint64_t(1) << 22;

/// State (i, S) of the combined automaton for M·(N∘P): i is a state of A and
/// S, a set of couples of states of B and C, is stored as a tableau.
/// Whenever i is final in A the cell (0, 0) is marked.
struct CombinedState {
    State a_state;
    Tableau tableau;

    friend bool operator==(const CombinedState&, const CombinedState&) = default;
};

/// Accessible part of the combined automaton together with the meaning of
/// each of its states (`states[q]` describes state q of `dfa`).
struct CombinedAutomaton {
    Dfa dfa;
    std::vector<CombinedState> states;
};

/// Builds the accessible part of the deterministic automaton recognizing
/// L(a) · (L(b) op L(c)) directly on (i, S) states, by BFS in alphabet
/// order. Throws AlphabetMismatch, and StateBudgetExceeded if more than
/// `budget` states are reached or if b and c have more than 64 state pairs.
CombinedAutomaton build_combined_states(const Dfa& a, const Dfa& b, const Dfa& c, BooleanOp op,
                                        std::uint64_t budget = default_state_budget);

Dfa build_combined(const Dfa& a, const Dfa& b, const Dfa& c, BooleanOp op,
                   std::uint64_t budget = default_state_budget);

enum class BaseOp { intersection, union_op, symmetric_difference };

std::string_view to_string(BaseOp base);

/// N op P = N' base P' with N' = complement of N iff complement_n, and
/// likewise for P.
struct OpDecomposition {
    BaseOp base;
    bool complement_n = false;
    bool complement_p = false;

    friend bool operator==(const OpDecomposition&, const OpDecomposition&) = default;
};

/// Decomposition of a non-degenerate op, nullopt for the six degenerate
/// ones. Among equivalent decompositions the one complementing N is
/// preferred over the one complementing P.
std::optional<OpDecomposition> canonicalize_op(BooleanOp op);

/// Truth table of a decomposition, for checking it against the op.
BooleanOp compose(const OpDecomposition& d);

struct Prediction {
    BigInt value;
    /// True when `value` is only an upper bound for the witness triple.
    bool bound_only;
};

/// Symmetric-difference family: (m-1) alpha(n,p) + alpha'(n,p), exact.
/// Intersection family: (m-1) 2^(np) + 2^(np-1), bound.
/// Union family: (m-1)(2^(n+p) - 2^n - 2^p + 2) + 2^(n+p-2), bound.
/// Throws DegenerateOperation, InvalidArgument for zero sizes.
Prediction predicted_value(unsigned m, unsigned n, unsigned p, BooleanOp op);

/// Catenation complexity composed with the np product bound:
/// (m-1) 2^(np) + 2^(np-1). Throws InvalidArgument for zero sizes.
BigInt composed_bound(unsigned m, unsigned n, unsigned p);

/// Accessible states of the combined automaton whose tableau is saturated.
std::uint64_t saturated_state_census(const CombinedAutomaton& combined);
std::uint64_t saturated_state_census(const Dfa& a, const Dfa& b, const Dfa& c, BooleanOp op,
                                     std::uint64_t budget = default_state_budget);

struct VerificationReport {
    unsigned m = 0, n = 0, p = 0;
    BooleanOp op{6};
    std::uint64_t computed_sc = 0;
    BigInt predicted;
    bool bound_only = false;
    std::uint64_t accessible_count = 0;
    std::uint64_t saturated_state_count = 0;
    std::chrono::milliseconds elapsed{0};

    /// Equality for exact predictions, computed <= predicted for bounds.
    bool passed() const;
};

/// Runs the combined construction on the witness triple (with B and/or C
/// complemented as the op's decomposition requires), minimizes and compares
/// with predicted_value. Throws SizeTooSmall, DegenerateOperation and
/// StateBudgetExceeded (checked up front against m * 2^(np)).
VerificationReport verify(unsigned m, unsigned n, unsigned p, BooleanOp op,
                          std::uint64_t budget = default_state_budget);

} // namespace sclab

#endif
