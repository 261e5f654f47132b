#ifndef SCLAB_AUTOMATA_HPP
#define SCLAB_AUTOMATA_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sclab/error.hpp"

namespace sclab {

using State = std::uint32_t;
using Symbol = std::uint32_t; ///< index into an Alphabet
using Word = std::vector<Symbol>;
using StateSet = std::vector<State>; ///< sorted, duplicate free

/// Ordered list of distinct one-character symbols. Symbols are compared by
/// index, so two alphabets are equal only if they list the same symbols in
/// the same order.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    char symbol(Symbol s) const { return symbols_.at(s); }
    const std::string& symbols() const noexcept { return symbols_; }

    std::optional<Symbol> find(char c) const noexcept;
    /// Throws UnknownSymbol.
    Symbol index_of(char c) const;
    /// Translates a textual word into symbol indices. Throws UnknownSymbol.
    Word word(std::string_view text) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::string symbols_;
};

/// Complete deterministic automaton. Immutable once constructed.
class Dfa {
public:
    /// `delta[q * alphabet.size() + s]` is the successor of q on s.
    Dfa(Alphabet alphabet, std::size_t state_count, State initial,
        std::vector<bool> finals, std::vector<State> delta);

    /// Convenience constructor taking the final states as a list.
    static Dfa from_final_list(Alphabet alphabet, std::size_t state_count, State initial,
                               std::span<const State> finals, std::vector<State> delta);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t state_count() const noexcept { return state_count_; }
    State initial() const noexcept { return initial_; }
    bool is_final(State q) const { return finals_.at(q); }
    const std::vector<bool>& final_mask() const noexcept { return finals_; }
    StateSet finals() const;

    State next(State q, Symbol s) const { return delta_[q * alphabet_.size() + s]; }
    const std::vector<State>& table() const noexcept { return delta_; }

    /// Structural equality (same numbering), not language equality.
    friend bool operator==(const Dfa&, const Dfa&) = default;

private:
    Alphabet alphabet_;
    std::size_t state_count_;
    State initial_;
    std::vector<bool> finals_;
    std::vector<State> delta_;
};

/// Nondeterministic automaton without epsilon moves. Every (state, symbol)
/// pair has an image set, possibly empty.
class Nfa {
public:
    Nfa(Alphabet alphabet, std::size_t state_count, StateSet initials, StateSet finals,
        std::vector<StateSet> delta);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t state_count() const noexcept { return state_count_; }
    const StateSet& initials() const noexcept { return initials_; }
    const StateSet& finals() const noexcept { return finals_; }
    bool is_final(State q) const;
    const StateSet& next(State q, Symbol s) const { return delta_[q * alphabet_.size() + s]; }

    friend bool operator==(const Nfa&, const Nfa&) = default;

private:
    Alphabet alphabet_;
    std::size_t state_count_;
    StateSet initials_;
    StateSet finals_;
    std::vector<StateSet> delta_;
};

/// One of the 16 binary boolean functions, stored as its 4-bit truth table.
///
/// The code is the column index of the classical table of the sixteen
/// functions: bit 3 holds f(0,0), bit 2 f(0,1), bit 1 f(1,0), bit 0 f(1,1),
/// where the first argument is membership in N and the second in P. Hence
/// code 1 is N∩P, 6 is N⊕P, 7 is N∪P and 8 is N̄∩P̄.
class BooleanOp {
public:
    static constexpr unsigned count = 16;

    constexpr explicit BooleanOp(unsigned code) : code_(code & 0xFu) {}

    static constexpr BooleanOp intersection() { return BooleanOp(1); }
    static constexpr BooleanOp symmetric_difference() { return BooleanOp(6); }
    static constexpr BooleanOp union_op() { return BooleanOp(7); }

    /// Parses a canonical name, an alias ("and", "symdiff", "nor", ...) or
    /// the symbolic label. Returns nullopt for unknown names.
    static std::optional<BooleanOp> parse(std::string_view name);

    constexpr unsigned code() const noexcept { return code_; }
    constexpr bool operator()(bool in_n, bool in_p) const noexcept {
        return ((code_ >> (3u - (2u * in_n + in_p))) & 1u) != 0;
    }
    /// ∅, Σ*, N, P, N̄ and P̄ depend on at most one argument.
    bool is_degenerate() const noexcept;

    /// ASCII canonical name, e.g. "xor".
    std::string_view name() const noexcept;
    /// Set-theoretic label, e.g. "N⊕P".
    std::string_view label() const noexcept;

    friend constexpr bool operator==(BooleanOp, BooleanOp) = default;

private:
    unsigned code_;
};

/// All sixteen operations ordered by code.
std::vector<BooleanOp> all_boolean_ops();
/// The ten operations that depend on both arguments.
std::vector<BooleanOp> non_degenerate_ops();
/// Alias table, one (alias, canonical name) pair per entry.
std::vector<std::pair<std::string_view, std::string_view>> boolean_op_aliases();

/// BFS-renumbered accessible part. States are numbered in discovery order,
/// exploring symbols in alphabet order.
Dfa accessible(const Dfa& d);

/// Subset construction restricted to accessible subsets. The empty subset is
/// kept as an ordinary (sink) state. Subsets are numbered in BFS discovery
/// order.
Dfa determinize(const Nfa& n);

/// Quotient of the accessible part by language equivalence of states.
/// Classes are numbered in BFS order of the quotient.
Dfa minimize(const Dfa& d);

/// Catenation automaton: B's states are shifted after A's; any move of A
/// into F_A also enters B's initial state. Throws AlphabetMismatch.
Nfa catenate(const Dfa& a, const Dfa& b);

/// Cartesian product with (q, r) at index q * c.state_count() + r and
/// finality given by op. Throws AlphabetMismatch.
Dfa boolean_product(const Dfa& b, const Dfa& c, BooleanOp op);

Dfa complement(const Dfa& d);

/// Language equality. Throws AlphabetMismatch.
bool equivalent(const Dfa& a, const Dfa& b);

bool accepts(const Dfa& d, std::span<const Symbol> word);
/// Throws UnknownSymbol.
bool accepts(const Dfa& d, std::string_view word);
bool accepts(const Nfa& n, std::span<const Symbol> word);

/// Lift of a Dfa to an Nfa with singleton images.
Nfa to_nfa(const Dfa& d);

} // namespace sclab

#endif
