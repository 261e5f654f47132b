#include "sclab/complexity.hpp"

#include <array>
#include <bit>
#include <unordered_map>

#include "sclab/witness.hpp"

namespace sclab {

namespace {

void require_positive_sizes(unsigned m, unsigned n, unsigned p)
{
    if (m == 0 || n == 0 || p == 0)
        throw InvalidArgument("automaton sizes must be positive");
}

BigInt pow2(unsigned e) { return BigInt(1) << e; }

} // namespace

CombinedAutomaton build_combined_states(const Dfa& a, const Dfa& b, const Dfa& c, BooleanOp op,
                                        std::uint64_t budget)
{
    if (!(a.alphabet() == b.alphabet()) || !(a.alphabet() == c.alphabet()))
        throw AlphabetMismatch();
    const std::size_t rows = b.state_count();
    const std::size_t cols = c.state_count();
    if (rows * cols > Tableau::max_cells)
        throw StateBudgetExceeded("the combined construction supports at most 64 state pairs");
    const std::size_t k = a.alphabet().size();

    // Image of a single column under each symbol, as a cols-bit mask.
    std::vector<std::uint64_t> col_image(k * cols);
    for (Symbol s = 0; s < k; ++s)
        for (State r = 0; r < cols; ++r)
            col_image[s * cols + r] = std::uint64_t(1) << c.next(r, s);

    // Cells (q, r) satisfying (q in F_B) op (r in F_C).
    CellMask final_cells = 0;
    for (State q = 0; q < rows; ++q)
        for (State r = 0; r < cols; ++r)
            if (op(b.is_final(q), c.is_final(r)))
                final_cells |= CellMask(1) << (q * cols + r);

    const std::uint64_t row_bits = cols == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << cols) - 1;
    const CellMask entry = CellMask(1) << (b.initial() * cols + c.initial());

    auto step = [&](CellMask bits, Symbol s) {
        CellMask out = 0;
        for (State q = 0; q < rows; ++q) {
            std::uint64_t row = (bits >> (q * cols)) & row_bits;
            if (row == 0)
                continue;
            std::uint64_t image = 0;
            for (; row != 0; row &= row - 1)
                image |= col_image[s * cols + static_cast<std::size_t>(std::countr_zero(row))];
            out |= image << (b.next(q, s) * cols);
        }
        return out;
    };

    std::vector<std::unordered_map<CellMask, State>> index(a.state_count());
    std::vector<CombinedState> states;
    auto intern = [&](State i, CellMask bits) {
        auto [it, fresh] = index[i].try_emplace(bits, static_cast<State>(states.size()));
        if (fresh) {
            if (states.size() >= budget)
                throw StateBudgetExceeded("combined automaton exceeds the state budget of " +
                                          std::to_string(budget));
            states.push_back({i, Tableau(rows, cols, bits)});
        }
        return it->second;
    };

    const State a0 = a.initial();
    intern(a0, a.is_final(a0) ? entry : 0);

    std::vector<State> delta;
    std::vector<bool> finals;
    for (std::size_t head = 0; head < states.size(); ++head) {
        const State i = states[head].a_state;
        const CellMask bits = states[head].tableau.bits();
        finals.push_back((bits & final_cells) != 0);
        for (Symbol s = 0; s < k; ++s) {
            const State next_i = a.next(i, s);
            CellMask next_bits = step(bits, s);
            if (a.is_final(next_i))
                next_bits |= entry;
            delta.push_back(intern(next_i, next_bits));
        }
    }

    Dfa dfa(a.alphabet(), states.size(), 0, std::move(finals), std::move(delta));
    return {std::move(dfa), std::move(states)};
}

Dfa build_combined(const Dfa& a, const Dfa& b, const Dfa& c, BooleanOp op, std::uint64_t budget)
{
    return build_combined_states(a, b, c, op, budget).dfa;
}

std::string_view to_string(BaseOp base)
{
    switch (base) {
    case BaseOp::intersection:
        return "and";
    case BaseOp::union_op:
        return "or";
    case BaseOp::symmetric_difference:
        return "xor";
    }
    return "?";
}

BooleanOp compose(const OpDecomposition& d)
{
    unsigned code = 0;
    for (unsigned in_n = 0; in_n < 2; ++in_n)
        for (unsigned in_p = 0; in_p < 2; ++in_p) {
            bool x = (in_n != 0) != d.complement_n;
            bool y = (in_p != 0) != d.complement_p;
            bool v = false;
            switch (d.base) {
            case BaseOp::intersection:
                v = x && y;
                break;
            case BaseOp::union_op:
                v = x || y;
                break;
            case BaseOp::symmetric_difference:
                v = x != y;
                break;
            }
            if (v)
                code |= 1u << (3u - (2u * in_n + in_p));
        }
    return BooleanOp(code);
}

std::optional<OpDecomposition> canonicalize_op(BooleanOp op)
{
    if (op.is_degenerate())
        return std::nullopt;
    constexpr std::array<std::pair<bool, bool>, 4> complements{
        {{false, false}, {true, false}, {false, true}, {true, true}}};
    for (BaseOp base : {BaseOp::intersection, BaseOp::union_op, BaseOp::symmetric_difference})
        for (auto [cn, cp] : complements) {
            OpDecomposition d{base, cn, cp};
            if (compose(d) == op)
                return d;
        }
    return std::nullopt;
}

BigInt composed_bound(unsigned m, unsigned n, unsigned p)
{
    require_positive_sizes(m, n, p);
    return BigInt(m - 1) * pow2(n * p) + pow2(n * p - 1);
}

Prediction predicted_value(unsigned m, unsigned n, unsigned p, BooleanOp op)
{
    require_positive_sizes(m, n, p);
    auto d = canonicalize_op(op);
    if (!d)
        throw DegenerateOperation(std::string("operation ") + std::string(op.name()) +
                                  " depends on at most one argument");
    switch (d->base) {
    case BaseOp::symmetric_difference:
        return {BigInt(m - 1) * alpha(n, p) + alpha_prime(n, p), false};
    case BaseOp::intersection:
        return {composed_bound(m, n, p), true};
    case BaseOp::union_op:
        return {BigInt(m - 1) * (pow2(n + p) - pow2(n) - pow2(p) + 2) + pow2(n + p - 2), true};
    }
    throw std::logic_error("unreachable");
}

std::uint64_t saturated_state_census(const CombinedAutomaton& combined)
{
    std::uint64_t count = 0;
    for (const auto& s : combined.states)
        count += is_saturated(s.tableau);
    return count;
}

std::uint64_t saturated_state_census(const Dfa& a, const Dfa& b, const Dfa& c, BooleanOp op,
                                     std::uint64_t budget)
{
    return saturated_state_census(build_combined_states(a, b, c, op, budget));
}

bool VerificationReport::passed() const
{
    const BigInt computed = computed_sc;
    return bound_only ? computed <= predicted : computed == predicted;
}

VerificationReport verify(unsigned m, unsigned n, unsigned p, BooleanOp op, std::uint64_t budget)
{
    if (m < 3 || n < 3 || p < 3)
        throw SizeTooSmall("verification needs m, n, p >= 3");
    const auto start = std::chrono::steady_clock::now();
    const Prediction prediction = predicted_value(m, n, p, op);
    if (std::uint64_t(n) * p > Tableau::max_cells || BigInt(m) * pow2(n * p) > BigInt(budget))
        throw StateBudgetExceeded("m * 2^(np) = " + std::to_string(m) + " * 2^" +
                                  std::to_string(n * p) + " exceeds the state budget of " +
                                  std::to_string(budget));

    const auto d = *canonicalize_op(op);
    WitnessTriple w = witness_triple(m, n, p);
    const Dfa b = d.complement_n ? complement(w.b) : w.b;
    const Dfa c = d.complement_p ? complement(w.c) : w.c;
    const BooleanOp base = compose({d.base, false, false});

    const CombinedAutomaton combined = build_combined_states(w.a, b, c, base, budget);
    const Dfa minimal = minimize(combined.dfa);

    VerificationReport report;
    report.m = m;
    report.n = n;
    report.p = p;
    report.op = op;
    report.computed_sc = minimal.state_count();
    report.predicted = prediction.value;
    report.bound_only = prediction.bound_only;
    report.accessible_count = combined.dfa.state_count();
    report.saturated_state_count = saturated_state_census(combined);
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

} // namespace sclab
