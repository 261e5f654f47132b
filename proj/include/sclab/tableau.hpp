#ifndef SCLAB_TABLEAU_HPP
#define SCLAB_TABLEAU_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sclab/error.hpp"

namespace sclab {

using CellMask = std::uint64_t;

/// Rows × columns grid of cells, cell (j, k) at bit j * cols + k.
///
/// A tableau encodes a set S of couples (q_j, r_k) of states of two automata
/// B and C: the cell (j, k) is marked iff (q_j, r_k) is in S. All indices are
/// 0-based. At most 64 cells are supported.
class Tableau {
public:
    static constexpr std::size_t max_cells = 64;

    Tableau(std::size_t rows, std::size_t cols, CellMask bits = 0);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t cell_count() const noexcept { return rows_ * cols_; }
    CellMask bits() const noexcept { return bits_; }

    bool marked(std::size_t row, std::size_t col) const;
    Tableau with(std::size_t row, std::size_t col) const;
    void mark(std::size_t row, std::size_t col);

    /// Marked columns of `row` as a cols-bit mask.
    std::uint64_t row_mask(std::size_t row) const;
    /// Marked rows of `col` as a rows-bit mask.
    std::uint64_t col_mask(std::size_t col) const;

    std::size_t marked_count() const noexcept;
    bool empty() const noexcept { return bits_ == 0; }
    bool contains(const Tableau& other) const noexcept { return (other.bits_ & ~bits_) == 0; }

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    CellMask bits_;
};

using Cell = std::pair<std::size_t, std::size_t>;

/// True iff no three marked cells (j,k), (j,k'), (j',k) have (j',k') unmarked.
bool is_saturated(const Tableau& t);

/// Cells whose marking completes some right triangle of t into a rectangle,
/// in increasing bit order. Empty iff t is saturated.
std::vector<Cell> completing_cells(const Tableau& t);

/// Least saturated tableau containing t.
Tableau saturate(const Tableau& t);

/// Default cell-count guard for exhaustive enumeration.
inline constexpr std::size_t default_enumeration_guard = 25;

/// Calls `visit` on every saturated rows × cols tableau, in increasing
/// order of `bits()`. Returns the number visited.
/// Throws SizeGuardExceeded if rows * cols > guard.
std::uint64_t enumerate_saturated(std::size_t rows, std::size_t cols,
                                  const std::function<void(const Tableau&)>& visit,
                                  std::size_t guard = default_enumeration_guard);

std::uint64_t count_saturated(std::size_t rows, std::size_t cols,
                              std::size_t guard = default_enumeration_guard);

/// Saturated tableaux whose cell (0, 0) is marked.
std::uint64_t count_saturated_with_origin(std::size_t rows, std::size_t cols,
                                          std::size_t guard = default_enumeration_guard);

/// Saturated tableaux counted by number of marked cells: entry j is the
/// number with j marked cells.
std::vector<std::uint64_t> count_saturated_by_weight(std::size_t rows, std::size_t cols,
                                                     std::size_t guard = default_enumeration_guard);

/// Column-by-column word of a tableau: letter k is the set of marked rows of
/// column k, as a rows-bit mask.
struct TableauWord {
    std::size_t rows = 0;
    std::vector<std::uint64_t> letters;

    /// Horizontal gluing of tableaux.
    TableauWord operator*(const TableauWord& rhs) const;
    friend bool operator==(const TableauWord&, const TableauWord&) = default;
};

TableauWord encode(const Tableau& t);
Tableau decode(const TableauWord& w);

/// True iff the distinct nonempty letters of w are pairwise disjoint.
bool letters_form_partial_partition(const TableauWord& w);

/// Renders w as "c{0,3} c{2} c{} ...". Row indices are 0-based.
std::string to_string(const TableauWord& w);

/// True iff some marked cell lies in a final row or in a final column but
/// not both. Masks are rows-bit and cols-bit wide.
bool is_final_tableau(const Tableau& t, std::uint64_t final_rows, std::uint64_t final_cols);

/// Text rendering: one line per row, 'X' marked and '.' unmarked, each line
/// terminated by '\n'.
std::string to_text(const Tableau& t);

/// Parses the text rendering. Blank lines are ignored. Throws InvalidArgument.
Tableau parse_tableau(std::string_view text);

} // namespace sclab

#endif
