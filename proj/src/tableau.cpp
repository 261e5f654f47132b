#include "sclab/tableau.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace sclab {

namespace {

std::uint64_t low_bits(std::size_t n)
{
    return n >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
}

std::vector<std::uint64_t> rows_of(const Tableau& t)
{
    std::vector<std::uint64_t> rows(t.rows());
    for (std::size_t j = 0; j < t.rows(); ++j)
        rows[j] = t.row_mask(j);
    return rows;
}

Tableau from_rows(std::size_t cols, const std::vector<std::uint64_t>& rows)
{
    CellMask bits = 0;
    for (std::size_t j = 0; j < rows.size(); ++j)
        bits |= rows[j] << (j * cols);
    return Tableau(rows.size(), cols, bits);
}

void check_guard(std::size_t rows, std::size_t cols, std::size_t guard)
{
    if (rows * cols > guard)
        throw SizeGuardExceeded("enumeration of " + std::to_string(rows) + "x" +
                                std::to_string(cols) + " tableaux exceeds the guard of " +
                                std::to_string(guard) + " cells");
    if (rows * cols > Tableau::max_cells)
        throw SizeGuardExceeded("tableaux are limited to 64 cells");
}

// Row-by-row generator. A tableau is saturated iff any two rows are either
// equal or disjoint, so every row is empty, a copy of an earlier nonempty
// row, or a fresh set disjoint from all earlier rows. Rows are chosen from
// the most significant one down with candidates in increasing order, which
// yields the tableaux in increasing bit order.
class SaturatedGenerator {
public:
    SaturatedGenerator(std::size_t rows, std::size_t cols,
                       const std::function<void(const Tableau&)>& visit)
        : rows_(rows), cols_(cols), full_(low_bits(cols)), visit_(visit)
    {
    }

    std::uint64_t run()
    {
        if (rows_ == 0 || cols_ == 0) {
            visit_(Tableau(rows_, cols_));
            return 1;
        }
        descend(rows_, 0, 0);
        return count_;
    }

private:
    void descend(std::size_t remaining, CellMask bits, std::uint64_t used)
    {
        if (remaining == 0) {
            ++count_;
            visit_(Tableau(rows_, cols_, bits));
            return;
        }
        const std::size_t row = remaining - 1;
        std::vector<std::uint64_t> candidates(blocks_.begin(), blocks_.end());
        const std::uint64_t free = full_ & ~used;
        // All submasks of `free`, the empty one included.
        for (std::uint64_t sub = free;; sub = (sub - 1) & free) {
            candidates.push_back(sub);
            if (sub == 0)
                break;
        }
        std::sort(candidates.begin(), candidates.end());

        for (std::uint64_t m : candidates) {
            bool fresh = m != 0 && (m & used) == 0;
            if (fresh)
                blocks_.push_back(m);
            descend(remaining - 1, bits | (m << (row * cols_)), used | m);
            if (fresh)
                blocks_.pop_back();
        }
    }

    std::size_t rows_;
    std::size_t cols_;
    std::uint64_t full_;
    const std::function<void(const Tableau&)>& visit_;
    std::vector<std::uint64_t> blocks_;
    std::uint64_t count_ = 0;
};

} // namespace

// ------------------------------------------------------------------ Tableau

Tableau::Tableau(std::size_t rows, std::size_t cols, CellMask bits)
    : rows_(rows), cols_(cols), bits_(bits)
{
    if (rows * cols > max_cells)
        throw InvalidArgument("tableaux are limited to 64 cells");
    if ((bits & ~low_bits(rows * cols)) != 0)
        throw InvalidArgument("tableau bits outside of the grid");
}

bool Tableau::marked(std::size_t row, std::size_t col) const
{
    if (row >= rows_ || col >= cols_)
        throw InvalidArgument("cell out of range");
    return (bits_ >> (row * cols_ + col)) & 1u;
}

Tableau Tableau::with(std::size_t row, std::size_t col) const
{
    Tableau t = *this;
    t.mark(row, col);
    return t;
}

void Tableau::mark(std::size_t row, std::size_t col)
{
    if (row >= rows_ || col >= cols_)
        throw InvalidArgument("cell out of range");
    bits_ |= CellMask(1) << (row * cols_ + col);
}

std::uint64_t Tableau::row_mask(std::size_t row) const
{
    return (bits_ >> (row * cols_)) & low_bits(cols_);
}

std::uint64_t Tableau::col_mask(std::size_t col) const
{
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < rows_; ++j)
        m |= ((bits_ >> (j * cols_ + col)) & 1u) << j;
    return m;
}

std::size_t Tableau::marked_count() const noexcept
{
    return static_cast<std::size_t>(std::popcount(bits_));
}

// --------------------------------------------------------------- saturation

bool is_saturated(const Tableau& t)
{
    const auto rows = rows_of(t);
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t i = j + 1; i < rows.size(); ++i)
            if ((rows[j] & rows[i]) != 0 && rows[j] != rows[i])
                return false;
    return true;
}

std::vector<Cell> completing_cells(const Tableau& t)
{
    const auto rows = rows_of(t);
    CellMask missing = 0;
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != j && (rows[j] & rows[i]) != 0)
                missing |= (rows[j] & ~rows[i]) << (i * t.cols());
    std::vector<Cell> cells;
    for (; missing != 0; missing &= missing - 1) {
        auto bit = static_cast<std::size_t>(std::countr_zero(missing));
        cells.emplace_back(bit / t.cols(), bit % t.cols());
    }
    return cells;
}

Tableau saturate(const Tableau& t)
{
    auto rows = rows_of(t);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t j = 0; j < rows.size(); ++j)
            for (std::size_t i = j + 1; i < rows.size(); ++i)
                if ((rows[j] & rows[i]) != 0 && rows[j] != rows[i]) {
                    rows[j] = rows[i] = rows[j] | rows[i];
                    changed = true;
                }
    }
    return from_rows(t.cols(), rows);
}

// -------------------------------------------------------------- enumeration

std::uint64_t enumerate_saturated(std::size_t rows, std::size_t cols,
                                  const std::function<void(const Tableau&)>& visit,
                                  std::size_t guard)
{
    check_guard(rows, cols, guard);
    return SaturatedGenerator(rows, cols, visit).run();
}

std::uint64_t count_saturated(std::size_t rows, std::size_t cols, std::size_t guard)
{
    return enumerate_saturated(rows, cols, [](const Tableau&) {}, guard);
}

std::uint64_t count_saturated_with_origin(std::size_t rows, std::size_t cols, std::size_t guard)
{
    std::uint64_t count = 0;
    enumerate_saturated(
        rows, cols, [&](const Tableau& t) { count += t.bits() & 1u; }, guard);
    return count;
}

std::vector<std::uint64_t> count_saturated_by_weight(std::size_t rows, std::size_t cols,
                                                     std::size_t guard)
{
    std::vector<std::uint64_t> counts(rows * cols + 1, 0);
    enumerate_saturated(
        rows, cols, [&](const Tableau& t) { ++counts[t.marked_count()]; }, guard);
    return counts;
}

// ------------------------------------------------------------- word encoding

TableauWord TableauWord::operator*(const TableauWord& rhs) const
{
    if (rows != rhs.rows)
        throw InvalidArgument("cannot glue tableaux with different row counts");
    TableauWord out = *this;
    out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
    return out;
}

TableauWord encode(const Tableau& t)
{
    TableauWord w{t.rows(), {}};
    for (std::size_t k = 0; k < t.cols(); ++k)
        w.letters.push_back(t.col_mask(k));
    return w;
}

Tableau decode(const TableauWord& w)
{
    Tableau t(w.rows, w.letters.size());
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
        if ((w.letters[k] & ~low_bits(w.rows)) != 0)
            throw InvalidArgument("letter refers to a row out of range");
        for (std::size_t j = 0; j < w.rows; ++j)
            if ((w.letters[k] >> j) & 1u)
                t.mark(j, k);
    }
    return t;
}

bool letters_form_partial_partition(const TableauWord& w)
{
    for (std::size_t x = 0; x < w.letters.size(); ++x)
        for (std::size_t y = x + 1; y < w.letters.size(); ++y) {
            auto a = w.letters[x], b = w.letters[y];
            if (a != b && (a & b) != 0)
                return false;
        }
    return true;
}

std::string to_string(const TableauWord& w)
{
    std::string out;
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
        if (k > 0)
            out += ' ';
        out += "c{";
        bool first = true;
        for (std::size_t j = 0; j < w.rows; ++j)
            if ((w.letters[k] >> j) & 1u) {
                if (!first)
                    out += ',';
                out += std::to_string(j);
                first = false;
            }
        out += '}';
    }
    return out;
}

bool is_final_tableau(const Tableau& t, std::uint64_t final_rows, std::uint64_t final_cols)
{
    for (std::size_t j = 0; j < t.rows(); ++j) {
        std::uint64_t row = t.row_mask(j);
        if (row == 0)
            continue;
        bool final_row = (final_rows >> j) & 1u;
        // Marked cells in a final row count when their column is not final,
        // and the other way round.
        std::uint64_t hits = final_row ? row & ~final_cols : row & final_cols;
        if (hits != 0)
            return true;
    }
    return false;
}

// ---------------------------------------------------------------- text form

std::string to_text(const Tableau& t)
{
    std::string out;
    out.reserve(t.rows() * (t.cols() + 1));
    for (std::size_t j = 0; j < t.rows(); ++j) {
        for (std::size_t k = 0; k < t.cols(); ++k)
            out += t.marked(j, k) ? 'X' : '.';
        out += '\n';
    }
    return out;
}

Tableau parse_tableau(std::string_view text)
{
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty())
            lines.push_back(line);
    }
    if (lines.empty())
        return Tableau(0, 0);
    const std::size_t cols = lines.front().size();
    if (lines.size() * cols > Tableau::max_cells)
        throw InvalidArgument("tableaux are limited to 64 cells");
    Tableau t(lines.size(), cols);
    for (std::size_t j = 0; j < lines.size(); ++j) {
        if (lines[j].size() != cols)
            throw InvalidArgument("tableau rows have different lengths");
        for (std::size_t k = 0; k < cols; ++k) {
            char c = lines[j][k];
            if (c == 'X')
                t.mark(j, k);
            else if (c != '.')
                throw InvalidArgument(std::string("unexpected character '") + c +
                                      "' in tableau text");
        }
    }
    return t;
}

} // namespace sclab
