#pragma once

// The counting-board data structure: an n x m grid of exact ring elements with
// a step counter (1 = the initial board). Tableaux are immutable values as far
// as the rest of the toolkit is concerned -- every elimination step takes a
// tableau by const reference and returns a fresh one.

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "fangcheng/errors.hpp"
#include "fangcheng/multipoly.hpp"
#include "fangcheng/ring.hpp"

namespace fangcheng {

template <typename T>
class Tableau {
public:
    // Zero-filled board. `zero` is an exemplar zero element (polynomials carry
    // their variable count in the value).
    Tableau(int rows, int cols, int rhs_cols, T zero)
        : rows_(rows), cols_(cols), rhs_cols_(rhs_cols), cells_(static_cast<std::size_t>(rows) * cols, std::move(zero)) {
        check_shape();
    }

    static Tableau from_rows(std::vector<std::vector<T>> rows, int rhs_cols = 0) {
        if (rows.empty() || rows.front().empty())
            throw DimensionMismatch("tableau must have at least one row and one column");
        Tableau t(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()),
                  rhs_cols, RingTraits<T>::zero_like(rows.front().front()));
        for (int i = 0; i < t.rows_; ++i) {
            if (static_cast<int>(rows[i].size()) != t.cols_)
                throw DimensionMismatch("row " + std::to_string(i + 1) + " has " +
                                        std::to_string(rows[i].size()) + " of " +
                                        std::to_string(t.cols_) + " entries");
            for (int j = 0; j < t.cols_; ++j)
                t.at(i, j) = std::move(rows[i][j]);
        }
        return t;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int rhs_cols() const { return rhs_cols_; }
    int step() const { return step_; }
    void set_step(int step) { step_ = step; }

    const T& at(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return cells_[static_cast<std::size_t>(i) * cols_ + j];
    }
    T& at(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return cells_[static_cast<std::size_t>(i) * cols_ + j];
    }

    Tableau with_swapped_rows(int r1, int r2) const {
        Tableau t = *this;
        for (int j = 0; j < cols_; ++j)
            std::swap(t.at(r1, j), t.at(r2, j));
        return t;
    }

    bool operator==(const Tableau& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && rhs_cols_ == o.rhs_cols_ &&
               step_ == o.step_ && cells_ == o.cells_;
    }

private:
    void check_shape() const {
        if (rows_ < 1 || cols_ < 1)
            throw DimensionMismatch("tableau must have at least one row and one column");
        if (cols_ < rows_)
            throw DimensionMismatch("tableau needs at least as many columns as rows (got " +
                                    std::to_string(rows_) + "x" + std::to_string(cols_) + ")");
        if (rhs_cols_ < 0 || rhs_cols_ > 1 || rhs_cols_ >= cols_)
            throw DimensionMismatch("rhs column count must be 0 or 1");
    }

    int rows_;
    int cols_;
    int rhs_cols_;
    int step_ = 1;
    std::vector<T> cells_;
};

// Augmented n x (n+1) tableau for the system coeffs * x = rhs.
Tableau<Integer> from_system(const std::vector<std::vector<Integer>>& coeffs,
                             const std::vector<Integer>& rhs);

// Parses the tableau file format: optional '#' comment / blank lines, a header
// line "n m", then n rows of m signed decimal integers. Errors carry 1-based
// line/column positions.
Tableau<Integer> parse_tableau(const std::string& text);

enum class RenderFormat { Board, Json };

// Symbolic board: entry (i, j) is the indeterminate v_{i+1}_{j+1}.
Tableau<MultiPoly> generic_tableau(int n, int m);

// Variable names for an n x m symbolic board ("v1_1", "v1_2", ...).
std::vector<std::string> generic_variable_names(int n, int m);

// Maximum bit length over all entries (0 for an all-zero board).
inline unsigned max_bit_length(const Tableau<Integer>& t) {
    unsigned best = 0;
    for (int i = 0; i < t.rows(); ++i)
        for (int j = 0; j < t.cols(); ++j) {
            unsigned b = bit_length(t.at(i, j));
            if (b > best)
                best = b;
        }
    return best;
}

// Entry-size measure for any ring (rationals: max of numerator/denominator
// lengths; polynomials: max coefficient length).
template <typename T>
unsigned max_bit_measure(const Tableau<T>& t) {
    unsigned best = 0;
    for (int i = 0; i < t.rows(); ++i)
        for (int j = 0; j < t.cols(); ++j) {
            unsigned b = RingTraits<T>::bit_measure(t.at(i, j));
            if (b > best)
                best = b;
        }
    return best;
}

template <typename T>
std::vector<std::vector<std::string>> rendered_entries(const Tableau<T>& t) {
    std::vector<std::vector<std::string>> out(t.rows());
    for (int i = 0; i < t.rows(); ++i) {
        out[i].reserve(t.cols());
        for (int j = 0; j < t.cols(); ++j)
            out[i].push_back(RingTraits<T>::str(t.at(i, j)));
    }
    return out;
}

// Symbolic boards render with their grid-derived variable names.
inline std::vector<std::vector<std::string>> rendered_entries(const Tableau<MultiPoly>& t) {
    auto names = generic_variable_names(t.rows(), t.cols());
    std::vector<std::vector<std::string>> out(t.rows());
    for (int i = 0; i < t.rows(); ++i) {
        out[i].reserve(t.cols());
        for (int j = 0; j < t.cols(); ++j) {
            const MultiPoly& p = t.at(i, j);
            out[i].push_back(p.var_count() == names.size() ? p.str(names) : p.str());
        }
    }
    return out;
}

// Width-aligned grid, one row per line, no trailing newline.
std::string render_board(const std::vector<std::vector<std::string>>& entries);

template <typename T>
std::string render_board(const Tableau<T>& t) {
    return render_board(rendered_entries(t));
}

std::string render_json_document(int rows, int cols, int rhs_cols, int step,
                                 const std::vector<std::vector<std::string>>& entries);

template <typename T>
std::string render(const Tableau<T>& t, RenderFormat format) {
    if (format == RenderFormat::Board)
        return render_board(t);
    return render_json_document(t.rows(), t.cols(), t.rhs_cols(), t.step(), rendered_entries(t));
}

// Header line plus board grid; parse_tableau() round-trips this exactly for
// integer tableaux.
inline std::string to_file_text(const Tableau<Integer>& t) {
    return std::to_string(t.rows()) + " " + std::to_string(t.cols()) + "\n" +
           render_board(t) + "\n";
}

template <typename T>
Tableau<Rational> to_rational_tableau(const Tableau<T>& t) {
    Tableau<Rational> r(t.rows(), t.cols(), t.rhs_cols(), Rational(0));
    for (int i = 0; i < t.rows(); ++i)
        for (int j = 0; j < t.cols(); ++j)
            r.at(i, j) = to_rational(t.at(i, j));
    r.set_step(t.step());
    return r;
}

} // namespace fangcheng
