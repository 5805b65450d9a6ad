#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tww {

// Ordered 0-1 matrix. Row/column indices are abstract ranks 0..r-1 / 0..c-1;
// user-facing labels live at the I/O layer only.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, std::vector<std::pair<int, int>> ones);

    static Matrix zero(int rows, int cols) { return Matrix(rows, cols, {}); }
    static Matrix identity(int n);
    static Matrix reverse(int n);  // antidiagonal
    static Matrix all_ones(int rows, int cols);

    int row_count() const { return rows_; }
    int col_count() const { return cols_; }
    // Sorted row-major.
    const std::vector<std::pair<int, int>>& ones() const { return ones_; }
    bool at(int i, int j) const;
    int row_degree(int i) const;
    int col_degree(int j) const;
    int max_degree() const;

    Matrix transpose() const;
    // Keeps the relative order of the selected rows/columns.
    Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

    bool operator==(const Matrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::pair<int, int>> ones_;
};

// Interval division of rows and columns. A cut at position p separates
// index p-1 from index p; valid cuts are 1..r-1 (rows) and 1..c-1 (cols).
class Division {
public:
    Division() = default;
    Division(std::vector<int> row_cuts, std::vector<int> col_cuts);

    static Division singletons(int rows, int cols);
    static Division trivial() { return Division({}, {}); }

    const std::vector<int>& row_cuts() const { return row_cuts_; }
    const std::vector<int>& col_cuts() const { return col_cuts_; }
    void validate(int rows, int cols) const;

    // Half-open intervals [lo, hi) induced by the cuts.
    static std::vector<std::pair<int, int>> intervals(const std::vector<int>& cuts, int size);

    bool operator==(const Division&) const = default;

private:
    std::vector<int> row_cuts_, col_cuts_;  // strictly increasing
};

// Quotient: one entry per zone, 1 iff the zone contains a 1.
Matrix quotient_matrix(const Matrix& m, const Division& d);

// Entrywise maximum; all matrices must share dimensions.
Matrix superpose(const std::vector<Matrix>& ms);

// Bijection matrix: |rows| = |cols|, every row and column of degree 1.
// Stored as perm[row] = col.
class BijectionMatrix {
public:
    explicit BijectionMatrix(std::vector<int> perm);
    static BijectionMatrix identity(int n);
    static BijectionMatrix reverse(int n);
    static BijectionMatrix from_matrix(const Matrix& m);

    int size() const { return static_cast<int>(perm_.size()); }
    int image(int row) const { return perm_[static_cast<std::size_t>(row)]; }
    const std::vector<int>& perm() const { return perm_; }
    BijectionMatrix inverse() const;
    Matrix to_matrix() const;

    bool operator==(const BijectionMatrix&) const = default;

private:
    std::vector<int> perm_;
};

// Substitution along a bijection pattern: the block at 1-position (a, f(a))
// owns row-group a's height and column-group f(a)'s width; groups are laid
// out as the natural ordered sum. Tensor product is the repeated-block case.
Matrix substitute(const BijectionMatrix& pattern,
                  const std::map<std::pair<int, int>, Matrix>& blocks);
Matrix tensor(const Matrix& a, const Matrix& b);

// Matrix of tau o sigma (row x maps to tau(sigma(x))).
BijectionMatrix compose(const BijectionMatrix& sigma, const BijectionMatrix& tau);

// Text format: first line "r c", then one line "i j" per 1-entry, sorted
// row-major. Canonical writing makes round-trips bit-exact.
Matrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Matrix& m);
Matrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const Matrix& m);
std::string to_text(const Matrix& m);

}  // namespace tww
