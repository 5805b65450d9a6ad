#include "tww/matrix.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tww/errors.hpp"

namespace tww {

Matrix::Matrix(int rows, int cols, std::vector<std::pair<int, int>> ones)
    : rows_(rows), cols_(cols), ones_(std::move(ones)) {
    if (rows_ < 0 || cols_ < 0) throw StructuralError("negative matrix dimension");
    std::sort(ones_.begin(), ones_.end());
    ones_.erase(std::unique(ones_.begin(), ones_.end()), ones_.end());
    for (const auto& [i, j] : ones_)
        if (i < 0 || j < 0 || i >= rows_ || j >= cols_)
            throw StructuralError("matrix entry out of range");
}

Matrix Matrix::identity(int n) {
    std::vector<std::pair<int, int>> ones;
    ones.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ones.emplace_back(i, i);
    return Matrix(n, n, std::move(ones));
}

Matrix Matrix::reverse(int n) {
    std::vector<std::pair<int, int>> ones;
    ones.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ones.emplace_back(i, n - 1 - i);
    return Matrix(n, n, std::move(ones));
}

Matrix Matrix::all_ones(int rows, int cols) {
    std::vector<std::pair<int, int>> ones;
    ones.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) ones.emplace_back(i, j);
    return Matrix(rows, cols, std::move(ones));
}

bool Matrix::at(int i, int j) const {
    return std::binary_search(ones_.begin(), ones_.end(), std::pair(i, j));
}

int Matrix::row_degree(int i) const {
    const auto lo = std::lower_bound(ones_.begin(), ones_.end(), std::pair(i, -1));
    const auto hi = std::lower_bound(ones_.begin(), ones_.end(), std::pair(i + 1, -1));
    return static_cast<int>(hi - lo);
}

int Matrix::col_degree(int j) const {
    int d = 0;
    for (const auto& [_, c] : ones_)
        if (c == j) ++d;
    return d;
}

int Matrix::max_degree() const {
    std::vector<int> rd(static_cast<std::size_t>(rows_), 0), cd(static_cast<std::size_t>(cols_), 0);
    for (const auto& [i, j] : ones_) {
        ++rd[static_cast<std::size_t>(i)];
        ++cd[static_cast<std::size_t>(j)];
    }
    int m = 0;
    for (int d : rd) m = std::max(m, d);
    for (int d : cd) m = std::max(m, d);
    return m;
}

Matrix Matrix::transpose() const {
    std::vector<std::pair<int, int>> t;
    t.reserve(ones_.size());
    for (const auto& [i, j] : ones_) t.emplace_back(j, i);
    return Matrix(cols_, rows_, std::move(t));
}

Matrix Matrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    std::vector<int> rpos(static_cast<std::size_t>(rows_), -1), cpos(static_cast<std::size_t>(cols_), -1);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const int r = rows[k];
        if (r < 0 || r >= rows_) throw ArgumentError("submatrix row out of range");
        if (k > 0 && rows[k] <= rows[k - 1]) throw ArgumentError("submatrix rows must be increasing");
        rpos[static_cast<std::size_t>(r)] = static_cast<int>(k);
    }
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const int c = cols[k];
        if (c < 0 || c >= cols_) throw ArgumentError("submatrix col out of range");
        if (k > 0 && cols[k] <= cols[k - 1]) throw ArgumentError("submatrix cols must be increasing");
        cpos[static_cast<std::size_t>(c)] = static_cast<int>(k);
    }
    std::vector<std::pair<int, int>> sub;
    for (const auto& [i, j] : ones_)
        if (rpos[static_cast<std::size_t>(i)] >= 0 && cpos[static_cast<std::size_t>(j)] >= 0)
            sub.emplace_back(rpos[static_cast<std::size_t>(i)], cpos[static_cast<std::size_t>(j)]);
    return Matrix(static_cast<int>(rows.size()), static_cast<int>(cols.size()), std::move(sub));
}

Division::Division(std::vector<int> row_cuts, std::vector<int> col_cuts)
    : row_cuts_(std::move(row_cuts)), col_cuts_(std::move(col_cuts)) {
    for (const auto* cuts : {&row_cuts_, &col_cuts_})
        for (std::size_t k = 1; k < cuts->size(); ++k)
            if ((*cuts)[k] <= (*cuts)[k - 1])
                throw StructuralError("division cuts must be strictly increasing");
}

Division Division::singletons(int rows, int cols) {
    std::vector<int> rc, cc;
    for (int p = 1; p < rows; ++p) rc.push_back(p);
    for (int p = 1; p < cols; ++p) cc.push_back(p);
    return Division(std::move(rc), std::move(cc));
}

void Division::validate(int rows, int cols) const {
    for (int p : row_cuts_)
        if (p < 1 || p >= rows) throw StructuralError("row cut out of range");
    for (int p : col_cuts_)
        if (p < 1 || p >= cols) throw StructuralError("col cut out of range");
}

std::vector<std::pair<int, int>> Division::intervals(const std::vector<int>& cuts, int size) {
    std::vector<std::pair<int, int>> iv;
    int lo = 0;
    for (int p : cuts) {
        iv.emplace_back(lo, p);
        lo = p;
    }
    if (size > 0) iv.emplace_back(lo, size);
    return iv;
}

Matrix quotient_matrix(const Matrix& m, const Division& d) {
    d.validate(m.row_count(), m.col_count());
    const auto riv = Division::intervals(d.row_cuts(), m.row_count());
    const auto civ = Division::intervals(d.col_cuts(), m.col_count());
    // Map each position to its interval index.
    std::vector<int> rmap(static_cast<std::size_t>(m.row_count()));
    std::vector<int> cmap(static_cast<std::size_t>(m.col_count()));
    for (std::size_t k = 0; k < riv.size(); ++k)
        for (int i = riv[k].first; i < riv[k].second; ++i) rmap[static_cast<std::size_t>(i)] = static_cast<int>(k);
    for (std::size_t k = 0; k < civ.size(); ++k)
        for (int j = civ[k].first; j < civ[k].second; ++j) cmap[static_cast<std::size_t>(j)] = static_cast<int>(k);
    std::vector<std::pair<int, int>> q;
    for (const auto& [i, j] : m.ones())
        q.emplace_back(rmap[static_cast<std::size_t>(i)], cmap[static_cast<std::size_t>(j)]);
    return Matrix(static_cast<int>(riv.size()), static_cast<int>(civ.size()), std::move(q));
}

Matrix superpose(const std::vector<Matrix>& ms) {
    if (ms.empty()) throw ArgumentError("superpose needs at least one matrix");
    std::vector<std::pair<int, int>> ones;
    for (const Matrix& m : ms) {
        if (m.row_count() != ms.front().row_count() || m.col_count() != ms.front().col_count())
            throw StructuralError("superpose: dimension mismatch");
        ones.insert(ones.end(), m.ones().begin(), m.ones().end());
    }
    return Matrix(ms.front().row_count(), ms.front().col_count(), std::move(ones));
}

BijectionMatrix::BijectionMatrix(std::vector<int> perm) : perm_(std::move(perm)) {
    std::vector<char> seen(perm_.size(), 0);
    for (int c : perm_) {
        if (c < 0 || c >= static_cast<int>(perm_.size()) || seen[static_cast<std::size_t>(c)])
            throw StructuralError("not a bijection");
        seen[static_cast<std::size_t>(c)] = 1;
    }
}

BijectionMatrix BijectionMatrix::identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    return BijectionMatrix(std::move(p));
}

BijectionMatrix BijectionMatrix::reverse(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = n - 1 - i;
    return BijectionMatrix(std::move(p));
}

BijectionMatrix BijectionMatrix::from_matrix(const Matrix& m) {
    if (m.row_count() != m.col_count())
        throw StructuralError("bijection matrix must be square");
    if (static_cast<int>(m.ones().size()) != m.row_count())
        throw StructuralError("bijection matrix must have exactly one 1 per row");
    std::vector<int> perm(static_cast<std::size_t>(m.row_count()), -1);
    for (const auto& [i, j] : m.ones()) {
        if (perm[static_cast<std::size_t>(i)] != -1)
            throw StructuralError("row with two 1s in bijection matrix");
        perm[static_cast<std::size_t>(i)] = j;
    }
    return BijectionMatrix(std::move(perm));
}

BijectionMatrix BijectionMatrix::inverse() const {
    std::vector<int> inv(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i)
        inv[static_cast<std::size_t>(perm_[i])] = static_cast<int>(i);
    return BijectionMatrix(std::move(inv));
}

Matrix BijectionMatrix::to_matrix() const {
    std::vector<std::pair<int, int>> ones;
    ones.reserve(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i)
        ones.emplace_back(static_cast<int>(i), perm_[i]);
    return Matrix(size(), size(), std::move(ones));
}

Matrix substitute(const BijectionMatrix& pattern,
                  const std::map<std::pair<int, int>, Matrix>& blocks) {
    const int b = pattern.size();
    std::vector<int> height(static_cast<std::size_t>(b)), width(static_cast<std::size_t>(b));
    for (int a = 0; a < b; ++a) {
        const auto it = blocks.find({a, pattern.image(a)});
        if (it == blocks.end())
            throw StructuralError("missing block for 1-position (" + std::to_string(a) + ", " +
                                  std::to_string(pattern.image(a)) + ")");
        if (it->second.row_count() == 0 || it->second.col_count() == 0)
            throw StructuralError("blocks must be non-empty");
        height[static_cast<std::size_t>(a)] = it->second.row_count();
        width[static_cast<std::size_t>(pattern.image(a))] = it->second.col_count();
    }
    std::vector<int> row_off(static_cast<std::size_t>(b) + 1, 0), col_off(static_cast<std::size_t>(b) + 1, 0);
    for (int a = 0; a < b; ++a) {
        row_off[static_cast<std::size_t>(a) + 1] = row_off[static_cast<std::size_t>(a)] + height[static_cast<std::size_t>(a)];
        col_off[static_cast<std::size_t>(a) + 1] = col_off[static_cast<std::size_t>(a)] + width[static_cast<std::size_t>(a)];
    }
    std::vector<std::pair<int, int>> ones;
    for (int a = 0; a < b; ++a) {
        const int fa = pattern.image(a);
        const Matrix& block = blocks.at({a, fa});
        for (const auto& [i, j] : block.ones())
            ones.emplace_back(row_off[static_cast<std::size_t>(a)] + i, col_off[static_cast<std::size_t>(fa)] + j);
    }
    return Matrix(row_off[static_cast<std::size_t>(b)], col_off[static_cast<std::size_t>(b)], std::move(ones));
}

Matrix tensor(const Matrix& a, const Matrix& b) {
    std::vector<std::pair<int, int>> ones;
    ones.reserve(a.ones().size() * b.ones().size());
    for (const auto& [i, j] : a.ones())
        for (const auto& [k, l] : b.ones())
            ones.emplace_back(i * b.row_count() + k, j * b.col_count() + l);
    return Matrix(a.row_count() * b.row_count(), a.col_count() * b.col_count(), std::move(ones));
}

BijectionMatrix compose(const BijectionMatrix& sigma, const BijectionMatrix& tau) {
    if (sigma.size() != tau.size())
        throw StructuralError("compose: sigma's column set must equal tau's row set");
    std::vector<int> p(static_cast<std::size_t>(sigma.size()));
    for (int x = 0; x < sigma.size(); ++x) p[static_cast<std::size_t>(x)] = tau.image(sigma.image(x));
    return BijectionMatrix(std::move(p));
}

Matrix read_matrix(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty matrix input");
    std::istringstream dims(line);
    int r = 0, c = 0;
    if (!(dims >> r >> c)) throw IoError("malformed 'r c' line: " + line);
    std::vector<std::pair<int, int>> ones;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream es(line);
        int i = 0, j = 0;
        if (!(es >> i >> j)) throw IoError("malformed entry line: " + line);
        ones.emplace_back(i, j);
    }
    return Matrix(r, c, std::move(ones));
}

void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.row_count() << ' ' << m.col_count() << '\n';
    for (const auto& [i, j] : m.ones()) out << i << ' ' << j << '\n';
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_matrix(in);
}

void write_matrix_file(const std::string& path, const Matrix& m) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_matrix(out, m);
}

std::string to_text(const Matrix& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

}  // namespace tww
