#include "tannaka/exactlin.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace tannaka::lin {

Scalar::Scalar(long num, long den) : value_(num, den) {
    if (den == 0) throw InputError("zero denominator");
    value_.canonicalize();
}

Scalar::Scalar(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
    auto bad = [&] { return InputError("malformed rational \"" + std::string(text) + "\""); };
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
    std::string num_s(num);
    if (num_s[0] == '+') num_s.erase(0, 1);
    mpz_class n(num_s, 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
    return Scalar(mpq_class(n, d));
}

std::string Scalar::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DimensionError("division by zero");
    value_ /= o.value_;
    return *this;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols)
        throw DimensionError("matrix " + shape() + " needs " + std::to_string(rows * cols) +
                             " entries, got " + std::to_string(entries_.size()));
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionError("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::column(std::vector<Scalar> entries) {
    const auto n = entries.size();
    return {n, 1, std::move(entries)};
}

std::string Matrix::shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

Matrix Matrix::column_at(std::size_t c) const {
    Matrix out(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) out(r, 0) = (*this)(r, c);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("cannot add " + shape() + " and " + o.shape());
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("cannot subtract " + o.shape() + " from " + shape());
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

Matrix compose(const Matrix& g, const Matrix& f) {
    if (f.rows() != g.cols())
        throw DimensionError("cannot compose " + g.shape() + " after " + f.shape());
    Matrix out(g.rows(), f.cols());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t k = 0; k < g.cols(); ++k) {
            const Scalar& gik = g(i, k);
            if (gik.is_zero()) continue;
            for (std::size_t j = 0; j < f.cols(); ++j) {
                const Scalar& fkj = f(k, j);
                if (!fkj.is_zero()) out(i, j) += gik * fkj;
            }
        }
    }
    return out;
}

Matrix kronecker(const Matrix& f, const Matrix& g) {
    Matrix out(f.rows() * g.rows(), f.cols() * g.cols());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) {
            const Scalar& fij = f(i, j);
            if (fij.is_zero()) continue;
            for (std::size_t k = 0; k < g.rows(); ++k)
                for (std::size_t l = 0; l < g.cols(); ++l)
                    if (!g(k, l).is_zero()) out(i * g.rows() + k, j * g.cols() + l) = fij * g(k, l);
        }
    return out;
}

Matrix apply_middle(std::size_t left, const Matrix& m, std::size_t right, const Matrix& x) {
    if (x.rows() != left * m.cols() * right)
        throw DimensionError("cannot apply I_" + std::to_string(left) + " (x) " + m.shape() + " (x) I_" +
                             std::to_string(right) + " to " + x.shape());
    Matrix out(left * m.rows() * right, x.cols());
    for (std::size_t l = 0; l < left; ++l)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const Scalar& mij = m(i, j);
                if (mij.is_zero()) continue;
                for (std::size_t r = 0; r < right; ++r) {
                    const std::size_t orow = (l * m.rows() + i) * right + r;
                    const std::size_t xrow = (l * m.cols() + j) * right + r;
                    for (std::size_t c = 0; c < x.cols(); ++c)
                        if (!x(xrow, c).is_zero()) out(orow, c) += mij * x(xrow, c);
                }
            }
    return out;
}

Matrix after_middle(const Matrix& x, std::size_t left, const Matrix& m, std::size_t right) {
    if (x.cols() != left * m.rows() * right)
        throw DimensionError("cannot compose " + x.shape() + " after I_" + std::to_string(left) + " (x) " + m.shape() +
                             " (x) I_" + std::to_string(right));
    Matrix out(x.rows(), left * m.cols() * right);
    for (std::size_t row = 0; row < x.rows(); ++row)
        for (std::size_t l = 0; l < left; ++l)
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t r = 0; r < right; ++r) {
                    const Scalar& xv = x(row, (l * m.rows() + i) * right + r);
                    if (xv.is_zero()) continue;
                    for (std::size_t j = 0; j < m.cols(); ++j)
                        if (!m(i, j).is_zero()) out(row, (l * m.cols() + j) * right + r) += xv * m(i, j);
                }
    return out;
}

Matrix kronecker(std::span<const Matrix> factors) {
    Matrix acc = Matrix::identity(1);
    for (const auto& f : factors) acc = kronecker(acc, f);
    return acc;
}

Matrix hstack(std::span<const Matrix> blocks) {
    if (blocks.empty()) return {};
    const std::size_t rows = blocks.front().rows();
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw DimensionError("hstack row mismatch: " + b.shape());
        cols += b.cols();
    }
    Matrix out(rows, cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, off + c) = b(r, c);
        off += b.cols();
    }
    return out;
}

Matrix vstack(std::span<const Matrix> blocks) {
    if (blocks.empty()) return {};
    const std::size_t cols = blocks.front().cols();
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw DimensionError("vstack column mismatch: " + b.shape());
        rows += b.rows();
    }
    Matrix out(rows, cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < cols; ++c) out(off + r, c) = b(r, c);
        off += b.rows();
    }
    return out;
}

namespace {

// Reduced row echelon form in place, scanning pivot columns left to right and
// taking the first nonzero row as pivot. Only the first `pivot_cols` columns
// are eligible as pivots (so augmented columns can ride along).
std::vector<std::size_t> reduce(Matrix& m, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        const Scalar inv = Scalar(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            if (!m(row, c).is_zero()) m(row, c) *= inv;
        // Sparse support of the pivot row, reused for every elimination.
        std::vector<std::size_t> support;
        for (std::size_t c = col; c < m.cols(); ++c)
            if (!m(row, c).is_zero()) support.push_back(c);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Scalar factor = m(r, col);
            for (std::size_t c : support) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw DimensionError("solve: A is " + a.shape() + " but b is " + b.shape());
    const std::array<Matrix, 2> parts{a, b};
    Matrix aug = hstack(parts);
    if (a.rows() == 0) aug = Matrix(0, a.cols() + b.cols());
    const auto pivots = reduce(aug, a.cols());
    for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
        for (std::size_t c = a.cols(); c < aug.cols(); ++c)
            if (!aug(r, c).is_zero()) return std::nullopt;
    Matrix x(a.cols(), b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t c = 0; c < b.cols(); ++c) x(pivots[i], c) = aug(i, a.cols() + c);
    return x;
}

std::vector<Matrix> kernel_basis(const Matrix& a) {
    Matrix m = a;
    const auto pivots = reduce(m, a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Matrix> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Matrix v(a.cols(), 1);
        v(free, 0) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v(pivots[i], 0) = -m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const Matrix& a) {
    Matrix m = a;
    return reduce(m, a.cols()).size();
}

namespace {

void check_permutation(std::span<const std::size_t> perm, std::span<const std::size_t> dims) {
    if (perm.size() != dims.size()) throw InputError("permutation length differs from factor count");
    std::vector<bool> seen(perm.size(), false);
    for (auto p : perm) {
        if (p >= perm.size() || seen[p]) throw InputError("not a permutation of factor positions");
        seen[p] = true;
    }
}

// For each input flat index, the output flat index it is sent to.
std::vector<std::size_t> permutation_targets(std::span<const std::size_t> perm,
                                             std::span<const std::size_t> dims) {
    check_permutation(perm, dims);
    const std::size_t n = dims.size();
    const std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
    std::vector<std::size_t> out_dims(n);
    for (std::size_t i = 0; i < n; ++i) out_dims[i] = dims[perm[i]];
    std::vector<std::size_t> targets(total);
    std::vector<std::size_t> digits(n, 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        for (std::size_t i = n; i-- > 0;) {
            digits[i] = rem % dims[i];
            rem /= dims[i];
        }
        std::size_t out = 0;
        for (std::size_t i = 0; i < n; ++i) out = out * out_dims[i] + digits[perm[i]];
        targets[flat] = out;
    }
    return targets;
}

}  // namespace

Matrix permutation_matrix(std::span<const std::size_t> perm, std::span<const std::size_t> dims) {
    const auto targets = permutation_targets(perm, dims);
    Matrix p(targets.size(), targets.size());
    for (std::size_t in = 0; in < targets.size(); ++in) p(targets[in], in) = 1;
    return p;
}

Matrix permute_columns(const Matrix& m, std::span<const std::size_t> perm, std::span<const std::size_t> dims) {
    const auto targets = permutation_targets(perm, dims);
    if (targets.size() != m.cols())
        throw DimensionError("permute_columns: matrix " + m.shape() + " vs permutation of size " +
                             std::to_string(targets.size()));
    Matrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t in = 0; in < targets.size(); ++in) out(r, in) = m(r, targets[in]);
    return out;
}

Matrix swap_matrix(std::size_t dim_v, std::size_t dim_w) {
    const std::array<std::size_t, 2> perm{1, 0};
    const std::array<std::size_t, 2> dims{dim_v, dim_w};
    return permutation_matrix(perm, dims);
}

std::optional<EntryDiff> first_difference(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("cannot compare " + a.shape() + " with " + b.shape());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!(a(r, c) == b(r, c))) return EntryDiff{r, c, a(r, c), b(r, c)};
    return std::nullopt;
}

}  // namespace tannaka::lin
