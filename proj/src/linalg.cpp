#include "centroidkit/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ck {

Rational parse_rational(const std::string& s) {
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational: '" + s + "'");
    if (num[0] == '+') num = num.substr(1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Rational& s, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

void axpy(Vec& a, const Rational& s, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    if (sgn(s) == 0) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(b[i]) != 0) a[i] += s * b[i];
}

Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    Rational r = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) r += a[i] * b[i];
    return r;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

Rational& Matrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    return (*this)(i, j);
}

const Rational& Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    return (*this)(i, j);
}

Vec Matrix::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_col(std::size_t j, const Vec& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (sgn(o(k, j)) != 0) r(i, j) += a * o(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

Matrix Matrix::scaled(const Rational& s) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = s * data_[i];
    return r;
}

Vec Matrix::operator*(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn(v[j]) != 0 && sgn((*this)(i, j)) != 0) r[i] += (*this)(i, j) * v[j];
    return r;
}

bool Matrix::is_zero() const { return ck::is_zero(data_); }

Rational Matrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Matrix Matrix::unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw std::invalid_argument("unflatten size mismatch");
    Matrix m(rows, cols);
    m.data_ = v;
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------- elimination

namespace {

// Fraction-free forward elimination on an integer copy of m.
struct BareissResult {
    std::vector<std::vector<mpz_class>> rows;
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> row_order;  // original row index of each row after swaps
};

BareissResult bareiss(const Matrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    BareissResult res;
    res.rows.assign(R, std::vector<mpz_class>(C));
    res.row_order.resize(R);
    for (std::size_t i = 0; i < R; ++i) {
        res.row_order[i] = i;
        mpz_class l = 1;
        for (std::size_t j = 0; j < C; ++j)
            if (sgn(m(i, j)) != 0) l = lcm(l, m(i, j).get_den());
        for (std::size_t j = 0; j < C; ++j)
            if (sgn(m(i, j)) != 0) res.rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && res.rows[p][c] == 0) ++p;
        if (p == R) continue;
        if (p != r) {
            std::swap(res.rows[p], res.rows[r]);
            std::swap(res.row_order[p], res.row_order[r]);
        }
        const mpz_class piv = res.rows[r][c];
        for (std::size_t i = r + 1; i < R; ++i) {
            const mpz_class f = res.rows[i][c];
            for (std::size_t j = c; j < C; ++j) {
                mpz_class v = piv * res.rows[i][j] - f * res.rows[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                res.rows[i][j] = v;
            }
        }
        prev = piv;
        res.pivots.push_back(c);
        ++r;
    }
    return res;
}

}  // namespace

EchelonForm row_reduce(const Matrix& m) {
    BareissResult b = bareiss(m);
    const std::size_t C = m.cols();
    const std::size_t rk = b.pivots.size();
    Matrix red(rk, C);
    for (std::size_t i = 0; i < rk; ++i) {
        const mpz_class& piv = b.rows[i][b.pivots[i]];
        for (std::size_t j = 0; j < C; ++j)
            if (b.rows[i][j] != 0) {
                red(i, j) = Rational(b.rows[i][j], piv);
                red(i, j).canonicalize();
            }
    }
    for (std::size_t i = rk; i-- > 0;) {
        const std::size_t pc = b.pivots[i];
        for (std::size_t k = 0; k < i; ++k) {
            Rational f = red(k, pc);
            if (sgn(f) == 0) continue;
            for (std::size_t j = pc; j < C; ++j)
                if (sgn(red(i, j)) != 0) red(k, j) -= f * red(i, j);
        }
    }
    return {red, b.pivots};
}

std::size_t rank(const Matrix& m) { return bareiss(m).pivots.size(); }

Rational determinant(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Matrix a = m;
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(a(i, c)) == 0) continue;
            Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    EchelonForm e = row_reduce(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vecs) {
    Subspace s(ambient);
    std::vector<Vec> nz;
    for (const auto& v : vecs) {
        if (v.size() != ambient) throw std::invalid_argument("vector does not match ambient dimension");
        if (!ck::is_zero(v)) nz.push_back(v);
    }
    if (nz.empty()) return s;
    EchelonForm e = row_reduce(Matrix::from_rows(nz, ambient));
    s.pivots_ = e.pivots;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) s.basis_.push_back(e.reduced.row(i));
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        s.basis_.push_back(unit_vec(ambient, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector does not match ambient dimension");
    Vec r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Rational f = r[pivots_[i]];
        if (sgn(f) != 0) axpy(r, -f, basis_[i]);
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return ck::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& s) const {
    if (s.ambient_ != ambient_) return false;
    return std::all_of(s.basis_.begin(), s.basis_.end(), [&](const Vec& v) { return contains(v); });
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    Vec r = v;
    Vec coords(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        coords[i] = r[pivots_[i]];
        if (sgn(coords[i]) != 0) axpy(r, -coords[i], basis_[i]);
    }
    if (!ck::is_zero(r)) return std::nullopt;
    return coords;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    std::vector<Vec> all = a.basis();
    all.insert(all.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient_dim(), all);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    const std::size_t n = a.ambient_dim();
    if (a.dim() == 0 || b.dim() == 0) return Subspace(n);
    // Solve sum x_i a_i - sum y_j b_j = 0.
    Matrix m(n, a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) m.set_col(i, a.basis()[i]);
    for (std::size_t j = 0; j < b.dim(); ++j) m.set_col(a.dim() + j, scale(-1, b.basis()[j]));
    Subspace k = kernel(m);
    std::vector<Vec> vecs;
    for (const auto& kv : k.basis()) {
        Vec v(n);
        for (std::size_t i = 0; i < a.dim(); ++i) axpy(v, kv[i], a.basis()[i]);
        vecs.push_back(v);
    }
    return Subspace::span(n, vecs);
}

Subspace image(const Matrix& m, const Subspace& s) {
    std::vector<Vec> vecs;
    for (const auto& v : s.basis()) vecs.push_back(m * v);
    return Subspace::span(m.rows(), vecs);
}

Subspace column_space(const Matrix& m) { return image(m, Subspace::full(m.cols())); }

Subspace kernel(const Matrix& m) {
    const std::size_t C = m.cols();
    EchelonForm e = row_reduce(m);
    std::vector<bool> is_piv(C, false);
    for (auto p : e.pivots) is_piv[p] = true;
    std::vector<Vec> vecs;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_piv[f]) continue;
        Vec v(C);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
        vecs.push_back(v);
    }
    return Subspace::span(C, vecs);
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong dimension");
    const std::size_t C = m.cols();
    Matrix aug(m.rows(), C + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < C; ++j) aug(i, j) = m(i, j);
        aug(i, C) = b[i];
    }
    EchelonForm e = row_reduce(aug);
    Vec x(C);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == C) return std::nullopt;
        x[e.pivots[i]] = e.reduced(i, C);
    }
    return x;
}

// ---------------------------------------------------------------- SparseSystem

SparseSystem::SparseSystem(std::size_t nvars) : nvars_(nvars), pivot_rows_(nvars) {}

namespace {

void normalize_row(SparseSystem::Row& row) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseSystem::Row out;
    for (auto& [k, v] : row) {
        if (!out.empty() && out.back().first == k)
            out.back().second += v;
        else
            out.emplace_back(k, v);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return sgn(e.second) == 0; }), out.end());
    row.swap(out);
}

// row -= f * piv, both sorted by column.
SparseSystem::Row subtract_scaled(const SparseSystem::Row& row, const Rational& f, const SparseSystem::Row& piv) {
    SparseSystem::Row out;
    out.reserve(row.size() + piv.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || piv[j].first < row[i].first) {
            out.emplace_back(piv[j].first, -f * piv[j].second);
            ++j;
        } else {
            Rational v = row[i].second - f * piv[j].second;
            if (sgn(v) != 0) out.emplace_back(row[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

void SparseSystem::add_equation(Row row) {
    for (const auto& e : row)
        if (e.first >= nvars_) throw std::out_of_range("equation variable out of range");
    normalize_row(row);
    while (!row.empty()) {
        const std::size_t lead = row.front().first;
        const Row& piv = pivot_rows_[lead];
        if (piv.empty()) {
            Rational inv = 1 / row.front().second;
            for (auto& e : row) e.second *= inv;
            pivot_rows_[lead] = std::move(row);
            ++rank_;
            return;
        }
        row = subtract_scaled(row, row.front().second, piv);
    }
}

void SparseSystem::fix_zero(std::size_t var) { add_equation({{var, Rational(1)}}); }

Subspace SparseSystem::kernel() const {
    std::vector<Vec> vecs;
    for (std::size_t f = 0; f < nvars_; ++f) {
        if (!pivot_rows_[f].empty()) continue;
        Vec x(nvars_);
        x[f] = 1;
        for (std::size_t p = nvars_; p-- > 0;) {
            const Row& row = pivot_rows_[p];
            if (row.empty()) continue;
            Rational s = 0;
            for (std::size_t k = 1; k < row.size(); ++k)
                if (sgn(x[row[k].first]) != 0) s += row[k].second * x[row[k].first];
            x[p] = -s;
        }
        vecs.push_back(std::move(x));
    }
    return Subspace::span(nvars_, vecs);
}

// ---------------------------------------------------------------- polynomials

int Poly::degree() const {
    for (std::size_t i = c.size(); i-- > 0;)
        if (sgn(c[i]) != 0) return static_cast<int>(i);
    return -1;
}

Rational Poly::eval(const Rational& x) const {
    Rational r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

Rational Poly::leading() const {
    int d = degree();
    return d < 0 ? Rational(0) : c[static_cast<std::size_t>(d)];
}

std::string Poly::str(const std::string& var) const {
    int d = degree();
    if (d < 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = d; i >= 0; --i) {
        const Rational& a = c[static_cast<std::size_t>(i)];
        if (sgn(a) == 0) continue;
        Rational mag = abs(a);
        if (!first) os << (sgn(a) < 0 ? " - " : " + ");
        else if (sgn(a) < 0) os << "-";
        first = false;
        if (i == 0 || mag != 1) os << to_string(mag);
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

namespace {

Poly trimmed(Poly p) {
    p.c.resize(static_cast<std::size_t>(p.degree() + 1));
    return p;
}

}  // namespace

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    Poly r;
    r.c.assign(static_cast<std::size_t>(a.degree() + b.degree() + 1), Rational(0));
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j)
            r.c[static_cast<std::size_t>(i + j)] += a.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(j)];
    return trimmed(r);
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    return trimmed(r);
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    const int db = b.degree();
    if (db < 0) throw std::invalid_argument("polynomial division by zero");
    Poly r = trimmed(a), q;
    q.c.assign(static_cast<std::size_t>(std::max(0, r.degree() - db + 1)), Rational(0));
    while (r.degree() >= db) {
        const int dr = r.degree();
        Rational f = r.c[static_cast<std::size_t>(dr)] / b.c[static_cast<std::size_t>(db)];
        q.c[static_cast<std::size_t>(dr - db)] = f;
        for (int i = 0; i <= db; ++i) r.c[static_cast<std::size_t>(dr - db + i)] -= f * b.c[static_cast<std::size_t>(i)];
        r = trimmed(r);
    }
    return {trimmed(q), r};
}

Poly poly_monic(const Poly& a) {
    Poly r = trimmed(a);
    if (r.is_zero()) return r;
    Rational l = r.leading();
    for (auto& x : r.c) x /= l;
    return r;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = trimmed(a), y = trimmed(b);
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).second;
        x = y;
        y = r;
    }
    return poly_monic(x);
}

std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& a, const Poly& b) {
    Poly r0 = trimmed(a), r1 = trimmed(b);
    Poly s0{{1}}, s1{}, t0{}, t1{{1}};
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        Poly t2 = poly_sub(t0, poly_mul(q, t1));
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    Rational l = r0.leading();
    if (sgn(l) != 0) {
        for (auto& x : r0.c) x /= l;
        for (auto& x : s0.c) x /= l;
        for (auto& x : t0.c) x /= l;
    }
    return {r0, s0, t0};
}

Matrix poly_eval(const Poly& p, const Matrix& m) {
    const std::size_t n = m.rows();
    Matrix r(n, n);
    for (int i = p.degree(); i >= 0; --i) r = r * m + Matrix::identity(n).scaled(p.c[static_cast<std::size_t>(i)]);
    return r;
}

Poly minimal_polynomial(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("minimal polynomial of non-square matrix");
    const std::size_t n = m.rows();
    // Find the first power that depends on lower ones.
    std::vector<Vec> powers;
    Matrix p = Matrix::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
        Vec v = p.flatten();
        if (!powers.empty()) {
            Matrix a = Matrix::from_columns(powers, n * n);
            if (auto x = solve(a, v)) {
                Poly res;
                res.c.assign(k + 1, Rational(0));
                for (std::size_t i = 0; i < k; ++i) res.c[i] = -(*x)[i];
                res.c[k] = 1;
                return res;
            }
        }
        powers.push_back(v);
        p = p * m;
    }
    throw std::logic_error("minimal polynomial search exceeded matrix size");
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Integer coefficients, primitive, same roots.
std::vector<mpz_class> integer_poly(const Poly& p) {
    Poly t = trimmed(p);
    mpz_class l = 1;
    for (const auto& x : t.c) l = lcm(l, x.get_den());
    std::vector<mpz_class> z;
    for (const auto& x : t.c) z.push_back(x.get_num() * (l / x.get_den()));
    mpz_class g = 0;
    for (const auto& x : z) g = gcd(g, x);
    if (g != 0)
        for (auto& x : z) x /= g;
    if (!z.empty() && z.back() < 0)
        for (auto& x : z) x = -x;
    return z;
}

Poly from_integer(const std::vector<mpz_class>& z) {
    Poly p;
    for (const auto& x : z) p.c.emplace_back(x);
    return p;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    mpz_class sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
    std::vector<mpz_class> z = integer_poly(p);
    std::vector<Rational> roots;
    std::size_t shift = 0;
    while (shift < z.size() && z[shift] == 0) ++shift;
    if (shift > 0) roots.emplace_back(0);
    std::vector<mpz_class> w(z.begin() + static_cast<std::ptrdiff_t>(shift), z.end());
    if (w.size() > 1) {
        Poly q = from_integer(w);
        for (const auto& a : divisors(w.front()))
            for (const auto& b : divisors(w.back()))
                for (int s : {1, -1}) {
                    Rational r(a * s, b);
                    r.canonicalize();
                    if (sgn(q.eval(r)) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
                        roots.push_back(r);
                }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::optional<std::pair<Poly, Poly>> split_low_degree(const Poly& p) {
    const int d = p.degree();
    if (d > 4) throw std::invalid_argument("factorization implemented only for degree <= 4");
    if (d <= 1) return std::nullopt;
    auto roots = rational_roots(p);
    if (!roots.empty()) {
        Poly lin{{-roots.front(), 1}};
        return std::make_pair(lin, poly_divmod(p, lin).first);
    }
    if (d < 4) return std::nullopt;
    std::vector<mpz_class> z = integer_poly(p);
    const mpz_class &a4 = z[4], &a3 = z[3], &a2 = z[2], &a1 = z[1], &a0 = z[0];
    // (a x^2 + b x + c)(dd x^2 + e x + f)
    for (const auto& a : divisors(a4)) {
        mpz_class dd = a4 / a;
        for (const auto& cm : divisors(a0))
            for (int s : {1, -1}) {
                mpz_class c = cm * s, f = a0 / c;
                mpz_class det = dd * c - a * f;
                std::vector<std::pair<Rational, Rational>> cands;
                if (det != 0) {
                    Rational b(a3 * c - a * a1, det), e(dd * a1 - f * a3, det);
                    b.canonicalize();
                    e.canonicalize();
                    cands.emplace_back(b, e);
                } else {
                    // b*e = P, a*e + dd*b = a3  =>  dd b^2 - a3 b + a P = 0
                    mpz_class P = a2 - a * f - c * dd;
                    Rational disc = Rational(a3 * a3 - 4 * dd * a * P);
                    if (auto sq = rational_sqrt(disc)) {
                        for (int sg : {1, -1}) {
                            Rational b = (Rational(a3) + sg * *sq) / Rational(2 * dd);
                            Rational e = (Rational(a3) - Rational(dd) * b) / Rational(a);
                            cands.emplace_back(b, e);
                        }
                    }
                }
                for (const auto& [b, e] : cands) {
                    Poly f1{{Rational(c), b, Rational(a)}}, f2{{Rational(f), e, Rational(dd)}};
                    Poly prod = poly_mul(f1, f2);
                    if (poly_sub(prod, from_integer(z)).is_zero()) {
                        Rational scale = p.leading() / prod.leading();
                        for (auto& x : f2.c) x *= scale;
                        return std::make_pair(f1, f2);
                    }
                }
            }
    }
    return std::nullopt;
}

bool irreducible_low_degree(const Poly& p) {
    if (p.degree() < 1) return false;
    return !split_low_degree(p).has_value();
}

// ---------------------------------------------------------------- eigenspaces

namespace {

// Matrix of op restricted to an invariant subspace, in the subspace's basis.
Matrix restrict_to(const Matrix& op, const Subspace& s) {
    const std::size_t k = s.dim();
    Matrix r(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        auto c = s.coordinates(op * s.basis()[j]);
        if (!c) throw std::invalid_argument("operators do not preserve joint eigenspaces");
        r.set_col(j, *c);
    }
    return r;
}

}  // namespace

std::vector<EigenBlock> simultaneous_eigenspaces(const std::vector<Matrix>& ops, std::size_t dim) {
    for (const auto& a : ops)
        if (a.rows() != dim || a.cols() != dim) throw std::invalid_argument("operator dimension mismatch");
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j)
            if (!commutator(ops[i], ops[j]).is_zero())
                throw std::invalid_argument("operators do not commute");
    std::vector<EigenBlock> blocks{{Vec{}, Subspace::full(dim)}};
    if (dim == 0) return {};
    for (const auto& op : ops) {
        std::vector<EigenBlock> next;
        for (const auto& blk : blocks) {
            Matrix r = restrict_to(op, blk.space);
            Poly mp = minimal_polynomial(r);
            auto roots = rational_roots(mp);
            if (static_cast<int>(roots.size()) != mp.degree()) throw std::domain_error("not split over Q");
            for (const auto& lam : roots) {
                Subspace k = kernel(r - Matrix::identity(r.rows()).scaled(lam));
                std::vector<Vec> vecs;
                for (const auto& kv : k.basis()) {
                    Vec v(dim);
                    for (std::size_t t = 0; t < kv.size(); ++t) axpy(v, kv[t], blk.space.basis()[t]);
                    vecs.push_back(v);
                }
                Vec vals = blk.values;
                vals.push_back(lam);
                next.push_back({vals, Subspace::span(dim, vecs)});
            }
        }
        blocks = std::move(next);
    }
    std::sort(blocks.begin(), blocks.end(), [](const EigenBlock& a, const EigenBlock& b) { return a.values > b.values; });
    return blocks;
}

}  // namespace ck

namespace ck {

Vec SpanBuilder::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector does not match ambient dimension");
    Vec r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rational f = r[pivots_[i]];
        if (sgn(f) != 0) axpy(r, -f, rows_[i]);
    }
    return r;
}

bool SpanBuilder::insert(const Vec& v) {
    Vec r = reduce(v);
    std::size_t p = 0;
    while (p < r.size() && sgn(r[p]) == 0) ++p;
    if (p == r.size()) return false;
    Rational inv = 1 / r[p];
    for (auto& x : r) x *= inv;
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

bool SpanBuilder::contains(const Vec& v) const { return is_zero(reduce(v)); }

Subspace SpanBuilder::subspace() const { return Subspace::span(ambient_, rows_); }

}  // namespace ck

namespace ck {

CoordinateSystem::CoordinateSystem(std::vector<Vec> basis, std::size_t ambient)
    : ambient_(ambient), basis_(std::move(basis)) {
    const std::size_t k = basis_.size();
    if (k == 0) return;
    EchelonForm e = row_reduce(Matrix::from_rows(basis_, ambient_));
    if (e.pivots.size() != k) throw std::invalid_argument("coordinate family is linearly dependent");
    rows_ = e.pivots;
    Matrix block(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) block(i, j) = basis_[j][rows_[i]];
    inv_ = *inverse(block);
}

std::optional<Vec> CoordinateSystem::coordinates(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector does not match ambient dimension");
    const std::size_t k = basis_.size();
    Vec sel(k);
    for (std::size_t i = 0; i < k; ++i) sel[i] = v[rows_[i]];
    Vec c = k ? inv_ * sel : Vec{};
    if (combine(c) != v) return std::nullopt;
    return c;
}

Vec CoordinateSystem::combine(const Vec& coords) const {
    Vec v(ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i) axpy(v, coords.at(i), basis_[i]);
    return v;
}

}  // namespace ck
