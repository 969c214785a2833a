#ifndef CENTROIDKIT_LINALG_HPP
#define CENTROIDKIT_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace ck {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

/// Parses "p/q" or "n"; throws std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(const std::string& s);
/// Canonical text form: "n" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& s, const Vec& v);
/// a += s * b
void axpy(Vec& a, const Rational& s, const Vec& b);
Rational dot(const Vec& a, const Vec& b);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Rational& at(std::size_t i, std::size_t j);
    const Rational& at(std::size_t i, std::size_t j) const;

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    void set_col(std::size_t j, const Vec& v);

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Rational& s) const;
    Vec operator*(const Vec& v) const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    Rational trace() const;

    /// Row-major flattening: entry (i,j) at index i*cols+j.
    Vec flatten() const { return data_; }
    static Matrix unflatten(const Vec& v, std::size_t rows, std::size_t cols);

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

struct EchelonForm {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

/// Bareiss fraction-free elimination (leftmost column, topmost row pivoting),
/// followed by normalization to reduced row echelon form.
EchelonForm row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);
Rational determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Linear subspace of Q^n held in canonical form: basis rows are the nonzero
/// rows of the reduced row echelon form of any spanning set.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<Vec>& vecs);
    static Subspace full(std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& s) const;
    /// Coordinates of v with respect to basis(), if v lies in the subspace.
    std::optional<Vec> coordinates(const Vec& v) const;
    /// Residual of v after reducing against the basis (zero iff v is contained).
    Vec reduce(const Vec& v) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

/// Incremental span with membership test; insert() reports whether the
/// vector was independent of everything inserted so far.
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t ambient) : ambient_(ambient) {}
    bool insert(const Vec& v);
    bool contains(const Vec& v) const;
    std::size_t dim() const { return rows_.size(); }
    Subspace subspace() const;

private:
    Vec reduce(const Vec& v) const;
    std::size_t ambient_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

/// Fast coordinates with respect to a fixed linearly independent family.
class CoordinateSystem {
public:
    CoordinateSystem() = default;
    /// Throws std::invalid_argument if the family is dependent.
    CoordinateSystem(std::vector<Vec> basis, std::size_t ambient);
    std::size_t size() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    std::optional<Vec> coordinates(const Vec& v) const;
    Vec combine(const Vec& coords) const;

private:
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::size_t> rows_;
    Matrix inv_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// Image of s under m (m acts on column vectors).
Subspace image(const Matrix& m, const Subspace& s);
Subspace column_space(const Matrix& m);

Subspace kernel(const Matrix& m);
/// Returns x with m*x = b (free variables zero), or nullopt if inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Incrementally row-reduced sparse linear system; used for the large
/// homogeneous systems (centroids, derivations, cocycles).
class SparseSystem {
public:
    using Row = std::vector<std::pair<std::size_t, Rational>>;

    explicit SparseSystem(std::size_t nvars);

    std::size_t nvars() const { return nvars_; }
    std::size_t rank() const { return rank_; }
    /// Adds the equation sum(coef * x[var]) = 0. Duplicate variables are merged.
    void add_equation(Row row);
    /// Adds the equation x[var] = 0.
    void fix_zero(std::size_t var);
    Subspace kernel() const;

private:
    std::size_t nvars_;
    std::size_t rank_ = 0;
    std::vector<Row> pivot_rows_;      // indexed by pivot column; empty if none
};

/// Polynomial with rational coefficients, low degree first.
struct Poly {
    Vec c;
    int degree() const;
    Rational eval(const Rational& x) const;
    bool is_zero() const { return degree() < 0; }
    Rational leading() const;
    std::string str(const std::string& var = "x") const;
};

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_monic(const Poly& a);
/// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic.
std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& a, const Poly& b);
Matrix poly_eval(const Poly& p, const Matrix& m);

Poly minimal_polynomial(const Matrix& m);
/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const Poly& p);
/// Nontrivial factorization p = f*g over Q for deg p <= 4, if one exists.
/// Throws std::invalid_argument for degree > 4.
std::optional<std::pair<Poly, Poly>> split_low_degree(const Poly& p);
bool irreducible_low_degree(const Poly& p);

struct EigenBlock {
    Vec values;   // one eigenvalue per operator
    Subspace space;
};

/// Joint eigenspace decomposition of pairwise commuting operators diagonalizable
/// over Q. Throws std::invalid_argument if the operators do not commute and
/// std::domain_error("not split over Q") for irrational or defective spectra.
std::vector<EigenBlock> simultaneous_eigenspaces(const std::vector<Matrix>& ops, std::size_t dim);

}  // namespace ck

#endif
