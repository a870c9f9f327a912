#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "conley/rat.hpp"

namespace conley {

/// The algebra layer runs on arbitrary-precision rationals: polynomial
/// elimination has genuinely explosive intermediate coefficients even for
/// 5x5 integer matrices.
using BigRat = boost::multiprecision::cpp_rational;

using IMat = std::vector<std::vector<long long>>;  // row major
using QMat = std::vector<std::vector<BigRat>>;

IMat imat(int rows, int cols);
IMat identity(int n);
IMat imul(const IMat& a, const IMat& b);
std::vector<long long> apply(const IMat& a, const std::vector<long long>& x);
QMat qmat(const IMat& a);
QMat qmul(const QMat& a, const QMat& b);
bool is_identity(const IMat& a);

/// Smith normal form d = u * a * v with u, v unimodular; diag holds the
/// invariant factors (non-negative), rank their count.
struct Smith {
    IMat u, uinv, v, vinv;
    std::vector<long long> diag;
    int rank = 0;
};
Smith smith_normal_form(const IMat& a);

/// Determinant of a square rational matrix (exact).
BigRat qdet(const QMat& a);
long long idet_unimodular(const IMat& a);  // checks det = ±1, throws otherwise
IMat iinverse_unimodular(const IMat& a);

/// Exact rank over the rationals.
int qrank(QMat a);
/// Basis of the column space, as columns.
QMat column_space_basis(const QMat& a);
/// Solve a * x = b for each column of b; throws if inconsistent.
QMat qsolve(QMat a, QMat b);
QMat qinverse(const QMat& a);

/// Monic polynomial over the rationals, coefficients low to high.
struct QPoly {
    std::vector<BigRat> c;
    int degree() const { return (int)c.size() - 1; }
    bool operator==(const QPoly& o) const { return c == o.c; }
    std::string str() const;  // canonical expanded rendering, e.g. x^2-2x+1
};

/// Non-unit invariant factors of xI - a: the Frobenius (rational canonical)
/// form data of the matrix, a complete conjugacy invariant over the
/// rationals. Sorted by divisibility (each divides the next).
std::vector<QPoly> frobenius_invariant_factors(const QMat& a);

}  // namespace conley
