#include "conley/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace conley {

IMat imat(int rows, int cols) {
    return IMat(rows, std::vector<long long>(cols, 0));
}

IMat identity(int n) {
    IMat a = imat(n, n);
    for (int i = 0; i < n; ++i) a[i][i] = 1;
    return a;
}

bool is_identity(const IMat& a) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

IMat imul(const IMat& a, const IMat& b) {
    int n = (int)a.size(), m = n ? (int)a[0].size() : 0;
    int p = b.empty() ? 0 : (int)b[0].size();
    if (m != (int)b.size()) throw std::invalid_argument("imul: shape mismatch");
    IMat c = imat(n, p);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < m; ++k) {
            if (!a[i][k]) continue;
            for (int j = 0; j < p; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

std::vector<long long> apply(const IMat& a, const std::vector<long long>& x) {
    std::vector<long long> y(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

QMat qmat(const IMat& a) {
    QMat q(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        q[i].assign(a[i].begin(), a[i].end());
    return q;
}

QMat qmul(const QMat& a, const QMat& b) {
    int n = (int)a.size(), m = n ? (int)a[0].size() : 0;
    int p = b.empty() ? 0 : (int)b[0].size();
    if (m != (int)b.size()) throw std::invalid_argument("qmul: shape mismatch");
    QMat c(n, std::vector<Rat>(p, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < m; ++k) {
            if (a[i][k].num == 0) continue;
            for (int j = 0; j < p; ++j) c[i][j] = c[i][j] + a[i][k] * b[k][j];
        }
    return c;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct SnfState {
    IMat a, u, uinv, v, vinv;

    void row_swap(int i, int j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
        for (auto& r : uinv) std::swap(r[i], r[j]);
    }
    void col_swap(int i, int j) {
        for (auto& r : a) std::swap(r[i], r[j]);
        for (auto& r : v) std::swap(r[i], r[j]);
        std::swap(vinv[i], vinv[j]);
    }
    // row i -= k * row j   (uinv gets the inverse op: col j += k * col i)
    void row_axpy(int i, int j, long long k) {
        for (size_t t = 0; t < a[i].size(); ++t) a[i][t] -= k * a[j][t];
        for (size_t t = 0; t < u[i].size(); ++t) u[i][t] -= k * u[j][t];
        for (auto& r : uinv) r[j] += k * r[i];
    }
    void col_axpy(int i, int j, long long k) {  // col i -= k * col j
        for (auto& r : a) r[i] -= k * r[j];
        for (auto& r : v) r[i] -= k * r[j];
        for (size_t t = 0; t < vinv[i].size(); ++t) vinv[j][t] += k * vinv[i][t];
    }
    void row_negate(int i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : u[i]) x = -x;
        for (auto& r : uinv) r[i] = -r[i];
    }
};

}  // namespace

Smith smith_normal_form(const IMat& input) {
    int n = (int)input.size();
    int m = n ? (int)input[0].size() : 0;
    SnfState s;
    s.a = input;
    s.u = identity(n);
    s.uinv = identity(n);
    s.v = identity(m);
    s.vinv = identity(m);

    int t = 0;
    while (t < n && t < m) {
        // find a pivot with minimal absolute value
        int pi = -1, pj = -1;
        long long best = 0;
        for (int i = t; i < n; ++i)
            for (int j = t; j < m; ++j) {
                long long x = s.a[i][j] < 0 ? -s.a[i][j] : s.a[i][j];
                if (x != 0 && (pi < 0 || x < best)) { pi = i; pj = j; best = x; }
            }
        if (pi < 0) break;
        s.row_swap(t, pi);
        s.col_swap(t, pj);
        if (s.a[t][t] < 0) s.row_negate(t);
        bool clean = true;
        for (int i = t + 1; i < n; ++i)
            if (s.a[i][t] != 0) {
                long long q = s.a[i][t] / s.a[t][t];
                s.row_axpy(i, t, q);
                if (s.a[i][t] != 0) clean = false;
            }
        for (int j = t + 1; j < m; ++j)
            if (s.a[t][j] != 0) {
                long long q = s.a[t][j] / s.a[t][t];
                s.col_axpy(j, t, q);
                if (s.a[t][j] != 0) clean = false;
            }
        if (!clean) continue;  // remainders became new smaller pivots
        // divisibility sweep: fold an offending row in and re-eliminate
        bool redo = false;
        for (int i = t + 1; i < n && !redo; ++i)
            for (int j = t + 1; j < m && !redo; ++j)
                if (s.a[i][j] % s.a[t][t] != 0) {
                    s.row_axpy(t, i, -1);  // row t += row i
                    redo = true;
                }
        if (redo) continue;
        ++t;
    }
    Smith out;
    out.u = std::move(s.u);
    out.uinv = std::move(s.uinv);
    out.v = std::move(s.v);
    out.vinv = std::move(s.vinv);
    for (int i = 0; i < std::min(n, m); ++i)
        if (s.a[i][i] != 0) {
            out.diag.push_back(s.a[i][i]);
            ++out.rank;
        }
    return out;
}

// ---------------------------------------------------------------------------
// rational elimination

Rat qdet(const QMat& a) {
    int n = (int)a.size();
    QMat m = a;
    Rat det(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c].num != 0) { p = r; break; }
        if (p < 0) return Rat(0);
        if (p != c) { std::swap(m[p], m[c]); det = -det; }
        det = det * m[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c].num == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (int j = c; j < n; ++j) m[r][j] = m[r][j] - f * m[c][j];
        }
    }
    return det;
}

long long idet_unimodular(const IMat& a) {
    Rat d = qdet(qmat(a));
    if (!(d == Rat(1) || d == Rat(-1)))
        throw std::domain_error("matrix is not unimodular (det " + d.str() + ")");
    return d.num;
}

IMat iinverse_unimodular(const IMat& a) {
    idet_unimodular(a);
    int n = (int)a.size();
    QMat inv = qinverse(qmat(a));
    IMat out = imat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (inv[i][j].den != 1)
                throw std::domain_error("unimodular inverse not integral");
            out[i][j] = inv[i][j].num;
        }
    return out;
}

int qrank(QMat m) {
    int n = (int)m.size();
    int c = n ? (int)m[0].size() : 0;
    int rank = 0;
    for (int col = 0; col < c && rank < n; ++col) {
        int p = -1;
        for (int r = rank; r < n; ++r)
            if (m[r][col].num != 0) { p = r; break; }
        if (p < 0) continue;
        std::swap(m[p], m[rank]);
        for (int r = 0; r < n; ++r) {
            if (r == rank || m[r][col].num == 0) continue;
            Rat f = m[r][col] / m[rank][col];
            for (int j = col; j < c; ++j) m[r][j] = m[r][j] - f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

QMat column_space_basis(const QMat& a) {
    int n = (int)a.size();
    int c = n ? (int)a[0].size() : 0;
    QMat m = a;
    std::vector<int> pivots;
    int rank = 0;
    for (int col = 0; col < c && rank < n; ++col) {
        int p = -1;
        for (int r = rank; r < n; ++r)
            if (m[r][col].num != 0) { p = r; break; }
        if (p < 0) continue;
        std::swap(m[p], m[rank]);
        for (int r = 0; r < n; ++r) {
            if (r == rank || m[r][col].num == 0) continue;
            Rat f = m[r][col] / m[rank][col];
            for (int j = col; j < c; ++j) m[r][j] = m[r][j] - f * m[rank][j];
        }
        pivots.push_back(col);
        ++rank;
    }
    QMat basis(n, std::vector<Rat>(pivots.size(), Rat(0)));
    for (size_t k = 0; k < pivots.size(); ++k)
        for (int i = 0; i < n; ++i) basis[i][k] = a[i][pivots[k]];
    return basis;
}

QMat qsolve(QMat a, QMat b) {
    int n = (int)a.size();
    int m = n ? (int)a[0].size() : 0;
    int p = b.empty() ? 0 : (int)b[0].size();
    if ((int)b.size() != n) throw std::invalid_argument("qsolve: shape mismatch");
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < m && rank < n; ++col) {
        int pr = -1;
        for (int r = rank; r < n; ++r)
            if (a[r][col].num != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(a[pr], a[rank]);
        std::swap(b[pr], b[rank]);
        Rat d = a[rank][col];
        for (int j = 0; j < m; ++j) a[rank][j] = a[rank][j] / d;
        for (int j = 0; j < p; ++j) b[rank][j] = b[rank][j] / d;
        for (int r = 0; r < n; ++r) {
            if (r == rank || a[r][col].num == 0) continue;
            Rat f = a[r][col];
            for (int j = 0; j < m; ++j) a[r][j] = a[r][j] - f * a[rank][j];
            for (int j = 0; j < p; ++j) b[r][j] = b[r][j] - f * b[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int r = rank; r < n; ++r)
        for (int j = 0; j < p; ++j)
            if (b[r][j].num != 0) throw std::domain_error("qsolve: inconsistent");
    QMat x(m, std::vector<Rat>(p, Rat(0)));
    for (int r = 0; r < rank; ++r)
        for (int j = 0; j < p; ++j) x[pivot_col[r]][j] = b[r][j];
    return x;
}

QMat qinverse(const QMat& a) {
    int n = (int)a.size();
    QMat id(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) id[i][i] = Rat(1);
    return qsolve(a, id);
}

// ---------------------------------------------------------------------------
// polynomial arithmetic and the rational canonical form

namespace {

using Poly = std::vector<Rat>;  // low to high, normalized (no zero lead)

void trim(Poly& p) {
    while (!p.empty() && p.back().num == 0) p.pop_back();
}
int deg(const Poly& p) { return (int)p.size() - 1; }  // -1 for zero
bool is_zero(const Poly& p) { return p.empty(); }

Poly padd(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    trim(r);
    return r;
}
Poly pneg(const Poly& a) {
    Poly r = a;
    for (auto& x : r) x = -x;
    return r;
}
Poly pmul(const Poly& a, const Poly& b) {
    if (is_zero(a) || is_zero(b)) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    trim(r);
    return r;
}
// division with remainder: a = q*b + r
std::pair<Poly, Poly> pdivmod(Poly a, const Poly& b) {
    if (is_zero(b)) throw std::domain_error("polynomial division by zero");
    Poly q;
    while (!is_zero(a) && deg(a) >= deg(b)) {
        int shift = deg(a) - deg(b);
        Rat f = a.back() / b.back();
        if ((int)q.size() < shift + 1) q.resize(shift + 1, Rat(0));
        q[shift] = q[shift] + f;
        for (size_t i = 0; i < b.size(); ++i)
            a[i + shift] = a[i + shift] - f * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}
void pmonic(Poly& p) {
    if (is_zero(p)) return;
    Rat lead = p.back();
    for (auto& x : p) x = x / lead;
}

using PMat = std::vector<std::vector<Poly>>;

}  // namespace

std::string QPoly::str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = (int)c.size() - 1; i >= 0; --i) {
        const Rat& a = c[i];
        if (a.num == 0) continue;
        bool neg = a.num < 0;
        Rat mag = neg ? -a : a;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? "-" : "+");
        }
        bool unit = (mag == Rat(1));
        if (i == 0 || !unit) os << mag.str();
        if (i >= 1) {
            os << "x";
            if (i >= 2) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

std::vector<QPoly> frobenius_invariant_factors(const QMat& a) {
    int n = (int)a.size();
    // characteristic matrix xI - a as a polynomial matrix
    PMat m(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly p;
            if (a[i][j].num != 0) p.push_back(-a[i][j]);
            if (i == j) {
                if (p.empty()) p.push_back(Rat(0));
                p.push_back(Rat(1));
            }
            trim(p);
            m[i][j] = p;
        }
    // Smith normal form over Q[x]
    int t = 0;
    while (t < n) {
        int pi = -1, pj = -1;
        for (int i = t; i < n; ++i)
            for (int j = t; j < n; ++j)
                if (!is_zero(m[i][j]) &&
                    (pi < 0 || deg(m[i][j]) < deg(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(m[pi], m[t]);
        for (int i = 0; i < n; ++i) std::swap(m[i][pj], m[i][t]);
        bool clean = true;
        for (int i = t + 1; i < n; ++i) {
            if (is_zero(m[i][t])) continue;
            auto [q, r] = pdivmod(m[i][t], m[t][t]);
            for (int j = t; j < n; ++j)
                m[i][j] = padd(m[i][j], pneg(pmul(q, m[t][j])));
            if (!is_zero(m[i][t])) clean = false;
        }
        for (int j = t + 1; j < n; ++j) {
            if (is_zero(m[t][j])) continue;
            auto [q, r] = pdivmod(m[t][j], m[t][t]);
            for (int i = t; i < n; ++i)
                m[i][j] = padd(m[i][j], pneg(pmul(q, m[i][t])));
            if (!is_zero(m[t][j])) clean = false;
        }
        if (!clean) continue;
        bool redo = false;
        for (int i = t + 1; i < n && !redo; ++i)
            for (int j = t + 1; j < n && !redo; ++j) {
                auto [q, r] = pdivmod(m[i][j], m[t][t]);
                if (!is_zero(r)) {
                    // fold row i into row t to force divisibility
                    for (int jj = t; jj < n; ++jj)
                        m[t][jj] = padd(m[t][jj], m[i][jj]);
                    redo = true;
                }
            }
        if (redo) continue;
        ++t;
    }
    std::vector<QPoly> out;
    for (int i = 0; i < n; ++i) {
        Poly d = m[i][i];
        if (is_zero(d))
            throw std::domain_error("characteristic matrix lost full rank");
        pmonic(d);
        if (deg(d) >= 1) out.push_back(QPoly{d});
    }
    // ascending divisibility order by degree
    std::sort(out.begin(), out.end(), [](const QPoly& x, const QPoly& y) {
        return x.degree() < y.degree();
    });
    return out;
}

}  // namespace conley
