#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "conley/linalg.hpp"

using namespace conley;

static Rat R(long long n, long long d = 1) { return Rat(n, d); }

static IMat random_int_matrix(std::mt19937_64& rng, int n, int m, int span = 4) {
    IMat a = imat(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            a[i][j] = (long long)(rng() % (2 * span + 1)) - span;
    return a;
}

// Gentle unimodular conjugator built together with its inverse so both stay
// small and downstream exact arithmetic cannot overflow.
static std::pair<IMat, IMat> random_unimodular_pair(std::mt19937_64& rng, int n,
                                                    long long bound = 5) {
    IMat u = identity(n), uinv = identity(n);
    for (int step = 0; step < 3 * n; ++step) {
        int i = (int)(rng() % n), j = (int)(rng() % n);
        if (i == j) continue;
        long long k = (rng() & 1) ? 1 : -1;
        IMat tu = u, tui = uinv;
        bool ok = true;
        for (int t = 0; t < n; ++t) {
            tu[i][t] += k * u[j][t];       // row op on u
            tui[t][j] -= k * uinv[t][i];   // inverse column op on uinv
            if (std::abs(tu[i][t]) > bound || std::abs(tui[t][j]) > bound)
                ok = false;
        }
        if (ok) { u = tu; uinv = tui; }
    }
    return {u, uinv};
}

static IMat random_unimodular(std::mt19937_64& rng, int n) {
    return random_unimodular_pair(rng, n).first;
}

TEST_CASE("smith normal form reconstructs the input") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + (int)(rng() % 5), m = 1 + (int)(rng() % 5);
        IMat a = random_int_matrix(rng, n, m);
        Smith s = smith_normal_form(a);
        // u * a * v equals the diagonal
        IMat d = imul(imul(s.u, a), s.v);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                long long expect =
                    (i == j && i < (int)s.diag.size()) ? s.diag[i] : 0;
                CHECK(d[i][j] == expect);
            }
        // divisibility chain
        for (size_t i = 1; i < s.diag.size(); ++i)
            CHECK(s.diag[i] % s.diag[i - 1] == 0);
        // trackers really are mutual inverses
        CHECK(is_identity(imul(s.u, s.uinv)));
        CHECK(is_identity(imul(s.v, s.vinv)));
    }
}

TEST_CASE("unimodular inverse is exact") {
    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + (int)(rng() % 4);
        IMat u = random_unimodular(rng, n);
        IMat ui = iinverse_unimodular(u);
        CHECK(is_identity(imul(u, ui)));
    }
    CHECK_THROWS(iinverse_unimodular(IMat{{2}}));
}

TEST_CASE("rational solve and inverse") {
    QMat a = {{R(2), R(1)}, {R(1), R(1)}};
    QMat inv = qinverse(a);
    QMat prod = qmul(a, inv);
    CHECK(prod[0][0] == R(1));
    CHECK(prod[0][1] == R(0));
    CHECK(prod[1][0] == R(0));
    CHECK(prod[1][1] == R(1));
    CHECK(qrank(a) == 2);
    CHECK(qrank(QMat{{R(1), R(2)}, {R(2), R(4)}}) == 1);
    CHECK(qdet(a) == R(1));
}

TEST_CASE("frobenius form of pinned matrices") {
    // identity 2x2: factors x-1, x-1
    auto id2 = frobenius_invariant_factors(qmat(identity(2)));
    REQUIRE(id2.size() == 2);
    CHECK(id2[0].str() == "x-1");
    CHECK(id2[1].str() == "x-1");
    // unipotent [[1,0],[1,1]]: single factor (x-1)^2
    auto uni = frobenius_invariant_factors(QMat{{R(1), R(0)}, {R(1), R(1)}});
    REQUIRE(uni.size() == 1);
    CHECK(uni[0].str() == "x^2-2x+1");
    // transposition: x^2-1
    auto tau = frobenius_invariant_factors(QMat{{R(0), R(1)}, {R(1), R(0)}});
    REQUIRE(tau.size() == 1);
    CHECK(tau[0].str() == "x^2-1");
    // diag(-1, 1) is conjugate to the transposition over Q
    auto ref = frobenius_invariant_factors(QMat{{R(-1), R(0)}, {R(0), R(1)}});
    REQUIRE(ref.size() == 1);
    CHECK(ref[0] == tau[0]);
    // scalar 2: x-2
    auto two = frobenius_invariant_factors(QMat{{R(2)}});
    REQUIRE(two.size() == 1);
    CHECK(two[0].str() == "x-2");
}

TEST_CASE("frobenius form is a conjugacy invariant") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 250; ++trial) {
        int n = 1 + (int)(rng() % 5);
        IMat a = random_int_matrix(rng, n, n, 2);
        auto [u, uinv] = random_unimodular_pair(rng, n);
        CHECK(is_identity(imul(u, uinv)));
        IMat conj = imul(imul(u, a), uinv);
        auto fa = frobenius_invariant_factors(qmat(a));
        auto fc = frobenius_invariant_factors(qmat(conj));
        REQUIRE(fa.size() == fc.size());
        for (size_t i = 0; i < fa.size(); ++i) CHECK(fa[i] == fc[i]);
        // product of the invariant factors is the characteristic polynomial:
        // degree bookkeeping catches dropped factors
        int total = 0;
        for (auto& p : fa) total += p.degree();
        CHECK(total == n);
    }
}

TEST_CASE("polynomial rendering") {
    QPoly p{{R(-1), R(0), R(1)}};
    CHECK(p.str() == "x^2-1");
    QPoly q{{R(1, 2), R(-2)}};
    CHECK(q.str() == "-2x+1/2");
    QPoly zero{};
    CHECK(zero.str() == "0");
}
