#include <doctest.h>

#include "fjacobi/jacobi_core.hpp"

using namespace fjacobi;
using R = Rational;

namespace {

JacobiMatrix<R> antisym(const std::vector<R>& lambda_pos, const R& w) {
    const long d = static_cast<long>(lambda_pos.size());
    std::vector<R> diag(2 * d + 1, R(0));
    for (long k = 1; k <= d; ++k) {
        diag[d + k] = lambda_pos[k - 1];
        diag[d - k] = -lambda_pos[k - 1];
    }
    return JacobiMatrix<R>::constant_offdiag(diag, w, true);
}

}  // namespace

TEST_SUITE("jacobi-core") {
    TEST_CASE("determinant formula, d = 1 by hand") {
        const R w(1, 3);
        const std::vector<R> y{R(2), R(3), R(5, 2)};  // y_{-1}, y_0, y_1
        // 3x3 cofactor expansion: y_-1 y_0 y_1 - w^2 y_-1 - w^2 y_1.
        const R hand = y[0] * y[1] * y[2] - w * w * y[0] - w * w * y[2];
        CHECK(det_constant_offdiag(std::span<const R>(y), w) == hand);
    }

    TEST_CASE("determinant formula, w = 0 and oracle agreement") {
        const std::vector<R> y{R(2), R(-1, 3), R(7), R(1, 2), R(-4)};
        CHECK(det_constant_offdiag(std::span<const R>(y), R(0)) ==
              y[0] * y[1] * y[2] * y[3] * y[4]);
        const R w(3, 5);
        const auto j = JacobiMatrix<R>::constant_offdiag(y, w, true);
        CHECK(det_constant_offdiag(std::span<const R>(y), w) == det_oracle(j, R(0)));
    }

    TEST_CASE("determinant formula hypothesis") {
        const std::vector<R> y{R(0), R(3), R(1)};  // y_{-1} = 0 violates prod != 0
        CHECK_THROWS_AS(det_constant_offdiag(std::span<const R>(y), R(1)), std::invalid_argument);
    }

    TEST_CASE("centered matrices must have odd dimension") {
        CHECK_THROWS_AS(JacobiMatrix<R>::constant_offdiag({R(1), R(2)}, R(1), true), std::invalid_argument);
        CHECK_NOTHROW(JacobiMatrix<R>::constant_offdiag({R(1), R(2)}, R(1), false));
    }

    TEST_CASE("determinant oracle basics") {
        const auto diag1 = JacobiMatrix<R>::constant_offdiag({R(4), R(-2), R(9)}, R(0));
        CHECK(det_oracle(diag1, R(0)) == R(-72));
        const auto one = JacobiMatrix<R>::constant_offdiag({R(5, 7)}, R(0));
        CHECK(det_oracle(one, R(1, 7)) == R(4, 7));
        // K(w) at d = 1: det(K - z) = -z^3 + z + 2 w^2 z.
        const R w(2, 5), z(3, 4);
        const auto k1 = antisym({R(1)}, w);
        CHECK(det_oracle(k1, z) == -z * z * z + z + R(2) * w * w * z);
    }

    TEST_CASE("normalization is the identity on unit off-diagonals") {
        const JacobiMatrix<R> j({R(4), R(-1, 3), R(2)}, {R(1), R(1)}, false);
        const auto norm = normalize(j);
        CHECK(norm.gammas == std::vector<R>{R(1), R(1), R(1)});
        CHECK(norm.jtilde.diag == j.diag);
        CHECK(norm.jtilde.offdiag == j.offdiag);
    }

    TEST_CASE("normalization") {
        const JacobiMatrix<R> j({R(5), R(-3), R(7, 2)}, {R(2), R(3)}, false);
        const auto norm = normalize(j);
        CHECK(norm.gammas == std::vector<R>{R(1), R(2), R(3, 2)});
        CHECK(norm.jtilde.diag == std::vector<R>{R(5), R(-3, 4), R(14, 9)});
        CHECK(norm.jtilde.offdiag == std::vector<R>{R(1), R(1)});
        // det(J) = prod gamma^2 det(Jtilde)
        R scale(1);
        for (const auto& g : norm.gammas) scale *= g * g;
        CHECK(det_oracle(j, R(0)) == scale * det_oracle(norm.jtilde, R(0)));
        CHECK_THROWS_AS(normalize(JacobiMatrix<R>({R(1), R(2)}, {R(0)}, false)), std::invalid_argument);
    }

    TEST_CASE("charpoly for antisymmetric diagonal, d = 1") {
        const R w(2, 3);
        const std::vector<R> lambda{R(1)};
        const auto red = charpoly_antisym(std::span<const R>(lambda), w);
        CHECK(red == Poly<R>({R(1) + R(2) * w * w, R(0), R(-1)}, Parity::even));
    }

    TEST_CASE("charpoly, w = 0 collapses to the diagonal product") {
        const std::vector<R> lambda{R(2), R(-5, 3), R(1, 7)};
        const auto red = charpoly_antisym(std::span<const R>(lambda), R(0));
        Poly<R> expect = Poly<R>::constant(R(1));
        for (const auto& l : lambda) expect = expect * Poly<R>({l * l, R(0), R(-1)});
        CHECK(red == expect);
    }

    TEST_CASE("charpoly agrees with the oracle polynomial") {
        const R w(4, 7);
        const std::vector<R> lambda{R(1, 2), R(-3), R(9, 4)};  // d = 3 -> odd d
        const auto red = charpoly_antisym(std::span<const R>(lambda), w);
        const auto det_poly = charpoly_oracle(antisym(lambda, w));
        // det(K - z) = (-1)^{d+1} z chi_red(z); here d = 3.
        CHECK(det_poly.coeff(0) == R(0));
        CHECK(det_poly.divide_by_z() == red);
        CHECK(red.detect_parity() == Parity::even);
    }

    TEST_CASE("kernel vector, d = 1 by hand") {
        const R w(5, 9);
        const std::vector<R> lambda{R(1)};
        const auto theta = kernel_vector_antisym(std::span<const R>(lambda), w);
        CHECK(theta == std::vector<R>{w, R(1), -w});
        const auto k = antisym({R(1)}, w);
        for (const auto& r : k.apply(theta)) CHECK(is_zero(r));
    }

    TEST_CASE("kernel vector: top entry, zero lambdas, w = 0") {
        const R w(1, 2);
        const std::vector<R> lambda{R(0), R(3), R(0), R(-2)};  // zeros exercise the cleared form
        const auto theta = kernel_vector_antisym(std::span<const R>(lambda), w);
        CHECK(theta[8] == pow_int(w, 4));  // theta_d = (-1)^d w^d, d = 4
        const auto k = antisym(lambda, w);
        for (const auto& r : k.apply(theta)) CHECK(is_zero(r));

        const auto theta0 = kernel_vector_antisym(std::span<const R>(lambda), R(0));
        CHECK(theta0[4] == R(0));  // center = prod lambda = 0 here
        const std::vector<R> lam2{R(2), R(-3)};
        const auto theta1 = kernel_vector_antisym(std::span<const R>(lam2), R(0));
        CHECK(theta1[2] == R(-6));
        for (long i = 0; i < 5; ++i)
            if (i != 2) CHECK(is_zero(theta1[i]));
    }
}
