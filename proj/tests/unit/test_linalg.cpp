#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zwidth/error.hpp"
#include "zwidth/lti/discretize.hpp"
#include "zwidth/lti/linalg.hpp"

using namespace zwidth;

TEST_CASE("eigenvalues of simple matrices") {
  CHECK(oracle::multiset_distance(eigenvalues(Matrix::Identity(3, 3)), {1.0, 1.0, 1.0}) < 1e-14);

  Matrix m(2, 2);
  m << 0, 1, -2, -3;
  CHECK(oracle::multiset_distance(eigenvalues(m), {-1.0, -2.0}) < 1e-12);

  // Companion of z^2 - z + 0.25
  Matrix c(2, 2);
  c << 1.0, -0.25, 1.0, 0.0;
  CHECK(oracle::multiset_distance(eigenvalues(c), {0.5, 0.5}) < 1e-7);

  CHECK_THROWS_AS(eigenvalues(Matrix::Zero(2, 3)), DimensionError);
  CHECK(eigenvalues(Matrix(0, 0)).empty());
}

TEST_CASE("charpoly matches Faddeev-LeVerrier on random matrices") {
  std::mt19937 rng(11);
  for (int n = 1; n <= 6; ++n) {
    const Matrix m = oracle::random_matrix(rng, n, n);
    const auto ref = oracle::faddeev_leverrier(m);
    const Polynomial p = charpoly(m);
    REQUIRE(p.degree() == n);
    for (int k = 0; k <= n; ++k) CHECK(p.coeff(n - k) == doctest::Approx(ref[static_cast<std::size_t>(k)]).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("balancing is a similarity transform") {
  Matrix m(3, 3);
  m << 1, 1e6, 0, 1e-6, 2, 1e4, 0, 1e-4, 3;
  Matrix b = m;
  const Vector d = balance_in_place(b);
  const Matrix back = d.asDiagonal() * b * d.cwiseInverse().asDiagonal();
  CHECK((back - m).norm() <= 1e-12 * m.norm());
  CHECK(b.norm() < m.norm());
}

TEST_CASE("expm and ZOH closed forms") {
  SUBCASE("integrator") {
    const StateSpace integ(Matrix::Zero(1, 1), Matrix::Ones(1, 1), Matrix::Ones(1, 1), Matrix::Zero(1, 1),
                           TimeDomain::continuous());
    const auto d = c2d_zoh(integ, 0.001);
    CHECK(d.A()(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(d.B()(0, 0) == doctest::Approx(0.001).epsilon(1e-13));
    CHECK(d.domain().sample_time() == 0.001);
  }
  SUBCASE("first-order lag") {
    const StateSpace lag(-Matrix::Ones(1, 1), Matrix::Ones(1, 1), Matrix::Ones(1, 1), Matrix::Zero(1, 1),
                         TimeDomain::continuous());
    const auto d = c2d_zoh(lag, 0.1);
    CHECK(d.A()(0, 0) == doctest::Approx(std::exp(-0.1)).epsilon(1e-14));
    CHECK(d.B()(0, 0) == doctest::Approx(1.0 - std::exp(-0.1)).epsilon(1e-13));
  }
  SUBCASE("rotation generator") {
    Matrix a(2, 2);
    a << 0, -1, 1, 0;
    const Matrix e = expm(a * 0.7);
    CHECK(e(0, 0) == doctest::Approx(std::cos(0.7)));
    CHECK(e(1, 0) == doctest::Approx(std::sin(0.7)));
  }
  CHECK_THROWS_AS(c2d_zoh(StateSpace(Matrix::Zero(1, 1), Matrix::Ones(1, 1), Matrix::Ones(1, 1),
                                     Matrix::Zero(1, 1), TimeDomain::discrete(1.0)),
                          0.1),
                  DomainMismatchError);
}

TEST_CASE("spectral mapping on random 4x4 matrices") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> ts(0.01, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = oracle::random_matrix(rng, 4, 4);
    const double T = ts(rng);
    const StateSpace sys(a, Matrix::Ones(4, 1), Matrix::Ones(1, 4), Matrix::Zero(1, 1), TimeDomain::continuous());
    const auto ad = c2d_zoh(sys, T);
    std::vector<std::complex<double>> mapped;
    for (const auto& ev : eigenvalues(a)) mapped.push_back(std::exp(T * ev));
    const auto got = eigenvalues(ad.A());
    double scale = 1.0;
    for (const auto& v : mapped) scale = std::max(scale, std::abs(v));
    CHECK(oracle::multiset_distance(got, mapped) <= 1e-8 * scale);
  }
}
