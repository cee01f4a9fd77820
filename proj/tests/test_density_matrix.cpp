#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>

#include "negmom/density_matrix.hpp"
#include "negmom/random_states.hpp"
#include "test_support.hpp"

using namespace negmom;
using test_support::bell_state;
using test_support::max_mixed_2x2;
using test_support::product_pure_state;
using test_support::werner_state;

TEST_CASE("density matrix validation") {
  CHECK_THROWS_AS(DensityMatrix(2, 2, ComplexMatrix::Identity(3, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(DensityMatrix(2, 2, ComplexMatrix::Identity(4, 4)),
                  std::invalid_argument);  // trace 4

  ComplexMatrix skew = ComplexMatrix::Identity(4, 4) * 0.25;
  skew(0, 1) = std::complex<double>(0.0, 0.3);
  CHECK_THROWS_AS(DensityMatrix(2, 2, skew), std::invalid_argument);

  ComplexMatrix indefinite = ComplexMatrix::Zero(4, 4);
  indefinite(0, 0) = 1.5;
  indefinite(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix(2, 2, indefinite), std::invalid_argument);
}

TEST_CASE("partial transpose: maximally mixed state is a fixed point") {
  const auto rho = max_mixed_2x2();
  const ComplexMatrix pt = partial_transpose(rho);
  CHECK((pt - rho.entries()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("partial transpose: product state transposes the B factor") {
  std::mt19937_64 engine(3);
  std::normal_distribution<double> normal;
  auto random_density = [&](int d) {
    ComplexMatrix g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        g(i, j) = std::complex<double>(normal(engine), normal(engine));
    ComplexMatrix m = g * g.adjoint();
    return ComplexMatrix(m / m.trace());
  };
  const ComplexMatrix rho_a = random_density(2);
  const ComplexMatrix rho_b = random_density(3);
  ComplexMatrix prod(6, 6);
  for (int ia = 0; ia < 2; ++ia)
    for (int ib = 0; ib < 3; ++ib)
      for (int ka = 0; ka < 2; ++ka)
        for (int kb = 0; kb < 3; ++kb)
          prod(ia * 3 + ib, ka * 3 + kb) = rho_a(ia, ka) * rho_b(ib, kb);

  const DensityMatrix rho(2, 3, prod);
  const ComplexMatrix pt = partial_transpose(rho);
  for (int ia = 0; ia < 2; ++ia)
    for (int ib = 0; ib < 3; ++ib)
      for (int ka = 0; ka < 2; ++ka)
        for (int kb = 0; kb < 3; ++kb)
          CHECK(std::abs(pt(ia * 3 + ib, ka * 3 + kb) -
                         rho_a(ia, ka) * rho_b(kb, ib)) < 1e-15);

  // spectrum of a transposed factor is unchanged
  const auto report = exact_spectrum_report(rho);
  CHECK(report.negativity == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("partial transpose: Bell spectrum and involution") {
  const auto rho = bell_state();
  const auto report = exact_spectrum_report(rho);
  REQUIRE(report.eigenvalues.size() == 4);
  CHECK(report.eigenvalues[0] == doctest::Approx(-0.5).epsilon(1e-12));
  for (int i = 1; i < 4; ++i)
    CHECK(report.eigenvalues[static_cast<std::size_t>(i)] ==
          doctest::Approx(0.5).epsilon(1e-12));

  const ComplexMatrix pt = partial_transpose(rho);
  const ComplexMatrix back = partial_transpose(pt, 2, 2, Subsystem::B);
  CHECK((back - rho.entries()).cwiseAbs().maxCoeff() == 0.0);  // pure index permutation

  const ComplexMatrix via_a = partial_transpose(rho, Subsystem::A);
  const ComplexMatrix back_a = partial_transpose(via_a, 2, 2, Subsystem::A);
  CHECK((back_a - rho.entries()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("pt_moments worked values") {
  const auto bell = pt_moments(bell_state(), 5);
  const double expect_bell[] = {1.0, 1.0, 0.25, 0.25, 0.0625};
  for (int k = 1; k <= 5; ++k)
    CHECK(bell.value(k) == doctest::Approx(expect_bell[k - 1]).epsilon(1e-12));

  const auto flat = pt_moments(max_mixed_2x2(), 4);
  for (int k = 1; k <= 4; ++k)
    CHECK(flat.value(k) == doctest::Approx(std::pow(4.0, 1 - k)).epsilon(1e-12));

  const auto werner = pt_moments(werner_state(2.0 / 3.0), 4);
  CHECK(werner.value(1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(werner.value(2) == doctest::Approx(7.0 / 12.0).epsilon(1e-12));
  CHECK(werner.value(3) == doctest::Approx(29.0 / 144.0).epsilon(1e-12));
  CHECK(werner.value(4) == doctest::Approx(163.0 / 1728.0).epsilon(1e-12));

  CHECK_THROWS_AS(pt_moments(bell_state(), 1), std::invalid_argument);
}

TEST_CASE("exact spectrum report worked values") {
  const auto bell = exact_spectrum_report(bell_state());
  CHECK(bell.negativity == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(bell.one_norm == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(bell.log_negativity == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(bell.nonzero_count == 4);

  const auto werner = exact_spectrum_report(werner_state(2.0 / 3.0));
  CHECK(werner.negativity == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(werner.one_norm == doctest::Approx(1.5).epsilon(1e-12));

  const auto pure = exact_spectrum_report(product_pure_state());
  CHECK(pure.negativity == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(pure.nonzero_count == 1);
}

TEST_CASE("spectrum report internal consistency on random states") {
  test_support::for_each_random_state(
      {StateKind::haar_pure, StateKind::induced_mixed, StateKind::separable_mixture},
      8, [](const DensityMatrix& rho, StateKind kind, std::uint64_t) {
        const auto report = exact_spectrum_report(rho);
        CHECK(report.one_norm ==
              doctest::Approx(1.0 + 2.0 * report.negativity).epsilon(1e-10));
        CHECK(report.log_negativity ==
              doctest::Approx(std::log(report.one_norm)).epsilon(1e-10));
        for (double ev : report.eigenvalues) {
          CHECK(ev >= -0.5 - 1e-10);
          CHECK(ev <= 1.0 + 1e-10);
        }
        // PPT iff negativity vanishes
        const double min_ev = report.eigenvalues.front();
        if (report.negativity == 0.0) CHECK(min_ev >= -1e-10);
        if (min_ev >= -1e-12) CHECK(report.negativity <= 1e-10);
        if (kind == StateKind::separable_mixture)
          CHECK(report.negativity <= 1e-10);
      });
}

TEST_CASE("moments agree with eigenvalue power sums") {
  test_support::for_each_random_state(
      {StateKind::haar_pure, StateKind::induced_mixed, StateKind::separable_mixture},
      5, [](const DensityMatrix& rho, StateKind, std::uint64_t) {
        const auto moments = pt_moments(rho, 6);
        const auto report = exact_spectrum_report(rho);
        for (int n = 1; n <= 6; ++n) {
          double power_sum = 0.0;
          for (double ev : report.eigenvalues) power_sum += std::pow(ev, n);
          CHECK(moments.value(n) == doctest::Approx(power_sum).epsilon(1e-10));
        }
      });
}

TEST_CASE("random state generation") {
  const auto bell = gen_random_state(StateKind::werner, 2, 2, 0, 1.0);
  CHECK(exact_spectrum_report(bell).negativity == doctest::Approx(0.5).epsilon(1e-12));
  const auto mixed = gen_random_state(StateKind::werner, 2, 2, 0, 0.0);
  CHECK(exact_spectrum_report(mixed).negativity == doctest::Approx(0.0).epsilon(1e-12));

  // deterministic per seed
  const auto x = gen_random_state(StateKind::haar_pure, 2, 3, 11);
  const auto y = gen_random_state(StateKind::haar_pure, 2, 3, 11);
  CHECK((x.entries() - y.entries()).cwiseAbs().maxCoeff() == 0.0);
  const auto z = gen_random_state(StateKind::haar_pure, 2, 3, 12);
  CHECK((x.entries() - z.entries()).cwiseAbs().maxCoeff() > 0.0);

  CHECK_THROWS_AS(gen_random_state(StateKind::werner, 2, 3, 0, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_random_state(StateKind::werner, 2, 2, 0, 1.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_random_state(StateKind::haar_pure, 1, 2, 0),
                  std::invalid_argument);

  CHECK(parse_state_kind("induced_mixed") == StateKind::induced_mixed);
  CHECK_THROWS_AS(parse_state_kind("bogus"), std::invalid_argument);
}
