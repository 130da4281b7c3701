#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hstrip/errors.hpp"
#include "hstrip/param_solver.hpp"
#include "hstrip/verifier.hpp"

using namespace hstrip;

namespace {

constexpr double kPi = std::numbers::pi;

StripMapParams identity() {
  auto p = derive_params(1, 0, 1);
  p.beta = 0.0;
  return p;
}

const StripMapParams& solved_1_1() {
  static const StripMapParams p = solve_params(1.0, 1.0);
  return p;
}

}  // namespace

TEST_CASE("linspace") {
  const auto g = linspace(0.05, kPi - 0.05, 100);
  CHECK(g.size() == 100);
  CHECK(g.front() == 0.05);
  CHECK(g.back() == kPi - 0.05);
  CHECK_THROWS_AS(linspace(0, 1, 1), DomainError);
}

TEST_CASE("ode_residuals") {
  const auto grid = linspace(0.05, kPi - 0.05, 100);
  const auto id = ode_residuals(identity(), grid);
  CHECK(id.max_residual <= 1e-8);
  CHECK(id.passed);

  const auto r = ode_residuals(solved_1_1(), grid);
  CHECK(r.passed);
  CHECK(r.max_residual <= 1e-5);
  CHECK(r.tolerance == 1e-5);

  const std::vector<double> bad{0.0, 0.5};
  CHECK_THROWS_AS(ode_residuals(identity(), bad), DomainError);
  const std::vector<double> bad_top{1.0, kPi - 0.01};
  CHECK_THROWS_AS(ode_residuals(identity(), bad_top), DomainError);

  SUBCASE("an unsolved b is caught") {
    // Parameters off the quarter-period root still solve the ODE (the ansatz
    // is harmonic for any b) so the check must pass; boundary data is what fails.
    const auto off = derive_params(1, 1, 1);
    CHECK(ode_residuals(off, grid).passed);
    CHECK(std::abs(eval_g(off, kPi / 2) - kPi / 2) > 1e-3);
  }
  SUBCASE("a wrong map fails") {
    auto broken = solved_1_1();
    broken.a *= 1.1;  // h' no longer matches g
    CHECK_FALSE(ode_residuals(broken, grid).passed);
  }
}

TEST_CASE("wang_ode_residual") {
  const auto grid = linspace(0.05, kPi - 0.05, 100);
  const auto id = wang_ode_residual(make_wang_params(1, 1), grid);
  REQUIRE(id.size() == 2);
  CHECK(id[0].max_residual <= 1e-8);
  CHECK(id[1].max_residual <= 1e-14);

  const auto w = make_wang_params(1.5, solve_wang_b(1.5));
  for (const auto& r : wang_ode_residual(w, grid)) CHECK(r.passed);
  // (g')^2 - alpha^2 = b^2 - alpha^2 at pi/2.
  const double gp = wang_g_prime(w, kPi / 2);
  CHECK(std::abs(gp * gp - w.alpha * w.alpha - (w.b * w.b - w.alpha * w.alpha)) <= 1e-14);
}

TEST_CASE("pde_residuals") {
  const auto xs = linspace(-1, 1, 20);
  const auto ys = linspace(0.05, kPi - 0.05, 20);
  CHECK(pde_residuals(identity(), xs, ys).max_residual <= 1e-8);
  const auto r = pde_residuals(solved_1_1(), xs, ys);
  CHECK(r.passed);
  CHECK(r.max_residual <= 1e-4);

  SUBCASE("x-independence") {
    for (double y : {0.3, 1.2, 2.7}) {
      const auto base = pde_residual_at(solved_1_1(), 0.0, y, 1e-3);
      for (double x : {-5.0, -0.7, 0.3, 2.0, 10.0}) {
        const auto at = pde_residual_at(solved_1_1(), x, y, 1e-3);
        CHECK(std::abs(at.first - base.first) <= 1e-12);
        CHECK(std::abs(at.second - base.second) <= 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(pde_residuals(identity(), xs, ys, 1e-2), DomainError);
  CHECK_THROWS_AS(pde_residuals(identity(), xs, ys, 1e-7), DomainError);
}

TEST_CASE("quadrature_z_oracle") {
  CHECK(quadrature_z_oracle(solved_1_1(), kPi / 2) == 0.0);
  CHECK(std::abs(quadrature_z_oracle(identity(), 0.3) - 1 / std::tan(0.3)) <= 1e-9);
  const double z = quadrature_z_oracle(solved_1_1(), 0.7);
  CHECK(std::abs(z - eval_z(solved_1_1(), 0.7)) <= 1e-8 * std::max(1.0, std::abs(z)));
  CHECK_THROWS_AS(quadrature_z_oracle(identity(), 0.0), DomainError);
  CHECK_THROWS_AS(quadrature_z_oracle(identity(), 2.0), DomainError);
}

TEST_CASE("ode_shoot_oracle") {
  const std::vector<double> grid{0.05, 0.9, kPi / 2, 2.4, kPi - 0.05};
  const auto id = ode_shoot_oracle(identity(), grid);
  REQUIRE(id.size() == grid.size());
  for (const auto& s : id) {
    CHECK(std::abs(s.g - s.y) <= 1e-10);
    CHECK(std::abs(s.h) <= 1e-12);
  }
  const auto& p = solved_1_1();
  const auto shot = ode_shoot_oracle(p, grid);
  CHECK(shot[2].g == kPi / 2);
  CHECK(shot[2].h == *p.beta / 2);
  CHECK(shot[2].g_prime == p.b);
  CHECK(shot[2].h_prime == p.a * p.a);
  for (const auto& s : shot) {
    CHECK(std::abs(s.g - eval_g(p, s.y)) <= 1e-7);
    CHECK(std::abs(s.h - eval_h(p, s.y)) <= 1e-7);
  }
  CHECK_THROWS_AS(ode_shoot_oracle(derive_params(1, 1, 1), grid), DomainError);
  const std::vector<double> bad{0.01};
  CHECK_THROWS_AS(ode_shoot_oracle(p, bad), DomainError);
}

TEST_CASE("first-order, z-equation, derivative and symmetry checks") {
  const auto& p = solved_1_1();
  const auto grid = linspace(0.05, kPi - 0.05, 100);
  for (const auto& r : first_order_residuals(p, grid)) CHECK(r.passed);
  CHECK(z_equation_residual(p, grid).passed);
  CHECK(derivative_consistency(p, grid).passed);
  CHECK(symmetry_check(p, linspace(0, kPi, 200)).passed);
  CHECK(quadrature_z_check(p, linspace(0.05, kPi / 2, 10)).passed);
  CHECK(shooting_check(p, linspace(0.05, kPi - 0.05, 41)).passed);
  CHECK_THROWS_AS(symmetry_check(derive_params(1, 1, 1), grid), DomainError);
}

TEST_CASE("report bookkeeping") {
  const auto grid = linspace(0.05, kPi - 0.05, 10);
  const auto r = ode_residuals(identity(), grid, 0.0);
  CHECK(r.tolerance == 0.0);
  CHECK(r.passed == (r.max_residual <= 0.0));
  CHECK_FALSE(r.check_name.empty());
  CHECK_FALSE(r.grid_spec.empty());
}

TEST_CASE("verify_strip_map and verify_wang_map") {
  for (const auto& r : verify_strip_map(solved_1_1())) {
    INFO(r.check_name, " ", r.max_residual);
    CHECK(r.passed);
  }
  for (double alpha : {1.0, 1.5, 2.0}) {
    for (const auto& r : verify_wang_map(make_wang_params(alpha, solve_wang_b(alpha)))) {
      INFO(alpha, " ", r.check_name, " ", r.max_residual);
      CHECK(r.passed);
    }
  }
  VerifyTolerances strict;
  strict.pde = 1e-30;
  bool any_failed = false;
  for (const auto& r : verify_strip_map(solved_1_1(), strict)) any_failed |= !r.passed;
  CHECK(any_failed);
}
