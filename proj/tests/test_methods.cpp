#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "haar_newton/bench.hpp"
#include "haar_newton/methods.hpp"
#include "test_support.hpp"

using namespace haar_newton;
using testing::quadratic_minus_four;
using testing::rel_close;
using testing::same_bits;

namespace {

const std::vector<MethodId>& all_methods() {
  static const std::vector<MethodId> methods{
      MethodId::newton(),         MethodId::wf(),
      MethodId::fs(FsVariant::AsPrinted), MethodId::fs(FsVariant::StandardMidpoint),
      MethodId::oz(),             MethodId::klw(),
      MethodId::haar_newton(1),   MethodId::haar_newton(2),
      MethodId::haar_newton(3),   MethodId::haar_newton(8)};
  return methods;
}

// f(x) = (x - r)(1 + c x^2); f(r) is exactly zero in floating point.
Problem cubic_with_root(double r, double c) {
  return Problem(
      "cubic", [r, c](double x) { return (x - r) * (1.0 + c * x * x); },
      [r, c](double x) { return (1.0 + c * x * x) + (x - r) * 2.0 * c * x; });
}

Problem scaled(const Problem& p, double factor) {
  return Problem(
      p.name(), [p, factor](double x) { return factor * p.f(x); },
      [p, factor](double x) { return factor * p.df(x); });
}

}  // namespace

TEST_SUITE("methods") {
  TEST_CASE("newton step") {
    EvalCounters c;
    CHECK(*newton_step(quadratic_minus_four(), 3.0, c) == doctest::Approx(13.0 / 6.0).epsilon(1e-15));
    CHECK(*newton_step(testing::identity_problem(), 7.0, c) == 0.0);
    CHECK(*newton_step(quadratic_minus_four(), 2.0, c) == 2.0);
    CHECK(c.n_f == 3);
    CHECK(c.n_df == 3);
  }

  TEST_CASE("wf step") {
    EvalCounters c;
    CHECK(rel_close(*wf_step(quadratic_minus_four(), 3.0, c), 63.0 / 31.0, 1e-15));
    CHECK(c.n_f == 1);
    CHECK(c.n_df == 2);
    CHECK(*wf_step(quadratic_minus_four(), -2.0, c) == -2.0);
  }

  TEST_CASE("fs step, both inner points") {
    EvalCounters c;
    CHECK(rel_close(*fs_step(quadratic_minus_four(), 3.0, c, FsVariant::AsPrinted), 1.125, 1e-15));
    CHECK(c.nfe() == 3);
    CHECK(rel_close(*fs_step(quadratic_minus_four(), 3.0, c, FsVariant::StandardMidpoint),
                    63.0 / 31.0, 1e-15));
    CHECK(c.n_f == 2);
    CHECK(c.n_df == 4);
    for (FsVariant v : {FsVariant::AsPrinted, FsVariant::StandardMidpoint}) {
      CHECK(*fs_step(quadratic_minus_four(), 2.0, c, v) == 2.0);
    }
  }

  TEST_CASE("oz step") {
    EvalCounters c;
    CHECK(rel_close(*oz_step(quadratic_minus_four(), 3.0, c), 313.0 / 156.0, 1e-15));
    CHECK(c.n_f == 1);
    CHECK(c.n_df == 2);
    CHECK(*oz_step(quadratic_minus_four(), 2.0, c) == 2.0);
  }

  TEST_CASE("klw step") {
    EvalCounters c;
    CHECK(rel_close(*klw_step(quadratic_minus_four(), 3.0, c), 443.0 / 216.0, 1e-15));
    CHECK(c.n_f == 2);
    CHECK(c.n_df == 1);
    CHECK(*klw_step(quadratic_minus_four(), 2.0, c) == 2.0);
  }

  TEST_CASE("haar newton step") {
    EvalCounters c;
    CHECK(rel_close(*haar_newton_step(quadratic_minus_four(), 3.0, c, 2), 63.0 / 31.0, 1e-15));
    CHECK(c.n_f == 1);
    CHECK(c.n_df == 3);
    for (std::size_t p : {1, 2, 5, 16}) {
      EvalCounters k;
      CHECK(*haar_newton_step(quadratic_minus_four(), 2.0, k, p) == 2.0);
      CHECK(k.n_f == 1);
      CHECK(k.n_df == 1 + p);
    }
    CHECK_THROWS_AS(haar_newton_step(quadratic_minus_four(), 3.0, c, 0), std::invalid_argument);
  }

  TEST_CASE("every method stops at a zero derivative") {
    for (const MethodId& m : all_methods()) {
      EvalCounters c;
      CAPTURE(method_label(m.tag));
      CHECK_FALSE(step(m, quadratic_minus_four(), 0.0, c).has_value());
    }
  }

  TEST_CASE("breakdown in the second derivative evaluation") {
    // f' is +1 at x = 1 and -1 everywhere else, so f'(z) + f'(x) = 0 for WF
    // and the midpoint derivative is finite but the sum of nodes cancels.
    Problem p("kink", [](double x) { return x - 0.5; },
              [](double x) { return x == 1.0 ? 1.0 : -1.0; });
    EvalCounters c;
    CHECK_FALSE(wf_step(p, 1.0, c).has_value());
    Problem inf_slope("inf", [](double x) { return x - 0.5; },
                      [](double x) { return x == 1.0 ? 1.0 : INFINITY; });
    CHECK_FALSE(oz_step(inf_slope, 1.0, c).has_value());
    CHECK_FALSE(fs_step(inf_slope, 1.0, c, FsVariant::StandardMidpoint).has_value());
    CHECK_FALSE(haar_newton_step(inf_slope, 1.0, c, 2).has_value());
  }

  TEST_CASE("fixed point at an exact root for every method") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> root(-5.0, 5.0), curv(0.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
      const double r = root(rng);
      const Problem p = cubic_with_root(r, curv(rng));
      for (const MethodId& m : all_methods()) {
        EvalCounters c;
        CHECK(*step(m, p, r, c) == r);
      }
    }
  }

  TEST_CASE("labels round-trip") {
    for (MethodTag tag : {MethodTag::Newton, MethodTag::WF, MethodTag::FS, MethodTag::OZ,
                          MethodTag::KLW, MethodTag::HaarNewton}) {
      CHECK(parse_method_label(method_label(tag)) == tag);
    }
    CHECK(method_label(MethodTag::HaarNewton) == "new");
    CHECK_FALSE(parse_method_label("halley").has_value());
    CHECK(parse_fs_variant("as-printed") == FsVariant::AsPrinted);
    CHECK(parse_fs_variant("standard-midpoint") == FsVariant::StandardMidpoint);
    CHECK_FALSE(parse_fs_variant("midpoint").has_value());
  }

  TEST_CASE("step costs") {
    CHECK(step_cost(MethodId::newton()) == 2);
    CHECK(step_cost(MethodId::wf()) == 3);
    CHECK(step_cost(MethodId::fs()) == 3);
    CHECK(step_cost(MethodId::oz()) == 3);
    CHECK(step_cost(MethodId::klw()) == 3);
    CHECK(step_cost(MethodId::haar_newton(2)) == 4);
    CHECK(step_cost(MethodId::haar_newton(7)) == 9);
  }

  TEST_CASE("affine derivative: haar, wf and midpoint fs coincide") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    int compared = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const double a = u(rng), b = u(rng), c0 = u(rng), x = u(rng);
      Problem p("quad", [=](double t) { return (a * t + b) * t + c0; },
                [=](double t) { return 2.0 * a * t + b; });
      EvalCounters c;
      const auto wf = wf_step(p, x, c);
      const auto fs = fs_step(p, x, c, FsVariant::StandardMidpoint);
      if (!wf || !fs) continue;
      CHECK(std::abs(*wf - *fs) <=
            1e-13 * std::max({std::abs(x), std::abs(x - *wf), std::abs(*wf)}));
      for (std::size_t pts : {1, 2, 3, 4, 8}) {
        const auto h = haar_newton_step(p, x, c, pts);
        REQUIRE(h.has_value());
        // Roundoff of x - step is relative to the larger of the two terms.
        const double scale = std::max({std::abs(x), std::abs(x - *wf), std::abs(*wf)});
        CHECK(std::abs(*h - *wf) <= 1e-13 * scale);
      }
      ++compared;
    }
    CHECK(compared > 150);
  }

  TEST_CASE("one-node haar step is the midpoint fs step bit for bit") {
    const auto suite = builtin_suite();
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int trial = 0; trial < 100; ++trial) {
      const Problem& p = suite[trial % suite.size()].problem;
      const double x = u(rng);
      EvalCounters c1, c2;
      CHECK(same_bits(haar_newton_step(p, x, c1, 1),
                      fs_step(p, x, c2, FsVariant::StandardMidpoint)));
    }
  }

  // The residual test |f| <= tol is not scale invariant, so the runs may stop
  // at different lengths; the iterates they share must agree exactly.
  TEST_CASE("scaling f by a power of two leaves every iterate unchanged") {
    for (const SuiteEntry& e : builtin_suite()) {
      for (const MethodId& m : all_methods()) {
        const Outcome base = iterate(m, e.problem, e.x0);
        for (int j : {-3, 1, 5}) {
          const Outcome s = iterate(m, scaled(e.problem, std::ldexp(1.0, j)), e.x0);
          CAPTURE(e.problem.name());
          CAPTURE(method_label(m.tag));
          const auto& a = base.trace.iterates;
          const auto& b = s.trace.iterates;
          const std::size_t n = std::min(a.size(), b.size());
          CHECK(n >= std::max(a.size(), b.size()) - 1);
          for (std::size_t i = 0; i < n; ++i) CHECK(same_bits(a[i], b[i]));
        }
      }
    }
  }
}

TEST_SUITE("iterate") {
  TEST_CASE("haar newton on f1 from 2") {
    const SuiteEntry e = *find_suite_entry("f1");
    const Outcome out = iterate(MethodId::haar_newton(2), e.problem, e.x0);
    CHECK(out.status == Status::Converged);
    CHECK(std::abs(out.root - -1.16730397826142) <= 1e-12);
    CHECK(out.iterations == 9);
    CHECK(out.nfe == 36);
  }

  TEST_CASE("newton on an affine function converges in one step") {
    const Outcome out = iterate(MethodId::newton(), testing::identity_problem(), 1.0);
    CHECK(out.status == Status::Converged);
    CHECK(out.root == 0.0);
    CHECK(out.iterations == 1);
    CHECK(out.nfe == 2);
    // Residual of the last iterate is recorded but not charged.
    CHECK(out.trace.residuals.back() == 0.0);
  }

  TEST_CASE("wf diverges on arctan from 3") {
    const SuiteEntry e = *find_suite_entry("f3");
    const Outcome out = iterate(MethodId::wf(), e.problem, e.x0);
    CHECK((out.status == Status::Diverged || out.status == Status::MaxIterReached));
  }

  // Published counts are matched within two iterations; the stopping rule
  // behind them is not known.
  TEST_CASE("reference runs") {
    struct Case {
      const char* fn;
      MethodId method;
      double root;
      std::size_t it;
    };
    const Case cases[] = {
        {"f2", MethodId::wf(), 0.739085133215161, 4},
        {"f4", MethodId::oz(), 0.101025848315685, 4},
        {"f2", MethodId::haar_newton(2), 0.739085133215161, 4},
    };
    for (const Case& k : cases) {
      const SuiteEntry e = *find_suite_entry(k.fn);
      const Outcome out = iterate(k.method, e.problem, e.x0);
      CAPTURE(k.fn);
      CHECK(out.status == Status::Converged);
      CHECK(std::abs(out.root - k.root) <= 1e-12);
      CHECK(out.iterations + 2 >= k.it);
      CHECK(out.iterations <= k.it + 2);
      CHECK(out.nfe == step_cost(k.method) * out.iterations);
    }

    const SuiteEntry f3 = *find_suite_entry("f3");
    const Outcome klw = iterate(MethodId::klw(), f3.problem, f3.x0);
    CHECK(klw.status == Status::Converged);
    CHECK(std::abs(klw.root) <= 2e-14);
    CHECK(klw.iterations + 2 >= 4);
    CHECK(klw.iterations <= 6);
  }

  TEST_CASE("iteration cap") {
    const SuiteEntry e = *find_suite_entry("f1");
    StopCriteria crit;
    crit.max_iter = 2;
    const Outcome out = iterate(MethodId::haar_newton(2), e.problem, e.x0, crit);
    CHECK(out.status == Status::MaxIterReached);
    CHECK(out.iterations == 2);
    CHECK(out.nfe == 8);
    CHECK(out.root == out.trace.iterates.back());
  }

  TEST_CASE("escape radius") {
    const SuiteEntry e = *find_suite_entry("f3");
    StopCriteria crit;
    crit.escape_radius = 10.0;
    const Outcome out = iterate(MethodId::newton(), e.problem, e.x0, crit);
    CHECK(out.status == Status::Diverged);
    CHECK(std::abs(out.root) > 10.0);
  }

  TEST_CASE("non-finite iterate is divergence") {
    Problem p("flat", [](double x) { return std::exp(x) + 1.0; },
              [](double x) { return std::exp(x); });
    // Newton walks left by one each step and eventually f' underflows to 0.
    const Outcome out = iterate(MethodId::newton(), p, 0.0);
    CHECK(out.status != Status::Converged);
    Problem blowup("blowup", [](double) { return 1e300; }, [](double) { return 1e-300; });
    const Outcome b = iterate(MethodId::newton(), blowup, 0.0);
    CHECK(b.status == Status::Diverged);
    CHECK(std::isinf(b.root));
  }

  TEST_CASE("derivative breakdown is reported, not thrown") {
    const Outcome out = iterate(MethodId::newton(), quadratic_minus_four(), 0.0);
    CHECK(out.status == Status::DerivativeBreakdown);
    CHECK(out.iterations == 0);
    CHECK(out.root == 0.0);
    CHECK(out.nfe == 2);
  }

  TEST_CASE("bad input is rejected") {
    CHECK_THROWS_AS(iterate(MethodId::newton(), quadratic_minus_four(), NAN), std::invalid_argument);
    CHECK_THROWS_AS(iterate(MethodId::haar_newton(0), quadratic_minus_four(), 3.0),
                    std::invalid_argument);
    StopCriteria crit;
    crit.max_iter = 0;
    CHECK_THROWS_AS(iterate(MethodId::newton(), quadratic_minus_four(), 3.0, crit),
                    std::invalid_argument);
  }

  TEST_CASE("trace and evaluation accounting over the whole suite") {
    for (const SuiteEntry& e : builtin_suite()) {
      for (const MethodId& m : all_methods()) {
        const Outcome out = iterate(m, e.problem, e.x0);
        CAPTURE(e.problem.name());
        CAPTURE(method_label(m.tag));
        const Trace& t = out.trace;
        REQUIRE(t.iterates.size() == t.residuals.size());
        REQUIRE(!t.iterates.empty());
        CHECK(out.iterations == t.iterates.size() - 1);
        CHECK(out.nfe == t.counters.nfe());
        CHECK(t.iterates.front() == e.x0);
        for (std::size_t i = 0; i < t.iterates.size(); ++i) {
          const double again = e.problem.f(t.iterates[i]);
          CHECK((again == t.residuals[i] || (std::isnan(again) && std::isnan(t.residuals[i]))));
        }
        if (out.status != Status::DerivativeBreakdown) {
          CHECK(out.nfe == step_cost(m) * out.iterations);
        }
        if (out.status == Status::Converged) {
          const double last_step = t.iterates.size() > 1
                                       ? std::abs(t.iterates.back() - t.iterates[t.iterates.size() - 2])
                                       : 0.0;
          CHECK((std::abs(t.residuals.back()) <= 1e-15 || last_step <= 1e-15));
        }
      }
    }
  }
}
