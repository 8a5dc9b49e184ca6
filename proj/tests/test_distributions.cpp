#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "doctest.h"
#include "egodiv/distributions.hpp"

using namespace egodiv;

TEST_CASE("incomplete beta against boost") {
  for (double a : {0.5, 1.0, 2.5, 10.0, 150.0, 5000.0}) {
    for (double b : {0.5, 1.0, 3.0, 40.0, 2500.0}) {
      for (double x : {0.0, 1e-6, 0.01, 0.2, 0.5, 0.77, 0.99, 1.0}) {
        const double expect = boost::math::ibeta(a, b, x);
        REQUIRE(regularized_incomplete_beta(a, b, x) == doctest::Approx(expect).epsilon(1e-9).scale(1e-300));
      }
    }
  }
}

TEST_CASE("t distribution against boost") {
  for (double df : {1.0, 2.0, 5.0, 30.0, 1000.0, 234831.0}) {
    const boost::math::students_t dist(df);
    for (double t : {-8.0, -2.0, -0.3, 0.0, 0.7, 1.96, 4.0, 22.1}) {
      REQUIRE(student_t_cdf(t, df) == doctest::Approx(boost::math::cdf(dist, t)).epsilon(1e-9));
      const double two = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
      REQUIRE(student_t_two_tailed(t, df) == doctest::Approx(two).epsilon(1e-8).scale(1e-300));
    }
    for (double p : {0.025, 0.5, 0.9, 0.975}) {
      REQUIRE(student_t_quantile(p, df) == doctest::Approx(boost::math::quantile(dist, p)).epsilon(1e-8));
    }
  }
}

TEST_CASE("F upper tail against boost") {
  for (double d1 : {1.0, 2.0, 7.0}) {
    for (double d2 : {3.0, 50.0, 234831.0}) {
      const boost::math::fisher_f dist(d1, d2);
      for (double f : {0.0, 0.5, 1.0, 3.0, 12.0}) {
        const double expect = boost::math::cdf(boost::math::complement(dist, f));
        REQUIRE(f_upper_tail(f, d1, d2) == doctest::Approx(expect).epsilon(1e-9).scale(1e-300));
      }
    }
  }
}
