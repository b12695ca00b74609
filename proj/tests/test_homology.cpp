#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidhom/homology.hpp"

using namespace braidhom;

namespace {

std::vector<long long> dims(const GradedDims& d) { return d.dims; }

}  // namespace

TEST_CASE("generator degrees and weights") {
  CHECK(GeneratorSpec::x(1).degree() == 1);
  CHECK(GeneratorSpec::x(1).weight() == 2);
  CHECK(GeneratorSpec::x(2).degree() == 3);
  CHECK(GeneratorSpec::x(2).weight() == 4);
  CHECK(GeneratorSpec::lambda(3).degree() == 1);
  CHECK(GeneratorSpec::lambda(3).weight() == 2);
  CHECK(GeneratorSpec::y(3, 1).degree() == 5);
  CHECK(GeneratorSpec::y(3, 1).weight() == 6);
  CHECK(GeneratorSpec::beta_y(3, 1).degree() == 4);
  CHECK(GeneratorSpec::beta_y(3, 1).weight() == 6);
  CHECK_THROWS_AS(GeneratorSpec::lambda(4), std::invalid_argument);
}

TEST_CASE("first Dyer-Lashof operation on generators") {
  CHECK(q_on_generator(2, GeneratorSpec::x(1)) == GeneratorSpec::x(2));
  CHECK(q_on_generator(3, GeneratorSpec::lambda(3)) == GeneratorSpec::y(3, 1));
  CHECK(q_on_generator(3, GeneratorSpec::y(3, 2)) == GeneratorSpec::y(3, 3));
  CHECK_THROWS_AS(q_on_generator(3, GeneratorSpec::beta_y(3, 1)), std::invalid_argument);

  // degree bookkeeping: deg Q(x) = 2 deg x + 1 at p = 2
  for (int i = 1; i <= 5; ++i)
    CHECK(q_on_generator(2, GeneratorSpec::x(i)).degree() == 2 * GeneratorSpec::x(i).degree() + 1);
  // deg Q(y) = p deg y + p - 1 at odd p
  for (int p : {3, 5})
    for (int i = 1; i <= 3; ++i)
      CHECK(q_on_generator(p, GeneratorSpec::y(p, i)).degree() ==
            p * GeneratorSpec::y(p, i).degree() + p - 1);
  CHECK(q_on_generator(3, GeneratorSpec::lambda(3)).degree() == 3 * 1 + 2);
}

TEST_CASE("mod 2 monomial bases") {
  auto b2 = f2_basis(2, 6);
  REQUIRE(b2.size() == 2);
  CHECK(b2[0].str() == "1");
  CHECK(b2[1].str() == "x1");
  CHECK(dims(f2_dims(2, 6)) == std::vector<long long>{1, 1, 0, 0, 0, 0, 0});

  CHECK(dims(f2_dims(1, 3)) == std::vector<long long>{1, 0, 0, 0});

  auto b4 = f2_basis(4, 3);
  REQUIRE(b4.size() == 4);
  CHECK(b4[1].str() == "x1");
  CHECK(b4[2].str() == "x1^2");
  CHECK(b4[3].str() == "x2");
  CHECK(dims(f2_dims(4, 3)) == std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("odd prime monomial bases") {
  CHECK(dims(fp_dims(3, 3, 6)) == std::vector<long long>{1, 1, 0, 0, 0, 0, 0});
  auto b6 = fp_basis(6, 3, 5);
  REQUIRE(b6.size() == 4);
  CHECK(b6[0].str() == "1");
  CHECK(b6[1].str() == "lambda");
  CHECK(b6[2].str() == "by1");
  CHECK(b6[3].str() == "y1");
  CHECK(dims(fp_dims(6, 3, 5)) == std::vector<long long>{1, 1, 0, 0, 1, 1});

  for (int m = 2; m <= 12; ++m) CHECK(fp_dims(m, 5, 1).at(1) == 1);
  CHECK_THROWS_AS(fp_basis(4, 4, 3), std::invalid_argument);
}

TEST_CASE("rational dims") {
  CHECK(dims(rational_dims(5, 4)) == std::vector<long long>{1, 1, 0, 0, 0});
  CHECK(dims(rational_dims(1, 4)) == std::vector<long long>{1, 0, 0, 0, 0});
  CHECK(dims(rational_dims(2, 4)) == std::vector<long long>{1, 1, 0, 0, 0});
}

TEST_CASE("poincare series rendering") {
  CHECK(f2_dims(4, 3).poincare() == "1 + t + t^2 + t^3");
  CHECK(rational_dims(1, 2).poincare() == "1");
  CHECK(fp_dims(6, 3, 5).poincare() == "1 + t + t^4 + t^5");
}

TEST_CASE("stabilization of fixed-degree dimensions") {
  for (int d = 0; d <= 6; ++d) {
    long long stable_value = f2_dims(2 * d + 2, d).at(d);
    for (int m = 2 * d + 2; m <= 2 * d + 10; ++m) CHECK(f2_dims(m, d).at(d) == stable_value);
  }
  for (int p : {3, 5})
    for (int d = 0; d <= 6; ++d) {
      long long stable_value = fp_dims(3 * d + 2, p, d).at(d);
      for (int m = 3 * d + 2; m <= 3 * d + 10; ++m) CHECK(fp_dims(m, p, d).at(d) == stable_value);
    }
}

TEST_CASE("stable ranges") {
  CHECK(stable_range(10) == 6);
  CHECK(stable_range(1) == 0);
  CHECK(stable_range(4) == 2);
  CHECK(nonorientable_stable_range(9) == std::pair<int, int>{2, 3});
  CHECK(nonorientable_stable_range(3) == std::pair<int, int>{0, 1});
  CHECK(nonorientable_stable_range(0) == std::pair<int, int>{0, 0});
}

TEST_CASE("vanishing thresholds") {
  CHECK(stable_kill_threshold(2, GeneratorSpec::x(1)) == 3);
  CHECK(stable_kill_threshold(2, GeneratorSpec::x(2)) == 6);
  CHECK(stable_kill_threshold(3, GeneratorSpec::y(3, 1)) == 9);

  CHECK(operadic_threshold(2, GeneratorSpec::x(1)) == 3);
  CHECK(operadic_threshold(2, GeneratorSpec::x(2)) == 6);
  CHECK(operadic_threshold(3, GeneratorSpec::y(3, 1)) == 6);
  CHECK(operadic_threshold(5, GeneratorSpec::y(5, 1)) == 15);
  CHECK(operadic_threshold(3, GeneratorSpec::lambda(3)) == 2);
  CHECK(operadic_threshold(5, GeneratorSpec::lambda(5)) == 3);

  CHECK(geometric_threshold(2, 1) == 7);
  CHECK(geometric_threshold(2, 2) == 15);
  CHECK(geometric_threshold(3, 1) == 8);
  CHECK(geometric_threshold(5, 1) == 19);
  // recurrence sanity: d_1 = p d_0 + p - 1 at p = 3
  CHECK(geometric_threshold(3, 1) == 3 * 2 + 3 - 1);
}

TEST_CASE("nonvanishing in the source group") {
  CHECK(nonvanishing_in_source(2, GeneratorSpec::x(2), 4));
  CHECK_FALSE(nonvanishing_in_source(2, GeneratorSpec::x(3), 4));
  CHECK_FALSE(nonvanishing_in_source(3, GeneratorSpec::y(3, 1), 5));
  CHECK(nonvanishing_in_source(3, GeneratorSpec::y(3, 1), 6));
}

TEST_CASE("geometric vanishing report, printed-bound view") {
  VanishingReport report = vanishing_report(Embedding::geometric, 2, 16, ReportView::paper);
  CHECK(report.source_strands == 34);
  CHECK(report.undetermined() == std::vector<std::string>{"x3", "x4", "x5"});

  for (int g = 31; g <= 64; ++g) {
    VanishingReport r = vanishing_report(Embedding::geometric, 2, g, ReportView::paper);
    CHECK(r.undetermined().size() == 3);
  }
}

TEST_CASE("combined view tightens the undetermined set at g = 16") {
  VanishingReport report = vanishing_report(Embedding::geometric, 2, 16, ReportView::combined);
  CHECK(report.undetermined() == std::vector<std::string>{"x4", "x5"});
}

TEST_CASE("operadic vanishing reports") {
  VanishingReport r6 = vanishing_report(Embedding::operadic, 3, 6);
  bool found_y1 = false;
  for (const VanishEntry& e : r6.entries)
    if (e.generator.label() == "y1") {
      found_y1 = true;
      CHECK(e.status == "zero");
      CHECK(std::find(e.killed_by.begin(), e.killed_by.end(), "recurrence") != e.killed_by.end());
    }
  CHECK(found_y1);

  VanishingReport r7 = vanishing_report(Embedding::operadic, 7, 2);
  for (const VanishEntry& e : r7.entries) {
    if (e.generator.label() == "lambda") {
      CHECK(e.status == "zero");  // degree-one class dies at d0 = 2 for p = 7
    } else {
      CHECK(e.status == "absent");  // every y_i has weight 14 > 2
    }
  }
}

TEST_CASE("reports are internally consistent") {
  for (int p : {2, 3, 5, 7})
    for (int g : {2, 3, 6, 9, 16, 33}) {
      for (Embedding e : {Embedding::operadic, Embedding::geometric, Embedding::stable_only}) {
        VanishingReport r = vanishing_report(e, p, g);
        for (const VanishEntry& entry : r.entries) {
          if (entry.status == "absent") CHECK_FALSE(entry.nonzero_in_source);
          if (entry.status == "zero") {
            CHECK(entry.nonzero_in_source);
            CHECK_FALSE(entry.killed_by.empty());
          }
          if (entry.status == "undetermined") {
            CHECK(entry.nonzero_in_source);
            CHECK(entry.killed_by.empty());
          }
        }
      }
    }
  CHECK_THROWS_AS(vanishing_report(Embedding::operadic, 3, 6, ReportView::paper),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_embedding("unknown"), std::invalid_argument);
  CHECK(parse_embedding("stable-only") == Embedding::stable_only);
}

TEST_CASE("stable-only reports apply no recurrence kills") {
  VanishingReport r = vanishing_report(Embedding::stable_only, 2, 6);
  for (const VanishEntry& e : r.entries) {
    for (const std::string& kill : e.killed_by) CHECK(kill == "stable");
    if (e.generator.label() == "x1") CHECK(e.status == "zero");  // stable kill at g >= 3
    if (e.generator.label() == "x2") CHECK(e.status == "zero");  // stable kill at g >= 6
  }
}

TEST_CASE("stored first homology values") {
  CHECK(h1_table("gamma", 2, 1).value == "Z/10");
  CHECK(h1_table("gamma", 2, 2).value == "Z/10");
  CHECK(h1_table("gamma", 3, 1).value == "0");
  CHECK(h1_table("gamma", 9, 1).value == "0");
  CHECK(h1_table("n", 7, 0).value == "Z/2");
  CHECK(h1_table("n", 9, 0, 3).value == "0");
  CHECK(h1_table("n", 7, 0, 5).value == "0");
  CHECK_THROWS_AS(h1_table("gamma", 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(h1_table("n", 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(h1_table("x", 3, 1), std::invalid_argument);
}

TEST_CASE("stable expectations fixture") {
  struct Case {
    const char* embedding;
    int field;
    int degree;
    int g;
    Expectation want;
  };
  const Case fixture[] = {
      {"mirror", 5, 2, 10, Expectation::zero},
      {"mirror", 0, 5, 10, Expectation::zero},
      {"mirror", 2, 6, 10, Expectation::out_of_range},
      {"mirror", 3, 1, 2, Expectation::out_of_range},
      {"mirror", 2, 2, 10, Expectation::zero},
      {"operadic", 2, 4, 7, Expectation::zero},
      {"operadic", 7, 5, 7, Expectation::out_of_range},
      {"operadic", 0, 1, 3, Expectation::zero},
      {"operadic", 0, 1, 2, Expectation::out_of_range},
      {"geometric", 0, 3, 7, Expectation::zero},
      {"geometric", 2, 5, 7, Expectation::out_of_range},
      {"szepietowski-lift", 3, 2, 10, Expectation::zero},
      {"szepietowski-lift", 0, 6, 10, Expectation::out_of_range},
      {"szepietowski", 2, 2, 9, Expectation::injective},
      {"szepietowski", 2, 3, 9, Expectation::injective},
      {"szepietowski", 3, 3, 9, Expectation::zero},
      {"szepietowski", 0, 1, 7, Expectation::zero},
      {"szepietowski", 2, 1, 7, Expectation::injective},
      {"szepietowski", 2, 3, 8, Expectation::out_of_range},
      {"szepietowski", 5, 2, 6, Expectation::out_of_range},
      {"szepietowski", 2, 0, 9, Expectation::out_of_range},
  };
  for (const Case& c : fixture) {
    INFO(c.embedding, " F", c.field, " degree ", c.degree, " g=", c.g);
    CHECK(theorem_expectation(c.embedding, c.field, c.degree, c.g) == c.want);
  }
  CHECK_THROWS_AS(theorem_expectation("nope", 2, 1, 9), std::invalid_argument);
}
