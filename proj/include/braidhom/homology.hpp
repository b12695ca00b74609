#pragma once

#include <string>
#include <utility>
#include <vector>

namespace braidhom {

// Multiplicative generator of H_*(B_m; F_p):
//   p = 2:   x_i of degree 2^i - 1 and weight 2^i;
//   p odd:   lambda (degree 1, weight 2), y_i (degree 2p^i - 1) and
//            beta y_i (degree 2p^i - 2), both of weight 2p^i.
// The weight is the least number of strands on which the class lives.
struct GeneratorSpec {
  enum class Kind { x, lambda, y, beta_y };

  Kind kind;
  int index;  // i >= 1; 0 for lambda
  int prime;

  static GeneratorSpec x(int i);
  static GeneratorSpec lambda(int p);
  static GeneratorSpec y(int p, int i);
  static GeneratorSpec beta_y(int p, int i);

  long long degree() const;
  long long weight() const;
  bool odd_degree() const { return degree() % 2 == 1; }
  std::string label() const;

  bool operator==(const GeneratorSpec& rhs) const = default;
};

// First Dyer-Lashof operation on generators: x_i -> x_{i+1},
// lambda -> y_1, y_i -> y_{i+1}. Undefined on beta y_i.
GeneratorSpec q_on_generator(int p, const GeneratorSpec& gen);

struct Monomial {
  std::vector<std::pair<GeneratorSpec, int>> factors;  // (generator, exponent)

  long long degree() const;
  long long weight() const;
  std::string str() const;

  bool operator==(const Monomial& rhs) const = default;
};

// Dimension vector of a graded vector space, indices 0..max_deg.
struct GradedDims {
  std::vector<long long> dims;

  long long at(int d) const { return d >= 0 && d < static_cast<int>(dims.size()) ? dims[d] : 0; }
  std::string poincare() const;
  bool operator==(const GradedDims& rhs) const = default;
};

// Monomial bases of H_*(B_m; F), ordered by degree then lexicographically.
std::vector<Monomial> f2_basis(int m, int max_deg);
GradedDims f2_dims(int m, int max_deg);
std::vector<Monomial> fp_basis(int m, int p, int max_deg);
GradedDims fp_dims(int m, int p, int max_deg);
GradedDims rational_dims(int m, int max_deg);

// dims(m, p, max_deg) for p = 0 (rationals), 2, or an odd prime.
GradedDims homology_dims(int m, int p, int max_deg);

// Degree range in which H_*(Gamma_{g,1}) is stable: floor(2(g-1)/3).
int stable_range(int g);
// (closed, bounded) ranges for nonorientable mapping class groups:
// floor((g-3)/3) and floor(g/3), clamped at 0.
std::pair<int, int> nonorientable_stable_range(int g);

// Least genus at which the stable vanishing of the embeddings kills the
// generator: x_i at ceil((3*2^i - 1)/2), y_i at ceil((6p^i - 1)/2).
int stable_kill_threshold(int p, const GeneratorSpec& gen);

// Least genus from the genus-additive operadic recurrence d_i = p^i d_0,
// d_0 = 3 for p in {2,5} and 2 otherwise. x_i dies at 3*2^{i-1}; y_i at
// 3*5^i (p=5) or 2p^i (other odd p); degree-1 classes at d_0.
int operadic_threshold(int p, const GeneratorSpec& gen);

// Least genus from the chain-embedding recurrence d_i = p^i(d_0+1) - 1:
// x_i dies at 2^{i+2} - 1, y_i at 4*5^i - 1 (p=5) or 3p^i - 1 (p != 5).
int geometric_threshold(int p, int index);

// Whether the generator is nonzero in H_*(B_m; F_p): weight <= m.
bool nonvanishing_in_source(int p, const GeneratorSpec& gen, int m);

enum class Embedding { operadic, geometric, stable_only };
enum class ReportView { combined, paper };

struct VanishEntry {
  GeneratorSpec generator;
  bool nonzero_in_source = false;
  std::vector<std::string> killed_by;  // subset of {"stable", "recurrence"}
  std::string status;                  // "zero", "undetermined", "absent"
};

struct VanishingReport {
  std::string embedding;
  std::string view;
  int p = 2;
  int g = 0;
  int source_strands = 0;
  std::vector<VanishEntry> entries;

  std::vector<std::string> undetermined() const;
};

// Per-generator vanishing status for the embedding at prime p and genus g.
// The geometric embedding has source B_{2g+2}, the others B_g. The "paper"
// view uses the looser printed source bounds (x_i nonzero once
// 2^{i-1} - 1 <= g) together with the chain-embedding thresholds only; the
// "combined" view uses the weight rule and the best of both thresholds.
VanishingReport vanishing_report(Embedding embedding, int p, int g,
                                 ReportView view = ReportView::combined);

Embedding parse_embedding(const std::string& name);

struct H1Entry {
  std::string family;  // "gamma" or "n"
  int genus = 0;
  int boundaries = 0;
  int coefficient_prime = 0;  // 0 = integral
  std::string value;          // "Z/10", "Z/2", "0"
};

// Stored first-homology values: H_1(Gamma_{2,1}) = H_1(Gamma_{2,2}) = Z/10,
// H_1(Gamma_{g,1}) = 0 for g >= 3, H_1(N_g) = Z/2 for g >= 7 and its
// vanishing with odd-prime field coefficients. Throws for genera outside
// the stored table.
H1Entry h1_table(const std::string& family, int g, int b, int coefficient_prime = 0);

enum class Expectation { zero, injective, out_of_range };

std::string expectation_name(Expectation e);

// Stable-range behaviour of the embeddings in reduced homology.
// Embeddings into orientable targets induce zero in degrees
// 0 < d <= stable_range(target genus); the crosscap embedding into N_{g,1}
// is injective for F_2 and zero for Q and odd F_p when g >= 7 and
// 0 < d <= g/3. field_p = 0 means Q. Names: mirror, operadic, geometric,
// szepietowski, szepietowski-lift.
Expectation theorem_expectation(const std::string& embedding, int field_p, int degree, int g);

}  // namespace braidhom
