#include "braidhom/homology.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace braidhom {

namespace {

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

GeneratorSpec GeneratorSpec::x(int i) {
  if (i < 1) throw std::invalid_argument("x_i needs i >= 1");
  return {Kind::x, i, 2};
}

GeneratorSpec GeneratorSpec::lambda(int p) {
  if (!is_odd_prime(p)) throw std::invalid_argument("lambda lives at odd primes");
  return {Kind::lambda, 0, p};
}

GeneratorSpec GeneratorSpec::y(int p, int i) {
  if (!is_odd_prime(p) || i < 1) throw std::invalid_argument("y_i needs odd p and i >= 1");
  return {Kind::y, i, p};
}

GeneratorSpec GeneratorSpec::beta_y(int p, int i) {
  if (!is_odd_prime(p) || i < 1) throw std::invalid_argument("beta y_i needs odd p and i >= 1");
  return {Kind::beta_y, i, p};
}

long long GeneratorSpec::degree() const {
  switch (kind) {
    case Kind::x: return ipow(2, index) - 1;
    case Kind::lambda: return 1;
    case Kind::y: return 2 * ipow(prime, index) - 1;
    case Kind::beta_y: return 2 * ipow(prime, index) - 2;
  }
  return 0;
}

long long GeneratorSpec::weight() const {
  switch (kind) {
    case Kind::x: return ipow(2, index);
    case Kind::lambda: return 2;
    case Kind::y:
    case Kind::beta_y: return 2 * ipow(prime, index);
  }
  return 0;
}

std::string GeneratorSpec::label() const {
  switch (kind) {
    case Kind::x: return "x" + std::to_string(index);
    case Kind::lambda: return "lambda";
    case Kind::y: return "y" + std::to_string(index);
    case Kind::beta_y: return "by" + std::to_string(index);
  }
  return "?";
}

GeneratorSpec q_on_generator(int p, const GeneratorSpec& gen) {
  if (gen.prime != p) throw std::invalid_argument("generator prime mismatch");
  switch (gen.kind) {
    case GeneratorSpec::Kind::x: return GeneratorSpec::x(gen.index + 1);
    case GeneratorSpec::Kind::lambda: return GeneratorSpec::y(p, 1);
    case GeneratorSpec::Kind::y: return GeneratorSpec::y(p, gen.index + 1);
    case GeneratorSpec::Kind::beta_y:
      throw std::invalid_argument("Q is not defined on beta y_i");
  }
  throw std::invalid_argument("unknown generator kind");
}

long long Monomial::degree() const {
  long long d = 0;
  for (const auto& [gen, exp] : factors) d += gen.degree() * exp;
  return d;
}

long long Monomial::weight() const {
  long long w = 0;
  for (const auto& [gen, exp] : factors) w += gen.weight() * exp;
  return w;
}

std::string Monomial::str() const {
  if (factors.empty()) return "1";
  std::string s;
  for (const auto& [gen, exp] : factors) {
    if (!s.empty()) s += '.';
    s += gen.label();
    if (exp > 1) s += '^' + std::to_string(exp);
  }
  return s;
}

namespace {

// Enumerates exponent vectors over the generator list, bounded in weight and
// degree; generators with odd degree admit exponent at most 1.
void enumerate(const std::vector<GeneratorSpec>& gens, size_t pos, long long weight_left,
               long long degree_left, Monomial& current, std::vector<Monomial>& out) {
  if (pos == gens.size()) {
    out.push_back(current);
    return;
  }
  const GeneratorSpec& gen = gens[pos];
  enumerate(gens, pos + 1, weight_left, degree_left, current, out);
  // odd-degree generators square to zero at odd primes; mod 2 everything
  // is polynomial
  int max_exp =
      (gen.prime != 2 && gen.odd_degree()) ? 1 : std::numeric_limits<int>::max();
  long long w = 0, d = 0;
  for (int e = 1; e <= max_exp; ++e) {
    w += gen.weight();
    d += gen.degree();
    if (w > weight_left || d > degree_left) break;
    current.factors.push_back({gen, e});
    enumerate(gens, pos + 1, weight_left - w, degree_left - d, current, out);
    current.factors.pop_back();
  }
}

std::vector<Monomial> sorted_basis(const std::vector<GeneratorSpec>& gens, int m, int max_deg) {
  std::vector<Monomial> out;
  Monomial current;
  enumerate(gens, 0, m, max_deg, current, out);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    long long da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.str() < b.str();
  });
  return out;
}

GradedDims dims_of(const std::vector<Monomial>& basis, int max_deg) {
  GradedDims gd;
  gd.dims.assign(max_deg + 1, 0);
  for (const Monomial& mono : basis) ++gd.dims[mono.degree()];
  return gd;
}

}  // namespace

std::vector<Monomial> f2_basis(int m, int max_deg) {
  if (m < 1) throw std::invalid_argument("f2_basis needs m >= 1");
  if (max_deg < 0) throw std::invalid_argument("negative degree bound");
  std::vector<GeneratorSpec> gens;
  for (int i = 1; ipow(2, i) <= m; ++i) {
    GeneratorSpec gen = GeneratorSpec::x(i);
    if (gen.degree() <= max_deg) gens.push_back(gen);
  }
  return sorted_basis(gens, m, max_deg);
}

GradedDims f2_dims(int m, int max_deg) { return dims_of(f2_basis(m, max_deg), max_deg); }

std::vector<Monomial> fp_basis(int m, int p, int max_deg) {
  if (!is_odd_prime(p)) throw std::invalid_argument("fp_basis needs an odd prime");
  if (m < 1) throw std::invalid_argument("fp_basis needs m >= 1");
  if (max_deg < 0) throw std::invalid_argument("negative degree bound");
  std::vector<GeneratorSpec> gens;
  if (2 <= m) gens.push_back(GeneratorSpec::lambda(p));
  for (int i = 1; 2 * ipow(p, i) <= m; ++i) {
    GeneratorSpec by = GeneratorSpec::beta_y(p, i);
    GeneratorSpec y = GeneratorSpec::y(p, i);
    if (by.degree() <= max_deg) gens.push_back(by);
    if (y.degree() <= max_deg) gens.push_back(y);
  }
  return sorted_basis(gens, m, max_deg);
}

GradedDims fp_dims(int m, int p, int max_deg) { return dims_of(fp_basis(m, p, max_deg), max_deg); }

GradedDims rational_dims(int m, int max_deg) {
  if (m < 1) throw std::invalid_argument("rational_dims needs m >= 1");
  GradedDims gd;
  gd.dims.assign(max_deg + 1, 0);
  gd.dims[0] = 1;
  if (m > 1 && max_deg >= 1) gd.dims[1] = 1;
  return gd;
}

GradedDims homology_dims(int m, int p, int max_deg) {
  if (p == 0) return rational_dims(m, max_deg);
  if (p == 2) return f2_dims(m, max_deg);
  return fp_dims(m, p, max_deg);
}

std::string GradedDims::poincare() const {
  std::string s;
  for (size_t d = 0; d < dims.size(); ++d) {
    if (dims[d] == 0) continue;
    if (!s.empty()) s += " + ";
    if (d == 0)
      s += std::to_string(dims[d]);
    else {
      if (dims[d] != 1) s += std::to_string(dims[d]) + "*";
      s += "t";
      if (d > 1) s += "^" + std::to_string(d);
    }
  }
  return s.empty() ? "0" : s;
}

int stable_range(int g) { return std::max(0, static_cast<int>((2LL * (g - 1)) / 3)); }

std::pair<int, int> nonorientable_stable_range(int g) {
  int closed = g >= 3 ? (g - 3) / 3 : 0;
  int bounded = g >= 0 ? g / 3 : 0;
  return {closed, bounded};
}

int stable_kill_threshold(int p, const GeneratorSpec& gen) {
  if (p == 2) {
    if (gen.kind != GeneratorSpec::Kind::x)
      throw std::invalid_argument("stable threshold at p=2 applies to x_i");
    return static_cast<int>(ceil_div(3 * ipow(2, gen.index) - 1, 2));
  }
  if (!is_odd_prime(p)) throw std::invalid_argument("p must be 2 or an odd prime");
  if (gen.kind == GeneratorSpec::Kind::lambda) return 3;  // degree 1 <= 2(g-1)/3
  if (gen.kind != GeneratorSpec::Kind::y)
    throw std::invalid_argument("stable threshold at odd p applies to y_i");
  return static_cast<int>(ceil_div(6 * ipow(p, gen.index) - 1, 2));
}

int operadic_threshold(int p, const GeneratorSpec& gen) {
  const int d0 = (p == 2 || p == 5) ? 3 : 2;
  if (p == 2) {
    if (gen.kind != GeneratorSpec::Kind::x)
      throw std::invalid_argument("operadic threshold at p=2 applies to x_i");
    return static_cast<int>(3 * ipow(2, gen.index - 1));
  }
  if (!is_odd_prime(p)) throw std::invalid_argument("p must be 2 or an odd prime");
  if (gen.kind == GeneratorSpec::Kind::lambda) return d0;
  if (gen.kind != GeneratorSpec::Kind::y)
    throw std::invalid_argument("operadic threshold at odd p applies to y_i");
  return static_cast<int>(d0 * ipow(p, gen.index));
}

int geometric_threshold(int p, int index) {
  if (index < 1) throw std::invalid_argument("geometric threshold needs index >= 1");
  if (p == 2) return static_cast<int>(ipow(2, index + 2) - 1);
  if (!is_odd_prime(p)) throw std::invalid_argument("p must be 2 or an odd prime");
  if (p == 5) return static_cast<int>(4 * ipow(5, index) - 1);
  return static_cast<int>(3 * ipow(p, index) - 1);
}

bool nonvanishing_in_source(int p, const GeneratorSpec& gen, int m) {
  if (gen.prime != p) throw std::invalid_argument("generator prime mismatch");
  return gen.weight() <= m;
}

std::vector<std::string> VanishingReport::undetermined() const {
  std::vector<std::string> out;
  for (const VanishEntry& e : entries)
    if (e.status == "undetermined") out.push_back(e.generator.label());
  return out;
}

Embedding parse_embedding(const std::string& name) {
  if (name == "operadic") return Embedding::operadic;
  if (name == "geometric") return Embedding::geometric;
  if (name == "stable-only") return Embedding::stable_only;
  throw std::invalid_argument("unknown embedding: " + name);
}

namespace {

std::string embedding_name(Embedding e) {
  switch (e) {
    case Embedding::operadic: return "operadic";
    case Embedding::geometric: return "geometric";
    case Embedding::stable_only: return "stable-only";
  }
  return "?";
}

VanishEntry make_entry(const GeneratorSpec& gen, bool nonzero, std::vector<std::string> killed) {
  VanishEntry e;
  e.generator = gen;
  e.nonzero_in_source = nonzero;
  if (!nonzero) {
    e.status = "absent";
  } else if (!killed.empty()) {
    e.killed_by = std::move(killed);
    e.status = "zero";
  } else {
    e.status = "undetermined";
  }
  return e;
}

}  // namespace

VanishingReport vanishing_report(Embedding embedding, int p, int g, ReportView view) {
  if (p != 2 && !is_odd_prime(p)) throw std::invalid_argument("p must be 2 or an odd prime");
  if (g < 1) throw std::invalid_argument("genus must be positive");
  if (view == ReportView::paper && embedding != Embedding::geometric)
    throw std::invalid_argument("view 'paper' is specific to the geometric embedding");

  VanishingReport report;
  report.embedding = embedding_name(embedding);
  report.view = view == ReportView::paper ? "paper" : "combined";
  report.p = p;
  report.g = g;
  report.source_strands = embedding == Embedding::geometric ? 2 * g + 2 : g;
  const int m = report.source_strands;

  auto family_gen = [&](int i) {
    return p == 2 ? GeneratorSpec::x(i) : GeneratorSpec::y(p, i);
  };
  auto source_nonzero = [&](const GeneratorSpec& gen) {
    if (view == ReportView::paper) {
      // printed source bounds: x_i != 0 once 2^{i-1} - 1 <= g,
      // y_i != 0 once p^{i-1} - 1 <= g
      return ipow(p, gen.index - 1) - 1 <= g;
    }
    return nonvanishing_in_source(p, gen, m);
  };
  auto kills = [&](const GeneratorSpec& gen) {
    std::vector<std::string> killed;
    if (view == ReportView::paper) {
      if (g >= geometric_threshold(p, gen.index)) killed.push_back("recurrence");
      return killed;
    }
    if (g >= stable_kill_threshold(p, gen)) killed.push_back("stable");
    switch (embedding) {
      case Embedding::operadic:
        if (g >= operadic_threshold(p, gen)) killed.push_back("recurrence");
        break;
      case Embedding::geometric:
        if (g >= geometric_threshold(p, gen.index)) killed.push_back("recurrence");
        break;
      case Embedding::stable_only: break;
    }
    return killed;
  };

  if (view == ReportView::combined && p != 2) {
    // the degree-one class
    GeneratorSpec lam = GeneratorSpec::lambda(p);
    std::vector<std::string> killed;
    if (g >= stable_kill_threshold(p, lam)) killed.push_back("stable");
    if (embedding != Embedding::stable_only && g >= operadic_threshold(p, lam))
      killed.push_back("recurrence");
    report.entries.push_back(make_entry(lam, nonvanishing_in_source(p, lam, m), std::move(killed)));
  }

  int last_nonzero = 0;
  for (int i = 1;; ++i) {
    GeneratorSpec gen = family_gen(i);
    if (source_nonzero(gen))
      last_nonzero = i;
    else if (i > last_nonzero)
      break;
  }
  for (int i = 1; i <= last_nonzero + 1; ++i) {
    GeneratorSpec gen = family_gen(i);
    bool nonzero = source_nonzero(gen);
    report.entries.push_back(make_entry(gen, nonzero, nonzero ? kills(gen) : std::vector<std::string>{}));
  }
  return report;
}

H1Entry h1_table(const std::string& family, int g, int b, int coefficient_prime) {
  H1Entry entry;
  entry.family = family;
  entry.genus = g;
  entry.boundaries = b;
  entry.coefficient_prime = coefficient_prime;
  if (family == "gamma") {
    if (coefficient_prime != 0)
      throw std::invalid_argument("orientable H_1 values are stored integrally");
    if (g == 2 && (b == 1 || b == 2)) {
      entry.value = "Z/10";
      return entry;
    }
    if (g >= 3 && b == 1) {
      entry.value = "0";
      return entry;
    }
    throw std::invalid_argument("H_1(Gamma_{" + std::to_string(g) + "," + std::to_string(b) +
                                "}) is not in the stored table");
  }
  if (family == "n") {
    if (b != 0) throw std::invalid_argument("nonorientable H_1 values are stored for closed surfaces");
    if (g < 7) throw std::invalid_argument("H_1(N_g) is stored only for g >= 7");
    if (coefficient_prime == 0) {
      entry.value = "Z/2";
    } else if (coefficient_prime == 2) {
      throw std::invalid_argument("mod-2 value not stored; use integral coefficients");
    } else if (is_odd_prime(coefficient_prime)) {
      entry.value = "0";
    } else {
      throw std::invalid_argument("coefficient must be 0 (integral) or a prime");
    }
    return entry;
  }
  throw std::invalid_argument("unknown family: " + family);
}

std::string expectation_name(Expectation e) {
  switch (e) {
    case Expectation::zero: return "zero";
    case Expectation::injective: return "injective";
    case Expectation::out_of_range: return "out-of-range";
  }
  return "?";
}

Expectation theorem_expectation(const std::string& embedding, int field_p, int degree, int g) {
  if (field_p != 0 && field_p != 2 && !is_odd_prime(field_p))
    throw std::invalid_argument("field must be 0 (Q) or a prime");
  if (degree <= 0) return Expectation::out_of_range;

  if (embedding == "szepietowski") {
    // crosscap embedding into N_{g,1}
    if (g < 7 || 3 * degree > g) return Expectation::out_of_range;
    return field_p == 2 ? Expectation::injective : Expectation::zero;
  }

  int target_genus;
  if (embedding == "mirror" || embedding == "szepietowski-lift")
    target_genus = g - 1;
  else if (embedding == "operadic" || embedding == "geometric")
    target_genus = g;
  else
    throw std::invalid_argument("unknown embedding: " + embedding);

  if (degree <= stable_range(target_genus)) return Expectation::zero;
  return Expectation::out_of_range;
}

}  // namespace braidhom
