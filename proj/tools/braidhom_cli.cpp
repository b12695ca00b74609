// Command-line front end. Every subcommand prints one Report object
// (JSON by default, aligned TSV with --tsv) and is byte-deterministic for
// fixed inputs. Exit codes: 0 success, 2 usage or domain error, 3 when a
// certificate comes back false.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidhom/braid.hpp"
#include "braidhom/corpus.hpp"
#include "braidhom/homology.hpp"
#include "braidhom/oracle.hpp"
#include "braidhom/surface_reps.hpp"

using json = nlohmann::ordered_json;
using namespace braidhom;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Output {
  bool tsv = false;

  void emit(const std::string& command, const json& inputs, const json& payload) const {
    if (!tsv) {
      json report = {{"command", command},
                     {"inputs", inputs},
                     {"payload", payload},
                     {"version", kVersion}};
      std::cout << report.dump(2) << "\n";
      return;
    }
    std::cout << "# " << command << " (version " << kVersion << ")\n";
    if (payload.contains("dims") && payload["dims"].is_array()) {
      std::cout << "degree\tdim\n";
      const json& dims = payload["dims"];
      for (size_t d = 0; d < dims.size(); ++d) std::cout << d << '\t' << dims[d].dump() << "\n";
      json rest = payload;
      rest.erase("dims");
      emit_tsv("", rest);
      return;
    }
    emit_tsv("", payload);
  }

  static void emit_tsv(const std::string& prefix, const json& value) {
    if (value.is_object()) {
      for (const auto& [k, v] : value.items())
        emit_tsv(prefix.empty() ? k : prefix + "." + k, v);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      for (size_t i = 0; i < value.size(); ++i)
        emit_tsv(prefix + "[" + std::to_string(i) + "]", value[i]);
    } else if (value.is_array()) {
      std::cout << prefix;
      for (const auto& v : value) std::cout << '\t' << v.dump();
      std::cout << "\n";
    } else {
      std::cout << prefix << '\t' << value.dump() << "\n";
    }
  }
};

json word_json(const BraidWord& w) {
  return {{"strands", w.strands()}, {"word", w.letters()}};
}

json certificate_json(const Certificate& cert) {
  return {{"kind", cert.kind},
          {"subject", cert.subject},
          {"verdict", cert.verdict},
          {"witness", cert.witness}};
}

json freemap_json(const FreeMap& f, const std::vector<std::string>& labels) {
  json images = json::array();
  for (int i = 1; i <= f.source_rank(); ++i)
    images.push_back({{"generator", labels[i - 1]}, {"word", f.image(i).letters()}});
  return images;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

json dims_json(const GradedDims& d) { return d.dims; }

json vanishing_json(const VanishingReport& report) {
  json entries = json::array();
  for (const VanishEntry& e : report.entries) {
    entries.push_back({{"generator", e.generator.label()},
                       {"degree", e.generator.degree()},
                       {"weight", e.generator.weight()},
                       {"nonzero_in_source", e.nonzero_in_source},
                       {"killed_by", e.killed_by},
                       {"status", e.status}});
  }
  return {{"embedding", report.embedding},
          {"view", report.view},
          {"p", report.p},
          {"g", report.g},
          {"source_strands", report.source_strands},
          {"entries", entries},
          {"undetermined", report.undetermined()}};
}

std::vector<long long> parse_twists(const std::string& text) {
  std::istringstream in(text);
  std::vector<long long> out;
  long long v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw std::invalid_argument("malformed twist vector: " + text);
  return out;
}

// Inner braid words separated by ';', one per cable.
std::vector<BraidWord> parse_inner(const std::string& text, const std::vector<int>& widths) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != widths.size())
    throw std::invalid_argument("need one inner word per width");
  std::vector<BraidWord> out;
  for (size_t i = 0; i < parts.size(); ++i) out.push_back(BraidWord::parse(widths[i], parts[i]));
  return out;
}

std::vector<BraidWord> load_corpus(const std::string& path, int strands) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open corpus file: " + path);
  std::vector<BraidWord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(BraidWord::parse(strands, line));
  }
  return out;
}

FreeMap builtin_involution(const std::string& name, int rank) {
  std::vector<GroupWord> images;
  if (name == "identity") {
    return FreeMap::identity(rank);
  }
  if (name == "inversion") {
    for (int i = 1; i <= rank; ++i) images.push_back(GroupWord::generator(rank, i, -1));
    return FreeMap::automorphism(images, images);
  }
  throw std::invalid_argument("unknown involution: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid-to-mapping-class-group toolkit"};
  app.require_subcommand(1);

  Output out;
  bool flag_json = false;
  app.add_flag("--json", flag_json, "JSON output (default)");
  app.add_flag("--tsv", out.tsv, "aligned TSV output");

  std::string rc_command;
  json rc_inputs, rc_payload;
  int rc_exit = 0;

  // ---- braid ----------------------------------------------------------
  auto* braid_cmd = app.add_subcommand("braid", "braid word operations");
  braid_cmd->require_subcommand(1);
  int strands = 2;
  std::string word_text, other_text, twists_text, inner_text, widths_text;

  auto* cancel = braid_cmd->add_subcommand("cancel", "free cancellation");
  cancel->add_option("--strands", strands)->required();
  cancel->add_option("--word", word_text)->required();
  cancel->callback([&] {
    BraidWord w = BraidWord::parse(strands, word_text);
    rc_command = "braid cancel";
    rc_inputs = word_json(w);
    rc_payload = word_json(braid_cancel(w));
  });

  auto* permutation = braid_cmd->add_subcommand("permutation", "underlying permutation");
  permutation->add_option("--strands", strands)->required();
  permutation->add_option("--word", word_text)->required();
  permutation->callback([&] {
    BraidWord w = BraidWord::parse(strands, word_text);
    Permutation p = permutation_of(w);
    std::vector<int> images;
    for (int i = 1; i <= p.degree(); ++i) images.push_back(p.apply(i));
    rc_command = "braid permutation";
    rc_inputs = word_json(w);
    rc_payload = {{"images", images}, {"pure", p.is_identity()}};
  });

  auto* trivial = braid_cmd->add_subcommand("trivial", "word-problem oracle");
  trivial->add_option("--strands", strands)->required();
  trivial->add_option("--word", word_text)->required();
  trivial->callback([&] {
    BraidWord w = BraidWord::parse(strands, word_text);
    rc_command = "braid trivial";
    rc_inputs = word_json(w);
    rc_payload = {{"trivial", is_trivial(w)}};
  });

  auto* equal = braid_cmd->add_subcommand("equal", "compare braid words");
  equal->add_option("--strands", strands)->required();
  equal->add_option("--word", word_text)->required();
  equal->add_option("--other", other_text)->required();
  equal->callback([&] {
    BraidWord u = BraidWord::parse(strands, word_text);
    BraidWord v = BraidWord::parse(strands, other_text);
    rc_command = "braid equal";
    rc_inputs = {{"strands", strands}, {"word", u.letters()}, {"other", v.letters()}};
    rc_payload = {{"equal", braids_equal(u, v)}};
  });

  auto* cable_cmd = braid_cmd->add_subcommand("cable", "cabling action on braids");
  cable_cmd->add_option("--strands", strands, "outer strand count")->required();
  cable_cmd->add_option("--word", word_text, "outer braid word (pure)")->required();
  cable_cmd->add_option("--twists", twists_text, "outer twist vector")->required();
  cable_cmd->add_option("--widths", widths_text, "inner strand counts")->required();
  cable_cmd->add_option("--inner", inner_text, "inner words separated by ';'");
  cable_cmd->callback([&] {
    BraidWord outer_braid = BraidWord::parse(strands, word_text);
    std::vector<long long> twists = parse_twists(twists_text);
    std::vector<int> widths;
    for (long long v : parse_twists(widths_text)) widths.push_back(static_cast<int>(v));
    std::string inner = inner_text;
    if (inner.empty())
      for (size_t i = 0; i + 1 < widths.size(); ++i) inner += ";";
    RibbonBraid outer(twists, outer_braid);
    BraidWord result = cable(outer, parse_inner(inner, widths));
    rc_command = "braid cable";
    rc_inputs = {{"strands", strands},
                 {"word", outer_braid.letters()},
                 {"twists", twists},
                 {"widths", widths}};
    rc_payload = word_json(result);
  });

  // ---- rep ------------------------------------------------------------
  auto* rep_cmd = app.add_subcommand("rep", "surface representations");
  rep_cmd->require_subcommand(1);
  std::string rep_name = "mirror", check_name, corpus_path, iota_name = "identity";
  int genus = 3, random_count = 0, random_len = 8;
  std::uint64_t seed = 1;

  auto* eval = rep_cmd->add_subcommand("eval", "evaluate a braid word");
  eval->add_option("--name", rep_name)->required();
  eval->add_option("--g", genus)->required();
  eval->add_option("--word", word_text)->required();
  eval->callback([&] {
    SurfaceRep rep = make_rep(rep_name, genus);
    BraidWord w = BraidWord::parse(rep.strands(), word_text);
    rc_command = "rep eval";
    rc_inputs = {{"name", rep_name}, {"g", genus}, {"word", w.letters()}};
    if (rep.kind() == SurfaceRep::Kind::words) {
      rc_payload = {{"target_rank", rep.target_rank()},
                    {"labels", rep.generator_labels()},
                    {"images", freemap_json(rep.eval_words(w), rep.generator_labels())}};
    } else {
      rc_payload = {{"target_rank", rep.target_rank()},
                    {"matrix", matrix_json(rep.eval_matrix(w))}};
    }
  });

  auto* certify = rep_cmd->add_subcommand("certify", "run a certificate check");
  certify->add_option("--name", rep_name)->required();
  certify->add_option("--g", genus)->required();
  certify->add_option("--check", check_name,
                      "relations|diagram|squares|alphabets|faithful|jequiv|purity");
  certify->add_option("--corpus", corpus_path, "file with one braid word per line");
  certify->add_option("--random", random_count, "number of seeded random words");
  certify->add_option("--len", random_len, "random word length");
  certify->add_option("--seed", seed, "random corpus seed");
  certify->add_option("--iota", iota_name, "identity|inversion (for jequiv)");
  certify->callback([&] {
    std::string check = check_name;
    if (check.empty()) {
      if (rep_name == "mirror") check = "diagram";
      else if (rep_name == "szepietowski") check = "squares";
      else if (rep_name == "operadic") check = "alphabets";
      else if (rep_name == "gamma") check = "purity";
      else check = "relations";
    }
    rc_command = "rep certify";
    rc_inputs = {{"name", rep_name}, {"g", genus}, {"check", check}, {"seed", seed}};

    Certificate cert;
    if (check == "purity") {
      cert.kind = "purity-violation";
      cert.subject = "gamma(sigma_i), g=" + std::to_string(genus);
      cert.verdict = true;
      for (int i = 1; i < genus; ++i) {
        Certificate one = check_purity_violation(
            gamma(BraidWord::generator(genus, i)), "gamma(sigma_" + std::to_string(i) + ")");
        cert.witness.insert(cert.witness.end(), one.witness.begin(), one.witness.end());
        if (!one.verdict) {
          cert.verdict = false;
          break;
        }
      }
    } else if (check == "alphabets") {
      cert = check_disjoint_alphabets(genus);
    } else {
      SurfaceRep rep = make_rep(rep_name, genus);
      std::vector<BraidWord> words;
      if (!corpus_path.empty()) {
        words = load_corpus(corpus_path, rep.strands());
      } else if (random_count > 0) {
        words = random_words(rep.strands(), random_count, random_len, seed);
      } else {
        words = exhaustive_words(rep.strands(), 4);
      }
      rc_inputs["words"] = words.size();
      if (check == "relations") cert = check_braid_relations(rep);
      else if (check == "diagram") cert = check_detection_diagram(rep, words);
      else if (check == "squares") cert = check_squares_compatibility(rep, words);
      else if (check == "faithful") cert = faithfulness_sample(rep, words);
      else if (check == "jequiv")
        cert = check_J_equivariance(rep, builtin_involution(iota_name, rep.target_rank()), words);
      else throw std::invalid_argument("unknown check: " + check);
    }
    rc_payload = certificate_json(cert);
    if (!cert.verdict) rc_exit = 3;
  });

  auto* h1det = rep_cmd->add_subcommand("h1det", "abelianized determinant");
  h1det->add_option("--name", rep_name)->required();
  h1det->add_option("--g", genus)->required();
  h1det->add_option("--word", word_text)->required();
  h1det->callback([&] {
    SurfaceRep rep = make_rep(rep_name, genus);
    BraidWord w = BraidWord::parse(rep.strands(), word_text);
    IntMatrix m = h1_action(rep, w);
    rc_command = "rep h1det";
    rc_inputs = {{"name", rep_name}, {"g", genus}, {"word", w.letters()}};
    rc_payload = {{"det", m.det()}, {"matrix", matrix_json(m)}};
  });

  // ---- homology -------------------------------------------------------
  auto* hom_cmd = app.add_subcommand("homology", "braid group homology");
  hom_cmd->require_subcommand(1);
  int m_strands = 4, prime = 2, max_deg = 6;

  auto* dims = hom_cmd->add_subcommand("dims", "dimension table (monomial basis)");
  dims->add_option("--m", m_strands)->required();
  dims->add_option("--p", prime, "0 for rational coefficients")->required();
  dims->add_option("--max-deg", max_deg);
  dims->callback([&] {
    rc_command = "homology dims";
    rc_inputs = {{"m", m_strands}, {"p", prime}, {"max_deg", max_deg}};
    json basis = json::array();
    if (prime == 2)
      for (const Monomial& mono : f2_basis(m_strands, max_deg))
        basis.push_back({{"monomial", mono.str()}, {"degree", mono.degree()}, {"weight", mono.weight()}});
    else if (prime != 0)
      for (const Monomial& mono : fp_basis(m_strands, prime, max_deg))
        basis.push_back({{"monomial", mono.str()}, {"degree", mono.degree()}, {"weight", mono.weight()}});
    rc_payload = {{"dims", dims_json(homology_dims(m_strands, prime, max_deg))}};
    if (prime != 0) rc_payload["basis"] = basis;
  });

  auto* poincare = hom_cmd->add_subcommand("poincare", "Poincare series");
  poincare->add_option("--m", m_strands)->required();
  poincare->add_option("--p", prime)->required();
  poincare->add_option("--max-deg", max_deg);
  poincare->callback([&] {
    rc_command = "homology poincare";
    rc_inputs = {{"m", m_strands}, {"p", prime}, {"max_deg", max_deg}};
    GradedDims d = homology_dims(m_strands, prime, max_deg);
    rc_payload = {{"poincare", d.poincare()}, {"dims", dims_json(d)}};
  });

  auto* oracle = hom_cmd->add_subcommand("oracle", "chain-complex homology oracle");
  oracle->add_option("--m", m_strands)->required();
  oracle->add_option("--p", prime)->required();
  oracle->add_option("--max-deg", max_deg);
  oracle->callback([&] {
    rc_command = "homology oracle";
    rc_inputs = {{"m", m_strands}, {"p", prime}, {"max_deg", max_deg}};
    rc_payload = {{"dims", dims_json(oracle_homology(m_strands, prime, max_deg))}};
  });

  // ---- report ---------------------------------------------------------
  auto* report_cmd = app.add_subcommand("report", "vanishing and table reports");
  report_cmd->require_subcommand(1);
  std::string embedding = "operadic", view = "combined", family = "gamma", field = "2";
  int rg = 8, rb = 1, degree = 1, coeff = 0;

  auto* vanishing = report_cmd->add_subcommand("vanishing", "generator vanishing report");
  vanishing->add_option("--embedding", embedding, "operadic|geometric|stable-only")->required();
  vanishing->add_option("--p", prime)->required();
  vanishing->add_option("--g", rg)->required();
  vanishing->add_option("--view", view, "combined|paper");
  vanishing->callback([&] {
    rc_command = "report vanishing";
    rc_inputs = {{"embedding", embedding}, {"p", prime}, {"g", rg}, {"view", view}};
    ReportView v = view == "paper" ? ReportView::paper : ReportView::combined;
    if (view != "paper" && view != "combined")
      throw std::invalid_argument("unknown view: " + view);
    rc_payload = vanishing_json(vanishing_report(parse_embedding(embedding), prime, rg, v));
  });

  auto* h1 = report_cmd->add_subcommand("h1", "first homology table");
  h1->add_option("--family", family, "gamma|n")->required();
  h1->add_option("--g", rg)->required();
  h1->add_option("--b", rb);
  h1->add_option("--coeff", coeff, "0 integral, or a prime");
  h1->callback([&] {
    rc_command = "report h1";
    if (family == "n") rb = 0;
    rc_inputs = {{"family", family}, {"g", rg}, {"b", rb}, {"coeff", coeff}};
    H1Entry entry = h1_table(family, rg, rb, coeff);
    rc_payload = {{"family", entry.family},
                  {"g", entry.genus},
                  {"b", entry.boundaries},
                  {"coeff", entry.coefficient_prime},
                  {"value", entry.value}};
  });

  auto* expectation = report_cmd->add_subcommand("expectation", "stable-range expectations");
  expectation->add_option("--embedding", embedding)->required();
  expectation->add_option("--field", field, "q or a prime")->required();
  expectation->add_option("--degree", degree)->required();
  expectation->add_option("--g", rg)->required();
  expectation->callback([&] {
    int field_p = (field == "q" || field == "Q" || field == "0") ? 0 : std::stoi(field);
    rc_command = "report expectation";
    rc_inputs = {{"embedding", embedding}, {"field", field}, {"degree", degree}, {"g", rg}};
    rc_payload = {{"expectation", expectation_name(theorem_expectation(embedding, field_p, degree, rg))}};
  });

  auto* stable = report_cmd->add_subcommand("stable-range", "homology stability ranges");
  stable->add_option("--g", rg)->required();
  stable->add_option("--family", family, "gamma|n");
  stable->callback([&] {
    rc_command = "report stable-range";
    rc_inputs = {{"family", family}, {"g", rg}};
    if (family == "n") {
      auto [closed, bounded] = nonorientable_stable_range(rg);
      rc_payload = {{"closed", closed}, {"bounded", bounded}};
    } else {
      rc_payload = {{"range", stable_range(rg)}};
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  out.emit(rc_command, rc_inputs, rc_payload);
  return rc_exit;
}
