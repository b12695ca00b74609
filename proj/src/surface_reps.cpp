#include "braidhom/surface_reps.hpp"

#include <stdexcept>

namespace braidhom {

namespace {

std::vector<Letter> conj(const std::vector<Letter>& u, const std::vector<Letter>& w) {
  // u w u^-1 as a raw letter sequence
  std::vector<Letter> out(u);
  out.insert(out.end(), w.begin(), w.end());
  for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back(-*it);
  return out;
}

std::vector<Letter> inv(const std::vector<Letter>& u) {
  std::vector<Letter> out(u.rbegin(), u.rend());
  for (Letter& l : out) l = -l;
  return out;
}

}  // namespace

SurfaceRep SurfaceRep::artin_rep(int n) {
  if (n < 1) throw std::invalid_argument("artin_rep needs n >= 1");
  SurfaceRep rep;
  rep.name_ = "artin";
  rep.kind_ = Kind::words;
  rep.strands_ = n;
  rep.target_rank_ = n;
  for (int i = 1; i < n; ++i) rep.word_images_.push_back(artin_generator(n, i, 1));
  return rep;
}

SurfaceRep SurfaceRep::mirror_rep(int g) {
  if (g < 2) throw std::invalid_argument("mirror_rep needs g >= 2");
  SurfaceRep rep;
  rep.name_ = "mirror";
  rep.kind_ = Kind::words;
  rep.strands_ = g;
  rep.target_rank_ = 2 * g - 1;
  const int rank = rep.target_rank_;

  for (int i = 1; i < g; ++i) {
    std::vector<GroupWord> fwd, bwd;
    for (int k = 1; k <= rank; ++k) {
      fwd.push_back(GroupWord::generator(rank, k));
      bwd.push_back(GroupWord::generator(rank, k));
    }
    const int ai = a_index(i), ai1 = a_index(i + 1), bi = b_index(i);
    fwd[ai - 1] = GroupWord(rank, {ai, ai1, -ai});
    fwd[ai1 - 1] = GroupWord::generator(rank, ai);
    fwd[bi - 1] = GroupWord(rank, {ai, -bi, -ai});
    if (i >= 2) {
      const int bprev = b_index(i - 1);
      fwd[bprev - 1] = GroupWord(rank, {bprev, ai, bi, -ai});
    }
    if (i + 1 < g) {
      const int bnext = b_index(i + 1);
      fwd[bnext - 1] = GroupWord(rank, {bi, bnext});
    }

    bwd[ai - 1] = GroupWord::generator(rank, ai1);
    bwd[ai1 - 1] = GroupWord(rank, {-ai1, ai, ai1});
    bwd[bi - 1] = GroupWord(rank, {-ai1, -bi, ai1});
    if (i >= 2) {
      const int bprev = b_index(i - 1);
      bwd[bprev - 1] = GroupWord(rank, {bprev, bi});
    }
    if (i + 1 < g) {
      const int bnext = b_index(i + 1);
      bwd[bnext - 1] = GroupWord(rank, {-ai1, bi, ai1, bnext});
    }
    rep.word_images_.push_back(FreeMap::automorphism(std::move(fwd), std::move(bwd)));
  }
  return rep;
}

SurfaceRep SurfaceRep::szepietowski_rep(int g) {
  if (g < 2) throw std::invalid_argument("szepietowski_rep needs g >= 2");
  SurfaceRep rep;
  rep.name_ = "szepietowski";
  rep.kind_ = Kind::words;
  rep.strands_ = g;
  rep.target_rank_ = g;

  for (int i = 1; i < g; ++i) {
    std::vector<GroupWord> fwd, bwd;
    for (int k = 1; k <= g; ++k) {
      fwd.push_back(GroupWord::generator(g, k));
      bwd.push_back(GroupWord::generator(g, k));
    }
    fwd[i - 1] = GroupWord(g, {i, i, i + 1, -i, -i});
    fwd[i] = GroupWord::generator(g, i);
    bwd[i - 1] = GroupWord::generator(g, i + 1);
    bwd[i] = GroupWord(g, {-(i + 1), -(i + 1), i, i + 1, i + 1});
    rep.word_images_.push_back(FreeMap::automorphism(std::move(fwd), std::move(bwd)));
  }
  return rep;
}

SurfaceRep SurfaceRep::operadic_rep(int g) {
  if (g < 2) throw std::invalid_argument("operadic_rep needs g >= 2");
  SurfaceRep rep;
  rep.name_ = "operadic";
  rep.kind_ = Kind::words;
  rep.strands_ = g;
  rep.target_rank_ = 2 * g;
  const int rank = rep.target_rank_;

  auto a = [](int i) { return 2 * i - 1; };
  auto b = [](int i) { return 2 * i; };

  for (int i = 1; i < g; ++i) {
    std::vector<Letter> ki = {a(i), b(i), -a(i), -b(i)};          // commutator [a_i, b_i]
    std::vector<Letter> ki1 = {a(i + 1), b(i + 1), -a(i + 1), -b(i + 1)};
    std::vector<GroupWord> fwd, bwd;
    for (int k = 1; k <= rank; ++k) {
      fwd.push_back(GroupWord::generator(rank, k));
      bwd.push_back(GroupWord::generator(rank, k));
    }
    fwd[a(i) - 1] = GroupWord(rank, conj(ki, {a(i + 1)}));
    fwd[b(i) - 1] = GroupWord(rank, conj(ki, {b(i + 1)}));
    fwd[a(i + 1) - 1] = GroupWord::generator(rank, a(i));
    fwd[b(i + 1) - 1] = GroupWord::generator(rank, b(i));

    bwd[a(i) - 1] = GroupWord::generator(rank, a(i + 1));
    bwd[b(i) - 1] = GroupWord::generator(rank, b(i + 1));
    bwd[a(i + 1) - 1] = GroupWord(rank, conj(inv(ki1), {a(i)}));
    bwd[b(i + 1) - 1] = GroupWord(rank, conj(inv(ki1), {b(i)}));
    rep.word_images_.push_back(FreeMap::automorphism(std::move(fwd), std::move(bwd)));
  }
  return rep;
}

SurfaceRep SurfaceRep::symplectic_rep(int n) {
  if (n < 2) throw std::invalid_argument("symplectic_rep needs n >= 2");
  SurfaceRep rep;
  rep.name_ = "symplectic";
  rep.kind_ = Kind::matrices;
  rep.strands_ = n;
  rep.target_rank_ = n - 1;
  const int d = n - 1;

  IntMatrix pairing(d, d);
  for (int i = 0; i + 1 < d; ++i) {
    pairing.at(i, i + 1) = 1;
    pairing.at(i + 1, i) = -1;
  }
  rep.pairing_ = pairing;

  for (int i = 1; i < n; ++i) {
    // T_i: v_j -> v_j + <v_j, v_i> v_i; columns are generator images.
    IntMatrix t = IntMatrix::identity(d);
    IntMatrix tinv = IntMatrix::identity(d);
    for (int j = 1; j <= d; ++j) {
      long long pair = pairing.at(j - 1, i - 1);
      t.at(i - 1, j - 1) += pair;
      tinv.at(i - 1, j - 1) -= pair;
    }
    rep.matrix_images_.push_back(t);
    rep.matrix_inverses_.push_back(tinv);
  }
  return rep;
}

SurfaceRep SurfaceRep::from_word_images(std::string name, int strands,
                                        std::vector<FreeMap> images) {
  if (static_cast<int>(images.size()) != strands - 1)
    throw std::invalid_argument("need one image per braid generator");
  SurfaceRep rep;
  rep.name_ = std::move(name);
  rep.kind_ = Kind::words;
  rep.strands_ = strands;
  rep.target_rank_ = images.empty() ? 0 : images.front().target_rank();
  for (const FreeMap& f : images) {
    if (f.source_rank() != f.target_rank() || f.target_rank() != rep.target_rank_ ||
        !f.has_inverse())
      throw std::invalid_argument("generator images must be automorphisms of one group");
  }
  rep.word_images_ = std::move(images);
  return rep;
}

SurfaceRep make_rep(const std::string& name, int g) {
  if (name == "artin") return SurfaceRep::artin_rep(g);
  if (name == "mirror") return SurfaceRep::mirror_rep(g);
  if (name == "szepietowski") return SurfaceRep::szepietowski_rep(g);
  if (name == "operadic") return SurfaceRep::operadic_rep(g);
  if (name == "symplectic") return SurfaceRep::symplectic_rep(g);
  throw std::invalid_argument("unknown representation: " + name);
}

FreeMap SurfaceRep::word_image(int i, int sign) const {
  if (kind_ != Kind::words) throw std::invalid_argument("not a word representation");
  const FreeMap& f = word_images_.at(i - 1);
  return sign >= 0 ? f : f.inverse();
}

const IntMatrix& SurfaceRep::matrix_image(int i, int sign) const {
  if (kind_ != Kind::matrices) throw std::invalid_argument("not a matrix representation");
  return sign >= 0 ? matrix_images_.at(i - 1) : matrix_inverses_.at(i - 1);
}

const IntMatrix& SurfaceRep::pairing() const {
  if (!pairing_) throw std::invalid_argument("representation has no pairing");
  return *pairing_;
}

FreeMap SurfaceRep::eval_words(const BraidWord& w) const {
  if (kind_ != Kind::words) throw std::invalid_argument("not a word representation");
  if (w.strands() != strands_) throw std::invalid_argument("strand count mismatch in eval");
  FreeMap acc = FreeMap::identity(target_rank_);
  for (int l : w.letters()) {
    const FreeMap& gen = word_images_.at((l < 0 ? -l : l) - 1);
    acc = compose(acc, l > 0 ? gen : gen.inverse());
  }
  return acc;
}

IntMatrix SurfaceRep::eval_matrix(const BraidWord& w) const {
  if (kind_ != Kind::matrices) throw std::invalid_argument("not a matrix representation");
  if (w.strands() != strands_) throw std::invalid_argument("strand count mismatch in eval");
  IntMatrix acc = IntMatrix::identity(target_rank_);
  for (int l : w.letters())
    acc = acc * (l > 0 ? matrix_images_.at(l - 1) : matrix_inverses_.at(-l - 1));
  return acc;
}

bool SurfaceRep::eval_is_identity(const BraidWord& w) const {
  return kind_ == Kind::words ? eval_words(w).is_identity() : eval_matrix(w).is_identity();
}

std::vector<std::string> SurfaceRep::generator_labels() const {
  std::vector<std::string> labels;
  if (name_ == "szepietowski") {
    for (int i = 1; i <= target_rank_; ++i) labels.push_back("c" + std::to_string(i));
  } else if (name_ == "symplectic") {
    for (int i = 1; i <= target_rank_; ++i) labels.push_back("v" + std::to_string(i));
  } else if (name_ == "mirror" || name_ == "operadic") {
    for (int k = 1; k <= target_rank_; ++k) {
      if (k % 2 == 1)
        labels.push_back("a" + std::to_string((k + 1) / 2));
      else
        labels.push_back("b" + std::to_string(k / 2));
    }
  } else {
    for (int i = 1; i <= target_rank_; ++i) labels.push_back("a" + std::to_string(i));
  }
  return labels;
}

namespace {

bool images_equal(const SurfaceRep& rep, const BraidWord& u, const BraidWord& v) {
  if (rep.kind() == SurfaceRep::Kind::words)
    return rep.eval_words(u) == rep.eval_words(v);
  return rep.eval_matrix(u) == rep.eval_matrix(v);
}

}  // namespace

Certificate check_braid_relations(const SurfaceRep& rep) {
  Certificate cert;
  cert.kind = "braid-relations";
  cert.subject = rep.name() + " g=" + std::to_string(rep.strands());
  cert.verdict = true;
  const int n = rep.strands();
  for (int i = 1; i + 1 < n; ++i) {
    BraidWord lhs(n, {i, i + 1, i});
    BraidWord rhs(n, {i + 1, i, i + 1});
    if (!images_equal(rep, lhs, rhs)) {
      cert.verdict = false;
      cert.witness.push_back("braid relation fails at (" + std::to_string(i) + "," +
                             std::to_string(i + 1) + ")");
      return cert;
    }
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      BraidWord lhs(n, {i, j});
      BraidWord rhs(n, {j, i});
      if (!images_equal(rep, lhs, rhs)) {
        cert.verdict = false;
        cert.witness.push_back("commutation fails at (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
        return cert;
      }
    }
  cert.witness.push_back("all generator-pair relations hold for n=" + std::to_string(n));
  for (int i = 1; i < n; ++i) {
    if (rep.kind() == SurfaceRep::Kind::words) {
      if (!rep.word_image(i).verifies_inverse()) {
        cert.verdict = false;
        cert.witness.push_back("stored inverse fails for sigma_" + std::to_string(i));
        return cert;
      }
    } else if (!(rep.matrix_image(i) * rep.matrix_image(i, -1)).is_identity()) {
      cert.verdict = false;
      cert.witness.push_back("stored inverse fails for sigma_" + std::to_string(i));
      return cert;
    }
  }
  return cert;
}

Certificate check_detection_diagram(const SurfaceRep& rep, const std::vector<BraidWord>& words) {
  Certificate cert;
  cert.kind = "diagram-commutes";
  cert.subject = rep.name() + " g=" + std::to_string(rep.strands());
  const int g = rep.strands();
  FreeMap incl = inclusion_map(g);
  FreeMap proj = projection_map(g);
  for (const BraidWord& w : words) {
    FreeMap image = rep.eval_words(w);
    FreeMap around = compose(proj, compose(image, incl));
    FreeMap direct = artin(w);
    if (!(around == direct)) {
      cert.verdict = false;
      cert.witness.push_back("square fails on word: " + w.str());
      return cert;
    }
  }
  cert.verdict = true;
  cert.witness.push_back("square commutes on " + std::to_string(words.size()) + " words");
  return cert;
}

Certificate check_squares_compatibility(const SurfaceRep& rep,
                                        const std::vector<BraidWord>& words) {
  Certificate cert;
  cert.kind = "squares-compatible";
  cert.subject = rep.name() + " g=" + std::to_string(rep.strands());
  const int g = rep.strands();
  // a_j -> c_j^2 rewriting of the Artin images.
  std::vector<GroupWord> doubling;
  for (int j = 1; j <= g; ++j) doubling.push_back(GroupWord(g, {j, j}));
  FreeMap square_embed(g, g, doubling);
  for (const BraidWord& w : words) {
    FreeMap image = rep.eval_words(w);
    FreeMap direct = artin(w);
    for (int i = 1; i <= g; ++i) {
      GroupWord lhs = image.apply(GroupWord(g, {i, i}));
      GroupWord rhs = square_embed.apply(direct.image(i));
      if (!(lhs == rhs)) {
        cert.verdict = false;
        cert.witness.push_back("squares differ on c_" + std::to_string(i) + "^2 for word: " +
                               w.str());
        return cert;
      }
    }
  }
  cert.verdict = true;
  cert.witness.push_back("squares trick holds on " + std::to_string(words.size()) + " words");
  return cert;
}

Certificate check_disjoint_alphabets(int g) {
  if (g < 2) throw std::invalid_argument("check_disjoint_alphabets needs g >= 2");
  Certificate cert;
  cert.kind = "disjoint-alphabets";
  cert.subject = "c_i -> [a_i, b_i], g=" + std::to_string(g);
  const int rank = 2 * g;
  std::vector<std::vector<bool>> used;
  for (int i = 1; i <= g; ++i) {
    GroupWord img(rank, {2 * i - 1, 2 * i, -(2 * i - 1), -(2 * i)});
    if (img.length() != 4) {
      cert.verdict = false;
      cert.witness.push_back("image of c_" + std::to_string(i) + " is not reduced");
      return cert;
    }
    std::vector<bool> seen(rank, false);
    for (Letter l : img.letters()) seen[letter_index(l) - 1] = true;
    for (const auto& other : used)
      for (int k = 0; k < rank; ++k)
        if (seen[k] && other[k]) {
          cert.verdict = false;
          cert.witness.push_back("alphabets overlap at generator " + std::to_string(k + 1));
          return cert;
        }
    used.push_back(std::move(seen));
    cert.witness.push_back("c" + std::to_string(i) + " uses {a" + std::to_string(i) + ", b" +
                           std::to_string(i) + "}");
  }
  cert.verdict = true;
  return cert;
}

Certificate faithfulness_sample(const SurfaceRep& rep, const std::vector<BraidWord>& words) {
  Certificate cert;
  cert.kind = "faithfulness";
  cert.subject = rep.name() + " g=" + std::to_string(rep.strands());
  size_t nontrivial = 0;
  for (const BraidWord& w : words) {
    if (is_trivial(w)) continue;
    ++nontrivial;
    if (rep.eval_is_identity(w)) {
      cert.verdict = false;
      cert.witness.push_back("nontrivial braid maps to identity: " + w.str());
      return cert;
    }
  }
  cert.verdict = true;
  cert.witness.push_back(std::to_string(nontrivial) + " nontrivial words detected");
  return cert;
}

Certificate check_J_equivariance(const SurfaceRep& rep, const FreeMap& iota,
                                 const std::vector<BraidWord>& words) {
  if (!compose(iota, iota).is_identity())
    throw std::invalid_argument("iota is not an involution");
  Certificate cert;
  cert.kind = "J-equivariant";
  cert.subject = rep.name() + " g=" + std::to_string(rep.strands());
  for (const BraidWord& w : words) {
    FreeMap image = rep.eval_words(w);
    if (!(compose(iota, image) == compose(image, iota))) {
      cert.verdict = false;
      cert.witness.push_back("fails to commute with iota on word: " + w.str());
      return cert;
    }
  }
  cert.verdict = true;
  cert.witness.push_back("commutes with iota on " + std::to_string(words.size()) + " words");
  return cert;
}

Certificate check_purity_violation(const RibbonBraid& x, const std::string& subject) {
  Certificate cert;
  cert.kind = "purity-violation";
  cert.subject = subject;
  Permutation p = permutation_of(x.braid);
  cert.verdict = !p.is_identity();
  if (cert.verdict) {
    for (int i = 1; i <= p.degree(); ++i)
      if (p.apply(i) != i) {
        cert.witness.push_back("moves hole " + std::to_string(i) + " to " +
                               std::to_string(p.apply(i)));
        break;
      }
  } else {
    cert.witness.push_back("underlying permutation is the identity");
  }
  return cert;
}

IntMatrix h1_action(const SurfaceRep& rep, const BraidWord& w) {
  if (rep.kind() == SurfaceRep::Kind::matrices) return rep.eval_matrix(w);
  FreeMap f = rep.eval_words(w);
  IntMatrix m(rep.target_rank(), rep.target_rank());
  for (int j = 1; j <= rep.target_rank(); ++j) {
    std::vector<long long> e = f.image(j).exponent_vector();
    for (int i = 0; i < rep.target_rank(); ++i) m.at(i, j - 1) = e[i];
  }
  return m;
}

long long h1_det(const SurfaceRep& rep, const BraidWord& w) { return h1_action(rep, w).det(); }

}  // namespace braidhom
