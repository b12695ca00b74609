#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidhom/braid.hpp"
#include "braidhom/freegroup.hpp"
#include "braidhom/intmatrix.hpp"

namespace braidhom {

// Outcome of a checkable statement about a representation, with enough
// witness text to re-verify or to pin down a falsification.
struct Certificate {
  std::string kind;
  std::string subject;
  bool verdict = false;
  std::vector<std::string> witness;
};

// A braid-group representation by free-group automorphisms or by integer
// matrices: one generator image per sigma_i, inverses stored alongside.
class SurfaceRep {
 public:
  enum class Kind { words, matrices };

  // Artin action on F_n, packaged as a representation.
  static SurfaceRep artin_rep(int n);

  // Doubled-disk action on F_{2g-1} = <a_1, b_1, ..., b_{g-1}, a_g>:
  //   sigma_i: a_i -> a_i a_{i+1} a_i^-1, a_{i+1} -> a_i,
  //            b_{i-1} -> b_{i-1} a_i b_i a_i^-1,
  //            b_i -> a_i b_i^-1 a_i^-1,
  //            b_{i+1} -> b_i b_{i+1}.
  static SurfaceRep mirror_rep(int g);

  // Crosscap-permuting action on F_g = <c_1, ..., c_g>:
  //   sigma_i: c_i -> c_i^2 c_{i+1} c_i^-2, c_{i+1} -> c_i.
  static SurfaceRep szepietowski_rep(int g);

  // Torus-block action on F_{2g} = <a_1, b_1, ..., a_g, b_g> with
  // commutators k_i = a_i b_i a_i^-1 b_i^-1 as conjugators:
  //   sigma_i: a_i -> k_i a_{i+1} k_i^-1, b_i -> k_i b_{i+1} k_i^-1,
  //            a_{i+1} -> a_i, b_{i+1} -> b_i.
  static SurfaceRep operadic_rep(int g);

  // Transvections on the chain lattice Z^{n-1} with pairing
  // <v_i, v_{i+1}> = 1: sigma_i -> (x -> x + <x, v_i> v_i).
  static SurfaceRep symplectic_rep(int n);

  // Unvalidated word-image table; used for negative controls in tests.
  static SurfaceRep from_word_images(std::string name, int strands,
                                     std::vector<FreeMap> images);

  const std::string& name() const { return name_; }
  Kind kind() const { return kind_; }
  int strands() const { return strands_; }
  int target_rank() const { return target_rank_; }

  FreeMap word_image(int i, int sign = 1) const;
  const IntMatrix& matrix_image(int i, int sign = 1) const;
  const IntMatrix& pairing() const;

  FreeMap eval_words(const BraidWord& w) const;
  IntMatrix eval_matrix(const BraidWord& w) const;
  bool eval_is_identity(const BraidWord& w) const;

  // Names of the target generators ("a1", "b1", ... / "c1", ... / "v1", ...).
  std::vector<std::string> generator_labels() const;

 private:
  SurfaceRep() = default;

  std::string name_;
  Kind kind_ = Kind::words;
  int strands_ = 0;
  int target_rank_ = 0;
  std::vector<FreeMap> word_images_;        // index i-1 for sigma_i
  std::vector<IntMatrix> matrix_images_;
  std::vector<IntMatrix> matrix_inverses_;
  std::optional<IntMatrix> pairing_;
};

// Builds a representation by name: artin, mirror, szepietowski, operadic,
// symplectic.
SurfaceRep make_rep(const std::string& name, int g);

// Both braid relation families on generator images, by exact word or matrix
// equality. A failing pair is reported in the witness.
Certificate check_braid_relations(const SurfaceRep& rep);

// For the doubled-disk representation: projecting the action back to the
// a-alphabet must reproduce the Artin action, word by word.
Certificate check_detection_diagram(const SurfaceRep& rep, const std::vector<BraidWord>& words);

// For the crosscap representation: on squares c_i^2 the action must agree
// with the Artin action rewritten through a_i -> c_i^2.
Certificate check_squares_compatibility(const SurfaceRep& rep,
                                        const std::vector<BraidWord>& words);

// The inclusion F_g -> F_{2g} sending c_i to a_i b_i a_i^-1 b_i^-1 lands in
// pairwise disjoint sub-alphabets, so it is injective.
Certificate check_disjoint_alphabets(int g);

// For every word that the Artin oracle reports nontrivial, the evaluated
// image must differ from the identity.
Certificate faithfulness_sample(const SurfaceRep& rep, const std::vector<BraidWord>& words);

// Whether the evaluated action commutes with the involution iota on each of
// the given words. iota must be an involution.
Certificate check_J_equivariance(const SurfaceRep& rep, const FreeMap& iota,
                                 const std::vector<BraidWord>& words);

// Purity certificate: a ribbon braid with non-identity permutation moves a
// hole, hence is no power of a Dehn twist.
Certificate check_purity_violation(const RibbonBraid& x, const std::string& subject);

// Abelianized action on Z^{target_rank} (columns = images of generators).
IntMatrix h1_action(const SurfaceRep& rep, const BraidWord& w);
long long h1_det(const SurfaceRep& rep, const BraidWord& w);

}  // namespace braidhom
