#pragma once

#include <string>
#include <vector>

#include "braidhom/freegroup.hpp"

namespace braidhom {

// Braid word on a fixed number of strands. Letters are signed indices:
// +i stands for sigma_i, -i for its inverse, 1 <= i < strands. Words are
// stored verbatim (no cancellation on construction).
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<int> letters = {});

  static BraidWord generator(int strands, int index, int sign = 1);
  static BraidWord parse(int strands, const std::string& text);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord operator*(const BraidWord& rhs) const;
  bool operator==(const BraidWord& rhs) const = default;

  std::string str() const;

 private:
  int strands_;
  std::vector<int> letters_;
};

// Removes adjacent sigma_i sigma_i^{-1} pairs until none remain. This is
// free cancellation only, not a braid normal form.
BraidWord braid_cancel(const BraidWord& w);

class Permutation {
 public:
  explicit Permutation(int degree);  // identity
  explicit Permutation(std::vector<int> images);

  static Permutation transposition(int degree, int i);  // (i, i+1)

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int i) const { return images_.at(i - 1); }
  bool is_identity() const;

  // Function composition: (p.compose(q))(i) = p(q(i)).
  Permutation compose(const Permutation& q) const;
  Permutation inverse() const;

  // Coordinate action v_j = w_{pi^{-1}(j)}.
  template <typename T>
  std::vector<T> permute(const std::vector<T>& w) const {
    std::vector<T> v(w.size());
    for (size_t i = 0; i < w.size(); ++i) v[images_[i] - 1] = w[i];
    return v;
  }

  bool operator==(const Permutation& rhs) const = default;

 private:
  std::vector<int> images_;  // images_[i-1] = pi(i), 1-based values
};

// Underlying permutation, a homomorphism with sigma_i -> (i, i+1).
Permutation permutation_of(const BraidWord& w);

// Abelianization B_n -> Z (sum of letter signs).
long long exponent_sum(const BraidWord& w);

// Artin action on the free group F_n:
//   sigma_i: a_i -> a_i a_{i+1} a_i^{-1},  a_{i+1} -> a_i.
// The returned automorphism carries its inverse.
FreeMap artin_generator(int strands, int index, int sign);
FreeMap artin(const BraidWord& w);

// Word-problem oracle through the faithful Artin action, with permutation
// and exponent-sum fast paths.
bool is_trivial(const BraidWord& w);
bool braids_equal(const BraidWord& u, const BraidWord& v);

// Element of the ribbon braid group Z wr B_g: integer twist per strand plus
// a braid. Group law (v, b)(w, d) = (v + b.w, bd), where b acts on twist
// vectors through its underlying permutation.
struct RibbonBraid {
  std::vector<long long> twists;
  BraidWord braid;

  RibbonBraid(std::vector<long long> twists_, BraidWord braid_);
  int strands() const { return braid.strands(); }
};

RibbonBraid ribbon_multiply(const RibbonBraid& x, const RibbonBraid& y);
RibbonBraid ribbon_invert(const RibbonBraid& x);
bool ribbon_equal(const RibbonBraid& x, const RibbonBraid& y);

// Zero-twist section B_g -> Z wr B_g.
RibbonBraid gamma(const BraidWord& w);

// True iff the underlying permutation is the identity. A ribbon braid that
// moves a hole cannot be a power of a Dehn twist.
bool is_pure(const RibbonBraid& x);

// Word for the full twist on m strands, (sigma_1 ... sigma_{m-1})^m, raised
// to the given power, on strands offset+1 .. offset+m of an n-strand braid.
std::vector<int> full_twist_letters(int offset, int m, long long power);

// Cabling action: replaces strand i of the pure ribbon braid `outer` by the
// braid inner[i] running on inner[i].strands() parallel strands. Outer braid
// letters become block crossings (widths tracked positionally), outer twists
// become full twists on their cables, and inner braids are appended on their
// cables. Requires permutation_of(outer.braid) to be the identity.
BraidWord cable(const RibbonBraid& outer, const std::vector<BraidWord>& inner);

// Operadic composite of pure ribbon braids: same braid word as `cable` of
// the underlying braids, with outer twists spread onto the inner coordinates.
RibbonBraid cable_ribbon(const RibbonBraid& outer, const std::vector<RibbonBraid>& inner);

}  // namespace braidhom
