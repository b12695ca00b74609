#pragma once

#include <optional>
#include <string>
#include <vector>

namespace braidhom {

// A letter of a free-group word is a nonzero signed generator index:
// +i stands for the i-th generator, -i for its inverse. Indices are 1-based.
using Letter = int;

inline int letter_index(Letter l) { return l < 0 ? -l : l; }
inline int letter_sign(Letter l) { return l < 0 ? -1 : 1; }

// Freely reduced word in a free group of fixed rank. Words are reduced on
// construction, so equality is plain sequence equality.
class GroupWord {
 public:
  explicit GroupWord(int rank);
  GroupWord(int rank, std::vector<Letter> letters);

  static GroupWord generator(int rank, int index, int sign = 1);
  // Parses space-separated signed indices, e.g. "1 2 -1".
  static GroupWord parse(int rank, const std::string& text);

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }

  GroupWord inverse() const;
  GroupWord operator*(const GroupWord& rhs) const;
  bool operator==(const GroupWord& rhs) const = default;

  // Exponent sum of each generator (image in Z^rank).
  std::vector<long long> exponent_vector() const;

  std::string str() const;

 private:
  struct ReducedTag {};
  GroupWord(int rank, std::vector<Letter> letters, ReducedTag);

  int rank_;
  std::vector<Letter> letters_;

  friend class FreeMap;
};

// Pushes a letter onto an already-reduced buffer, cancelling if possible.
void push_reduced(std::vector<Letter>& buffer, Letter l);

GroupWord free_reduce(int rank, const std::vector<Letter>& letters);

// Homomorphism between free groups, given by the images of the source
// generators. May carry a verified inverse (then it is an automorphism).
class FreeMap {
 public:
  FreeMap(int source_rank, int target_rank, std::vector<GroupWord> images);

  static FreeMap identity(int rank);
  // Verifies that the two image tables compose to the identity both ways
  // and throws std::invalid_argument otherwise.
  static FreeMap automorphism(std::vector<GroupWord> images,
                              std::vector<GroupWord> inverse_images);

  int source_rank() const { return source_rank_; }
  int target_rank() const { return target_rank_; }
  const std::vector<GroupWord>& images() const { return images_; }
  const GroupWord& image(int i) const { return images_.at(i - 1); }

  GroupWord apply(const GroupWord& u) const;

  bool has_inverse() const { return inverse_images_.has_value(); }
  FreeMap inverse() const;
  // Recomputes both composites on generators; true iff both are identities.
  bool verifies_inverse() const;

  bool is_identity() const;
  bool operator==(const FreeMap& rhs) const {
    return source_rank_ == rhs.source_rank_ && target_rank_ == rhs.target_rank_ &&
           images_ == rhs.images_;
  }

 private:
  static FreeMap with_unchecked_inverse(std::vector<GroupWord> images,
                                        std::vector<GroupWord> inverse_images);

  int source_rank_;
  int target_rank_;
  std::vector<GroupWord> images_;
  std::optional<std::vector<GroupWord>> inverse_images_;

  friend FreeMap compose(const FreeMap& f, const FreeMap& g);
  friend class SurfaceRep;
};

// Composition f after g: (f.g)(x) = f(g(x)). Carries an inverse when both
// factors have one.
FreeMap compose(const FreeMap& f, const FreeMap& g);

// The rank-(2g-1) free group on a_1, b_1, a_2, ..., b_{g-1}, a_g has the
// a-generators at odd positions 2i-1 and the b-generators at even positions.
int a_index(int i);
int b_index(int i);

// F_{2g-1} -> F_g: a_i -> a_i, b_i -> identity.
FreeMap projection_map(int g);
// F_g -> F_{2g-1}: a_i -> a_i. projection_map(g) . inclusion_map(g) = id.
FreeMap inclusion_map(int g);

}  // namespace braidhom
