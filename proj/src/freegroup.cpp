#include "braidhom/freegroup.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace braidhom {

namespace {

void check_rank(int rank) {
  if (rank < 0) throw std::invalid_argument("free group rank must be non-negative");
}

void check_letters(int rank, const std::vector<Letter>& letters) {
  for (Letter l : letters) {
    if (l == 0 || letter_index(l) > rank)
      throw std::out_of_range("letter index out of range for rank " + std::to_string(rank));
  }
}

}  // namespace

void push_reduced(std::vector<Letter>& buffer, Letter l) {
  if (!buffer.empty() && buffer.back() == -l)
    buffer.pop_back();
  else
    buffer.push_back(l);
}

GroupWord::GroupWord(int rank) : rank_(rank) { check_rank(rank); }

GroupWord::GroupWord(int rank, std::vector<Letter> letters) : rank_(rank) {
  check_rank(rank);
  check_letters(rank, letters);
  letters_.reserve(letters.size());
  for (Letter l : letters) push_reduced(letters_, l);
}

GroupWord::GroupWord(int rank, std::vector<Letter> letters, ReducedTag)
    : rank_(rank), letters_(std::move(letters)) {}

GroupWord GroupWord::generator(int rank, int index, int sign) {
  if (index < 1 || index > rank) throw std::out_of_range("generator index out of range");
  return GroupWord(rank, {sign >= 0 ? index : -index});
}

GroupWord GroupWord::parse(int rank, const std::string& text) {
  // accepts both "1 2 -1" and the JSON array form "[1, 2, -1]"
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == '[' || c == ']' || c == ',') c = ' ';
  std::istringstream in(cleaned);
  std::vector<Letter> letters;
  long long v;
  while (in >> v) letters.push_back(static_cast<Letter>(v));
  if (!in.eof()) throw std::invalid_argument("malformed word: " + text);
  return GroupWord(rank, std::move(letters));
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l = -l;
  return GroupWord(rank_, std::move(out), ReducedTag{});
}

GroupWord GroupWord::operator*(const GroupWord& rhs) const {
  if (rank_ != rhs.rank_) throw std::invalid_argument("rank mismatch in word multiplication");
  std::vector<Letter> out = letters_;
  out.reserve(out.size() + rhs.letters_.size());
  for (Letter l : rhs.letters_) push_reduced(out, l);
  return GroupWord(rank_, std::move(out), ReducedTag{});
}

std::vector<long long> GroupWord::exponent_vector() const {
  std::vector<long long> e(rank_, 0);
  for (Letter l : letters_) e[letter_index(l) - 1] += letter_sign(l);
  return e;
}

std::string GroupWord::str() const {
  std::string s;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(letters_[i]);
  }
  return s;
}

GroupWord free_reduce(int rank, const std::vector<Letter>& letters) {
  return GroupWord(rank, letters);
}

FreeMap::FreeMap(int source_rank, int target_rank, std::vector<GroupWord> images)
    : source_rank_(source_rank), target_rank_(target_rank), images_(std::move(images)) {
  if (source_rank_ < 0 || target_rank_ < 0)
    throw std::invalid_argument("free map ranks must be non-negative");
  if (static_cast<int>(images_.size()) != source_rank_)
    throw std::invalid_argument("free map needs one image per source generator");
  for (const GroupWord& w : images_)
    if (w.rank() != target_rank_)
      throw std::invalid_argument("free map image has wrong rank");
}

FreeMap FreeMap::identity(int rank) {
  std::vector<GroupWord> images;
  images.reserve(rank);
  for (int i = 1; i <= rank; ++i) images.push_back(GroupWord::generator(rank, i));
  FreeMap f(rank, rank, images);
  f.inverse_images_ = std::move(images);
  return f;
}

FreeMap FreeMap::with_unchecked_inverse(std::vector<GroupWord> images,
                                        std::vector<GroupWord> inverse_images) {
  int rank = static_cast<int>(images.size());
  FreeMap f(rank, rank, std::move(images));
  f.inverse_images_ = std::move(inverse_images);
  return f;
}

FreeMap FreeMap::automorphism(std::vector<GroupWord> images,
                              std::vector<GroupWord> inverse_images) {
  if (images.size() != inverse_images.size())
    throw std::invalid_argument("automorphism needs matching image tables");
  FreeMap f = with_unchecked_inverse(std::move(images), std::move(inverse_images));
  if (!f.verifies_inverse())
    throw std::invalid_argument("claimed inverse does not compose to the identity");
  return f;
}

bool FreeMap::verifies_inverse() const {
  if (!inverse_images_ || source_rank_ != target_rank_) return false;
  FreeMap inv(target_rank_, source_rank_, *inverse_images_);
  for (int i = 1; i <= source_rank_; ++i) {
    if (!(apply(inv.image(i)) == GroupWord::generator(target_rank_, i))) return false;
    if (!(inv.apply(image(i)) == GroupWord::generator(source_rank_, i))) return false;
  }
  return true;
}

GroupWord FreeMap::apply(const GroupWord& u) const {
  if (u.rank() != source_rank_) throw std::invalid_argument("rank mismatch in apply");
  std::vector<Letter> out;
  for (Letter l : u.letters()) {
    const std::vector<Letter>& img = images_[letter_index(l) - 1].letters();
    if (l > 0) {
      for (Letter x : img) push_reduced(out, x);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) push_reduced(out, -*it);
    }
  }
  return GroupWord(target_rank_, std::move(out), GroupWord::ReducedTag{});
}

FreeMap FreeMap::inverse() const {
  if (!inverse_images_) throw std::invalid_argument("free map has no stored inverse");
  FreeMap inv(target_rank_, source_rank_, *inverse_images_);
  inv.inverse_images_ = images_;
  return inv;
}

bool FreeMap::is_identity() const {
  if (source_rank_ != target_rank_) return false;
  for (int i = 1; i <= source_rank_; ++i) {
    const GroupWord& w = images_[i - 1];
    if (w.length() != 1 || w.letters()[0] != i) return false;
  }
  return true;
}

FreeMap compose(const FreeMap& f, const FreeMap& g) {
  if (g.target_rank() != f.source_rank())
    throw std::invalid_argument("rank mismatch in composition");
  std::vector<GroupWord> images;
  images.reserve(g.source_rank());
  for (const GroupWord& w : g.images()) images.push_back(f.apply(w));
  FreeMap h(g.source_rank(), f.target_rank(), std::move(images));
  if (f.inverse_images_ && g.inverse_images_) {
    FreeMap g_inv = g.inverse();
    std::vector<GroupWord> inv;
    inv.reserve(f.target_rank());
    for (const GroupWord& w : *f.inverse_images_) inv.push_back(g_inv.apply(w));
    h.inverse_images_ = std::move(inv);
  }
  return h;
}

int a_index(int i) { return 2 * i - 1; }
int b_index(int i) { return 2 * i; }

FreeMap projection_map(int g) {
  if (g < 2) throw std::invalid_argument("projection_map needs g >= 2");
  int source = 2 * g - 1;
  std::vector<GroupWord> images;
  images.reserve(source);
  for (int k = 1; k <= source; ++k) {
    if (k % 2 == 1)
      images.push_back(GroupWord::generator(g, (k + 1) / 2));
    else
      images.push_back(GroupWord(g));
  }
  return FreeMap(source, g, std::move(images));
}

FreeMap inclusion_map(int g) {
  if (g < 2) throw std::invalid_argument("inclusion_map needs g >= 2");
  int target = 2 * g - 1;
  std::vector<GroupWord> images;
  images.reserve(g);
  for (int i = 1; i <= g; ++i) images.push_back(GroupWord::generator(target, a_index(i)));
  return FreeMap(g, target, std::move(images));
}

}  // namespace braidhom
