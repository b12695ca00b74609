#include "braidhom/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidhom {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw std::invalid_argument("braid needs at least one strand");
  for (int l : letters_) {
    int i = l < 0 ? -l : l;
    if (l == 0 || i >= strands_)
      throw std::out_of_range("braid letter out of range for " + std::to_string(strands_) +
                              " strands");
  }
}

BraidWord BraidWord::generator(int strands, int index, int sign) {
  return BraidWord(strands, {sign >= 0 ? index : -index});
}

BraidWord BraidWord::parse(int strands, const std::string& text) {
  // accepts both "1 2 -1" and the JSON array form "[1, 2, -1]"
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == '[' || c == ']' || c == ',') c = ' ';
  std::istringstream in(cleaned);
  std::vector<int> letters;
  long long v;
  while (in >> v) letters.push_back(static_cast<int>(v));
  if (!in.eof()) throw std::invalid_argument("malformed braid word: " + text);
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (strands_ != rhs.strands_) throw std::invalid_argument("strand count mismatch");
  std::vector<int> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(strands_, std::move(out));
}

std::string BraidWord::str() const {
  std::string s;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(letters_[i]);
  }
  return s;
}

BraidWord braid_cancel(const BraidWord& w) {
  std::vector<int> out;
  out.reserve(w.letters().size());
  for (int l : w.letters()) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return BraidWord(w.strands(), std::move(out));
}

Permutation::Permutation(int degree) : images_(degree) {
  if (degree < 0) throw std::invalid_argument("negative permutation degree");
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[v - 1] = true;
  }
}

Permutation Permutation::transposition(int degree, int i) {
  Permutation p(degree);
  if (i < 1 || i + 1 > degree) throw std::out_of_range("transposition out of range");
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (images_[i - 1] != i) return false;
  return true;
}

Permutation Permutation::compose(const Permutation& q) const {
  if (degree() != q.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> out(images_.size());
  for (int i = 1; i <= degree(); ++i) out[i - 1] = apply(q.apply(i));
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (int i = 1; i <= degree(); ++i) out[images_[i - 1] - 1] = i;
  return Permutation(std::move(out));
}

Permutation permutation_of(const BraidWord& w) {
  Permutation acc(w.strands());
  for (int l : w.letters()) acc = acc.compose(Permutation::transposition(w.strands(), l < 0 ? -l : l));
  return acc;
}

long long exponent_sum(const BraidWord& w) {
  long long s = 0;
  for (int l : w.letters()) s += l < 0 ? -1 : 1;
  return s;
}

FreeMap artin_generator(int strands, int index, int sign) {
  if (index < 1 || index >= strands) throw std::out_of_range("generator index out of range");
  int n = strands;
  std::vector<GroupWord> fwd, bwd;
  fwd.reserve(n);
  bwd.reserve(n);
  for (int j = 1; j <= n; ++j) {
    if (j == index) {
      fwd.push_back(GroupWord(n, {j, j + 1, -j}));
      bwd.push_back(GroupWord::generator(n, j + 1));
    } else if (j == index + 1) {
      fwd.push_back(GroupWord::generator(n, j - 1));
      bwd.push_back(GroupWord(n, {-j, j - 1, j}));
    } else {
      fwd.push_back(GroupWord::generator(n, j));
      bwd.push_back(GroupWord::generator(n, j));
    }
  }
  if (sign >= 0) return FreeMap::automorphism(std::move(fwd), std::move(bwd));
  return FreeMap::automorphism(std::move(bwd), std::move(fwd));
}

FreeMap artin(const BraidWord& w) {
  FreeMap acc = FreeMap::identity(w.strands());
  for (int l : w.letters())
    acc = compose(acc, artin_generator(w.strands(), l < 0 ? -l : l, l < 0 ? -1 : 1));
  return acc;
}

bool is_trivial(const BraidWord& w) {
  BraidWord r = braid_cancel(w);
  if (r.empty()) return true;
  if (exponent_sum(r) != 0) return false;
  if (!permutation_of(r).is_identity()) return false;
  return artin(r).is_identity();
}

bool braids_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw std::invalid_argument("strand count mismatch in braid comparison");
  return is_trivial(u * v.inverse());
}

RibbonBraid::RibbonBraid(std::vector<long long> twists_, BraidWord braid_)
    : twists(std::move(twists_)), braid(std::move(braid_)) {
  if (static_cast<int>(twists.size()) != braid.strands())
    throw std::invalid_argument("twist vector length must match strand count");
}

RibbonBraid ribbon_multiply(const RibbonBraid& x, const RibbonBraid& y) {
  if (x.strands() != y.strands()) throw std::invalid_argument("strand count mismatch");
  std::vector<long long> t = permutation_of(x.braid).permute(y.twists);
  for (size_t i = 0; i < t.size(); ++i) t[i] += x.twists[i];
  return RibbonBraid(std::move(t), x.braid * y.braid);
}

RibbonBraid ribbon_invert(const RibbonBraid& x) {
  std::vector<long long> t = permutation_of(x.braid).inverse().permute(x.twists);
  for (long long& v : t) v = -v;
  return RibbonBraid(std::move(t), x.braid.inverse());
}

bool ribbon_equal(const RibbonBraid& x, const RibbonBraid& y) {
  return x.twists == y.twists && braids_equal(x.braid, y.braid);
}

RibbonBraid gamma(const BraidWord& w) {
  return RibbonBraid(std::vector<long long>(w.strands(), 0), w);
}

bool is_pure(const RibbonBraid& x) { return permutation_of(x.braid).is_identity(); }

std::vector<int> full_twist_letters(int offset, int m, long long power) {
  std::vector<int> round;
  for (int i = 1; i < m; ++i) round.push_back(offset + i);
  std::vector<int> twist;
  for (int rep = 0; rep < m; ++rep) twist.insert(twist.end(), round.begin(), round.end());
  std::vector<int> out;
  if (power >= 0) {
    for (long long rep = 0; rep < power; ++rep) out.insert(out.end(), twist.begin(), twist.end());
  } else {
    std::vector<int> inv(twist.rbegin(), twist.rend());
    for (int& l : inv) l = -l;
    for (long long rep = 0; rep < -power; ++rep) out.insert(out.end(), inv.begin(), inv.end());
  }
  return out;
}

namespace {

// Positive crossing carrying a block of width a over the adjacent block of
// width b, on strands offset+1 .. offset+a+b.
std::vector<int> block_cross(int offset, int a, int b) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(a) * b);
  for (int r = 0; r < a; ++r)
    for (int c = 0; c < b; ++c) out.push_back(offset + a - r + c);
  return out;
}

}  // namespace

BraidWord cable(const RibbonBraid& outer, const std::vector<BraidWord>& inner) {
  int k = outer.strands();
  if (static_cast<int>(inner.size()) != k)
    throw std::invalid_argument("cable needs one inner braid per outer strand");
  if (!is_pure(outer))
    throw std::invalid_argument("cable outer braid must be pure");

  std::vector<int> widths;
  widths.reserve(k);
  int total = 0;
  for (const BraidWord& b : inner) {
    widths.push_back(b.strands());
    total += b.strands();
  }

  std::vector<int> cur = widths;
  std::vector<int> letters;
  for (int l : outer.braid.letters()) {
    int i = l < 0 ? -l : l;
    int offset = 0;
    for (int j = 0; j + 1 < i; ++j) offset += cur[j];
    int a = cur[i - 1], b = cur[i];
    if (l > 0) {
      std::vector<int> cross = block_cross(offset, a, b);
      letters.insert(letters.end(), cross.begin(), cross.end());
    } else {
      std::vector<int> cross = block_cross(offset, b, a);
      for (auto it = cross.rbegin(); it != cross.rend(); ++it) letters.push_back(-*it);
    }
    std::swap(cur[i - 1], cur[i]);
  }
  if (cur != widths) throw std::logic_error("cable width bookkeeping mismatch");

  int offset = 0;
  for (int i = 0; i < k; ++i) {
    std::vector<int> twist = full_twist_letters(offset, widths[i], outer.twists[i]);
    letters.insert(letters.end(), twist.begin(), twist.end());
    offset += widths[i];
  }
  offset = 0;
  for (int i = 0; i < k; ++i) {
    for (int l : inner[i].letters()) letters.push_back(l > 0 ? l + offset : l - offset);
    offset += widths[i];
  }
  return BraidWord(total, std::move(letters));
}

RibbonBraid cable_ribbon(const RibbonBraid& outer, const std::vector<RibbonBraid>& inner) {
  std::vector<BraidWord> inner_braids;
  inner_braids.reserve(inner.size());
  std::vector<long long> twists;
  for (size_t i = 0; i < inner.size(); ++i) {
    inner_braids.push_back(inner[i].braid);
    for (long long t : inner[i].twists) twists.push_back(t + outer.twists[i]);
  }
  BraidWord braid = cable(outer, inner_braids);
  return RibbonBraid(std::move(twists), std::move(braid));
}

}  // namespace braidhom
