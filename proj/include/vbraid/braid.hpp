#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vbraid {

enum class BKind { Sigma, Tau };

// Virtual braid group generator. Indices are 1-based (1..n-1). Tau carries
// no sign: it is an involution.
struct BGen {
  BKind kind = BKind::Sigma;
  int index = 1;
  int sign = +1;  // always +1 for Tau

  static BGen sigma(int i, int s = +1) { return BGen{BKind::Sigma, i, s}; }
  static BGen tau(int i) { return BGen{BKind::Tau, i, +1}; }
  BGen inverse() const { return kind == BKind::Tau ? *this : BGen{kind, index, -sign}; }

  friend bool operator==(const BGen& a, const BGen& b) {
    return a.kind == b.kind && a.index == b.index && a.sign == b.sign;
  }
};

// A word in the free monoid on sigma_i^{+-1}, tau_i. No group reduction is
// implied; freeCancel performs the obvious cancellations explicitly.
struct BraidWord {
  int strands = 1;
  std::vector<BGen> gens;

  BraidWord() = default;
  BraidWord(int n, std::vector<BGen> gs);  // validates indices

  size_t length() const { return gens.size(); }

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands == b.strands && a.gens == b.gens;
  }
};

// Tokens: s<i> (sigma_i), S<i> (sigma_i inverse), t<i> (tau_i); parenthesized
// groups may carry a repetition suffix, e.g. "(t3 s2 t1 S2)^3". T<i> is
// rejected since tau needs no inverse.
BraidWord parseBraidWord(const std::string& text, int strands);
std::string formatBraidWord(const BraidWord& w);

BraidWord invertWord(const BraidWord& w);
// Deletes adjacent sigma^{+1}sigma^{-1}, sigma^{-1}sigma^{+1} and tau tau
// pairs until none remain.
BraidWord freeCancel(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);

// A permutation of {0..n-1}; img[i] is the image of i.
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> images) : img(std::move(images)) {}
  static Perm identity(int n);

  int size() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i]; }
  bool isIdentity() const;
  // (this o other)(i) = this(other(i))
  Perm compose(const Perm& other) const;
  Perm inverse() const;
  static Perm transposition(int n, int i);  // swaps i, i+1 (0-based)

  friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
};

// The strand permutation under the convention that a word g1 g2 ... gk acts
// on the left as g1.(g2.(...(gk.D))); each generator contributes the
// transposition (i, i+1) and underlyingPerm(uv) =
// underlyingPerm(u) o underlyingPerm(v).
Perm underlyingPerm(const BraidWord& w);

// Factorization of p into adjacent transpositions, in bubble-sort order:
// underlyingPerm(permWord(p)) == p.
BraidWord permWord(const Perm& p, int strands);

// One pseudo-random defining-relation replacement or inverse-pair
// insertion/deletion; the result is equal to w in VB_n. Deterministic in
// (w, seed); inserts an inverse pair when nothing else applies.
BraidWord relationRewrite(const BraidWord& w, std::uint64_t seed);

// Normal form for VB_2 (free product of <sigma_1> and the order-2 <tau_1>):
// the alternating sigma-exponent list e0 t e1 t ... t em with nonzero
// interior exponents. Two n=2 words are equal in VB_2 iff forms match.
std::vector<long long> vb2NormalForm(const BraidWord& w);
std::string formatVb2(const std::vector<long long>& form);

}  // namespace vbraid
