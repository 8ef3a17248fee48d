#pragma once

#include <string>
#include <vector>

namespace vbraid {

// One letter of a free group word. Index 0 denotes the extra generator q
// (only legal in words that declare hasQ); indices 1..rank are x_1..x_rank.
struct FGen {
  int index = 1;
  int sign = +1;  // +1 or -1

  friend bool operator==(const FGen& a, const FGen& b) {
    return a.index == b.index && a.sign == b.sign;
  }
};

// A freely reduced word in F_rank (optionally extended by q). Words are
// reduced on construction and stay reduced; all operations return reduced
// values.
class GroupWord {
 public:
  GroupWord() = default;
  GroupWord(int rank, bool hasQ) : rank_(rank), hasQ_(hasQ) {}

  // Reduces the letter sequence. Throws std::invalid_argument if a letter
  // references a generator outside the declared rank.
  static GroupWord fromLetters(int rank, bool hasQ, const std::vector<FGen>& letters);

  int rank() const { return rank_; }
  bool hasQ() const { return hasQ_; }
  const std::vector<FGen>& letters() const { return letters_; }
  bool isIdentity() const { return letters_.empty(); }
  size_t length() const { return letters_.size(); }

  friend bool operator==(const GroupWord& a, const GroupWord& b) {
    return a.rank_ == b.rank_ && a.hasQ_ == b.hasQ_ && a.letters_ == b.letters_;
  }
  friend bool operator!=(const GroupWord& a, const GroupWord& b) { return !(a == b); }

 private:
  int rank_ = 0;
  bool hasQ_ = false;
  std::vector<FGen> letters_;  // freely reduced
};

GroupWord reduceWord(int rank, bool hasQ, const std::vector<FGen>& letters);
GroupWord multiply(const GroupWord& a, const GroupWord& b);
GroupWord invert(const GroupWord& a);

// Strips trailing x_k^{+-1} letters: the canonical representative of the
// right coset U<x_k>.
GroupWord cosetNormalize(const GroupWord& u, int k);

// Textual syntax: whitespace-separated letters `x3`, `X3` (inverse), `q`,
// `Q` (inverse). The empty string is the identity.
GroupWord parseGroupWord(const std::string& text, int rank, bool hasQ);
std::string formatGroupWord(const GroupWord& w);

// An endomorphism of the free group given by generator images. When it
// represents one of the braid representations it is invertible, but that is
// not checked here.
class FreeEndo {
 public:
  FreeEndo() = default;
  FreeEndo(int rank, bool hasQ);  // identity

  static FreeEndo identity(int rank, bool hasQ) { return FreeEndo(rank, hasQ); }

  int rank() const { return rank_; }
  bool hasQ() const { return hasQ_; }

  // index 0 = q (requires hasQ), 1..rank = x_i.
  const GroupWord& image(int index) const;
  void setImage(int index, const GroupWord& w);

  GroupWord apply(const GroupWord& w) const;
  bool isIdentity() const;

  friend bool operator==(const FreeEndo& a, const FreeEndo& b) {
    return a.rank_ == b.rank_ && a.hasQ_ == b.hasQ_ && a.images_ == b.images_;
  }
  friend bool operator!=(const FreeEndo& a, const FreeEndo& b) { return !(a == b); }

 private:
  int rank_ = 0;
  bool hasQ_ = false;
  std::vector<GroupWord> images_;  // images_[0] = q image (identity word if !hasQ)
};

GroupWord applyEndo(const FreeEndo& f, const GroupWord& w);
// (f∘g)(x) = f(g(x))
FreeEndo composeEndo(const FreeEndo& f, const FreeEndo& g);

}  // namespace vbraid
