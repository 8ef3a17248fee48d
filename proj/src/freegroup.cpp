#include "vbraid/freegroup.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace vbraid {

namespace {

void checkLetter(const FGen& g, int rank, bool hasQ) {
  if (g.sign != 1 && g.sign != -1)
    throw std::invalid_argument("group letter sign must be +1 or -1");
  if (g.index == 0) {
    if (!hasQ) throw std::invalid_argument("letter q used in a word without q");
  } else if (g.index < 1 || g.index > rank) {
    throw std::invalid_argument("generator index out of rank: x" + std::to_string(g.index));
  }
}

}  // namespace

GroupWord GroupWord::fromLetters(int rank, bool hasQ, const std::vector<FGen>& letters) {
  GroupWord w(rank, hasQ);
  for (const FGen& g : letters) {
    checkLetter(g, rank, hasQ);
    if (!w.letters_.empty() && w.letters_.back().index == g.index &&
        w.letters_.back().sign == -g.sign) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(g);
    }
  }
  return w;
}

GroupWord reduceWord(int rank, bool hasQ, const std::vector<FGen>& letters) {
  return GroupWord::fromLetters(rank, hasQ, letters);
}

GroupWord multiply(const GroupWord& a, const GroupWord& b) {
  if (a.rank() != b.rank() || a.hasQ() != b.hasQ())
    throw std::invalid_argument("multiply: rank mismatch");
  std::vector<FGen> ls = a.letters();
  ls.insert(ls.end(), b.letters().begin(), b.letters().end());
  return GroupWord::fromLetters(a.rank(), a.hasQ(), ls);
}

GroupWord invert(const GroupWord& a) {
  std::vector<FGen> ls;
  ls.reserve(a.length());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it)
    ls.push_back(FGen{it->index, -it->sign});
  return GroupWord::fromLetters(a.rank(), a.hasQ(), ls);
}

GroupWord cosetNormalize(const GroupWord& u, int k) {
  if (k < 1 || k > u.rank())
    throw std::invalid_argument("cosetNormalize: index out of rank");
  std::vector<FGen> ls = u.letters();
  while (!ls.empty() && ls.back().index == k) ls.pop_back();
  return GroupWord::fromLetters(u.rank(), u.hasQ(), ls);
}

GroupWord parseGroupWord(const std::string& text, int rank, bool hasQ) {
  std::istringstream in(text);
  std::string tok;
  std::vector<FGen> ls;
  while (in >> tok) {
    FGen g;
    if (tok == "q") {
      g = FGen{0, +1};
    } else if (tok == "Q") {
      g = FGen{0, -1};
    } else if ((tok[0] == 'x' || tok[0] == 'X') && tok.size() > 1) {
      int idx = 0;
      for (size_t i = 1; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
          throw std::invalid_argument("bad group word token: " + tok);
        idx = idx * 10 + (tok[i] - '0');
      }
      g = FGen{idx, tok[0] == 'x' ? +1 : -1};
    } else {
      throw std::invalid_argument("bad group word token: " + tok);
    }
    ls.push_back(g);
  }
  return GroupWord::fromLetters(rank, hasQ, ls);
}

std::string formatGroupWord(const GroupWord& w) {
  std::string out;
  for (const FGen& g : w.letters()) {
    if (!out.empty()) out += ' ';
    if (g.index == 0)
      out += g.sign > 0 ? "q" : "Q";
    else
      out += (g.sign > 0 ? "x" : "X") + std::to_string(g.index);
  }
  return out;
}

FreeEndo::FreeEndo(int rank, bool hasQ) : rank_(rank), hasQ_(hasQ) {
  images_.resize(rank + 1, GroupWord(rank, hasQ));
  for (int i = 0; i <= rank; ++i) {
    if (i == 0 && !hasQ) continue;
    images_[i] = GroupWord::fromLetters(rank, hasQ, {FGen{i, +1}});
  }
}

const GroupWord& FreeEndo::image(int index) const {
  if (index < 0 || index > rank_ || (index == 0 && !hasQ_))
    throw std::invalid_argument("FreeEndo::image: bad generator index");
  return images_[index];
}

void FreeEndo::setImage(int index, const GroupWord& w) {
  if (index < 0 || index > rank_ || (index == 0 && !hasQ_))
    throw std::invalid_argument("FreeEndo::setImage: bad generator index");
  if (w.rank() != rank_ || w.hasQ() != hasQ_)
    throw std::invalid_argument("FreeEndo::setImage: rank mismatch");
  images_[index] = w;
}

GroupWord FreeEndo::apply(const GroupWord& w) const {
  if (w.rank() != rank_ || w.hasQ() != hasQ_)
    throw std::invalid_argument("FreeEndo::apply: rank mismatch");
  GroupWord out(rank_, hasQ_);
  for (const FGen& g : w.letters()) {
    const GroupWord& im = images_[g.index];
    out = multiply(out, g.sign > 0 ? im : invert(im));
  }
  return out;
}

bool FreeEndo::isIdentity() const {
  for (int i = hasQ_ ? 0 : 1; i <= rank_; ++i) {
    const GroupWord& im = images_[i];
    if (im.length() != 1 || im.letters()[0].index != i || im.letters()[0].sign != 1)
      return false;
  }
  return true;
}

GroupWord applyEndo(const FreeEndo& f, const GroupWord& w) { return f.apply(w); }

FreeEndo composeEndo(const FreeEndo& f, const FreeEndo& g) {
  if (f.rank() != g.rank() || f.hasQ() != g.hasQ())
    throw std::invalid_argument("composeEndo: rank mismatch");
  FreeEndo out(f.rank(), f.hasQ());
  for (int i = f.hasQ() ? 0 : 1; i <= f.rank(); ++i)
    out.setImage(i, f.apply(g.image(i)));
  return out;
}

}  // namespace vbraid
