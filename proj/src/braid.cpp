#include "vbraid/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace vbraid {

namespace {

void checkGen(const BGen& g, int strands) {
  if (g.index < 1 || g.index > strands - 1)
    throw std::invalid_argument("generator index out of range for " +
                                std::to_string(strands) + " strands");
  if (g.kind == BKind::Tau && g.sign != +1)
    throw std::invalid_argument("tau carries no sign");
  if (g.sign != 1 && g.sign != -1) throw std::invalid_argument("bad sign");
}

}  // namespace

BraidWord::BraidWord(int n, std::vector<BGen> gs) : strands(n), gens(std::move(gs)) {
  if (n < 1) throw std::invalid_argument("strand count must be >= 1");
  for (const BGen& g : gens) checkGen(g, n);
}

BraidWord parseBraidWord(const std::string& text, int strands) {
  std::vector<BGen> out;
  size_t i = 0;
  const size_t N = text.size();

  auto skipWs = [&] { while (i < N && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto parseInt = [&]() -> int {
    if (i >= N || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("expected an index in braid word at offset " + std::to_string(i));
    int v = 0;
    while (i < N && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    return v;
  };

  // Recursive descent over tokens and (...)^k groups.
  std::vector<std::vector<BGen>> stack;
  stack.emplace_back();
  skipWs();
  while (i < N) {
    char c = text[i];
    if (c == '(') {
      ++i;
      stack.emplace_back();
    } else if (c == ')') {
      if (stack.size() < 2) throw std::invalid_argument("unbalanced ')' in braid word");
      ++i;
      long long rep = 1;
      if (i < N && text[i] == '^') {
        ++i;
        bool neg = false;
        if (i < N && text[i] == '-') { neg = true; ++i; }
        rep = parseInt();
        if (neg) rep = -rep;
      }
      std::vector<BGen> group = std::move(stack.back());
      stack.pop_back();
      if (rep < 0) {
        std::reverse(group.begin(), group.end());
        for (BGen& g : group) g = g.inverse();
        rep = -rep;
      }
      for (long long r = 0; r < rep; ++r)
        stack.back().insert(stack.back().end(), group.begin(), group.end());
    } else if (c == 's' || c == 'S' || c == 't') {
      ++i;
      int idx = parseInt();
      BGen g = c == 't' ? BGen::tau(idx) : BGen::sigma(idx, c == 's' ? +1 : -1);
      checkGen(g, strands);
      stack.back().push_back(g);
    } else if (c == 'T') {
      throw std::invalid_argument("tau needs no inverse: write t" +
                                  std::string(1, i + 1 < N ? text[i + 1] : '?'));
    } else {
      throw std::invalid_argument(std::string("unknown token starting with '") + c +
                                  "' in braid word");
    }
    skipWs();
  }
  if (stack.size() != 1) throw std::invalid_argument("unbalanced '(' in braid word");
  return BraidWord(strands, std::move(stack.back()));
}

std::string formatBraidWord(const BraidWord& w) {
  std::string out;
  for (const BGen& g : w.gens) {
    if (!out.empty()) out += ' ';
    char c = g.kind == BKind::Tau ? 't' : (g.sign > 0 ? 's' : 'S');
    out += c;
    out += std::to_string(g.index);
  }
  return out;
}

BraidWord invertWord(const BraidWord& w) {
  std::vector<BGen> gs(w.gens.rbegin(), w.gens.rend());
  for (BGen& g : gs) g = g.inverse();
  return BraidWord(w.strands, std::move(gs));
}

BraidWord freeCancel(const BraidWord& w) {
  std::vector<BGen> out;
  for (const BGen& g : w.gens) {
    if (!out.empty()) {
      const BGen& p = out.back();
      bool cancels = p.kind == g.kind && p.index == g.index &&
                     (g.kind == BKind::Tau || p.sign == -g.sign);
      if (cancels) {
        out.pop_back();
        continue;
      }
    }
    out.push_back(g);
  }
  return BraidWord(w.strands, std::move(out));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("concat: strand mismatch");
  std::vector<BGen> gs = a.gens;
  gs.insert(gs.end(), b.gens.begin(), b.gens.end());
  return BraidWord(a.strands, std::move(gs));
}

Perm Perm::identity(int n) {
  Perm p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

bool Perm::isIdentity() const {
  for (int i = 0; i < size(); ++i)
    if (img[i] != i) return false;
  return true;
}

Perm Perm::compose(const Perm& other) const {
  if (size() != other.size()) throw std::invalid_argument("Perm::compose: size mismatch");
  Perm out;
  out.img.resize(size());
  for (int i = 0; i < size(); ++i) out.img[i] = img[other.img[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.img.resize(size());
  for (int i = 0; i < size(); ++i) out.img[img[i]] = i;
  return out;
}

Perm Perm::transposition(int n, int i) {
  Perm p = identity(n);
  std::swap(p.img[i], p.img[i + 1]);
  return p;
}

Perm underlyingPerm(const BraidWord& w) {
  Perm acc = Perm::identity(w.strands);
  for (const BGen& g : w.gens)
    acc = acc.compose(Perm::transposition(w.strands, g.index - 1));
  return acc;
}

BraidWord permWord(const Perm& p, int strands) {
  // Bubble-sort the image list with positional swaps. Swapping entries
  // j, j+1 of the list realizes p <- p o t_j, so after swaps s1..sm we have
  // p o t_{s1} o ... o t_{sm} = id, i.e. p = t_{sm} o ... o t_{s1}, and the
  // word reads the swaps in reverse.
  std::vector<int> a = p.img;
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j + 1 < static_cast<int>(a.size()); ++j) {
      if (a[j] > a[j + 1]) {
        std::swap(a[j], a[j + 1]);
        swaps.push_back(j);
        changed = true;
      }
    }
  }
  std::vector<BGen> gs;
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it)
    gs.push_back(BGen::tau(*it + 1));
  return BraidWord(strands, std::move(gs));
}

namespace {

struct Rewrite {
  size_t pos;
  size_t eat;                // how many letters the pattern consumes
  std::vector<BGen> put;     // replacement
};

bool isSigma(const BGen& g) { return g.kind == BKind::Sigma; }
bool isTau(const BGen& g) { return g.kind == BKind::Tau; }

}  // namespace

BraidWord relationRewrite(const BraidWord& w, std::uint64_t seed) {
  const auto& g = w.gens;
  const int n = w.strands;
  std::vector<Rewrite> cands;

  for (size_t p = 0; p < g.size(); ++p) {
    // far commutation (any kinds, any signs)
    if (p + 1 < g.size() && std::abs(g[p].index - g[p + 1].index) > 1)
      cands.push_back({p, 2, {g[p + 1], g[p]}});
    // tau tau deletion
    if (p + 1 < g.size() && isTau(g[p]) && g[p + 1] == g[p]) cands.push_back({p, 2, {}});
    // sigma sigma^{-1} deletion
    if (p + 1 < g.size() && isSigma(g[p]) && isSigma(g[p + 1]) &&
        g[p].index == g[p + 1].index && g[p].sign == -g[p + 1].sign)
      cands.push_back({p, 2, {}});
    if (p + 2 < g.size()) {
      const BGen &a = g[p], &b = g[p + 1], &c = g[p + 2];
      // braid relation, all sigma, common sign
      if (isSigma(a) && isSigma(b) && isSigma(c) && a.sign == b.sign && b.sign == c.sign &&
          a.index == c.index && std::abs(a.index - b.index) == 1)
        cands.push_back({p, 3, {b, a, b}});
      // tau braid relation
      if (isTau(a) && isTau(b) && isTau(c) && a.index == c.index &&
          std::abs(a.index - b.index) == 1)
        cands.push_back({p, 3, {b, a, b}});
      // mixed relation t_{i+1} s_i^e t_{i+1} = t_i s_{i+1}^e t_i
      if (isTau(a) && isSigma(b) && isTau(c) && a.index == c.index) {
        if (a.index == b.index + 1)
          cands.push_back({p, 3,
                           {BGen::tau(b.index), BGen::sigma(b.index + 1, b.sign),
                            BGen::tau(b.index)}});
        if (a.index + 1 == b.index && b.index <= n - 1)
          cands.push_back({p, 3,
                           {BGen::tau(a.index + 1), BGen::sigma(a.index, b.sign),
                            BGen::tau(a.index + 1)}});
      }
    }
  }

  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (w.gens.size() + 1)));
  // insertions are always available (when n >= 2); mix them in
  size_t nInsertSites = g.size() + 1;
  size_t nInsertKinds = n >= 2 ? static_cast<size_t>(3 * (n - 1)) : 0;  // tt, sS, Ss per index
  size_t total = cands.size() + nInsertSites * nInsertKinds;
  if (total == 0) return w;

  size_t pick = rng() % total;
  std::vector<BGen> out;
  if (pick < cands.size()) {
    const Rewrite& r = cands[pick];
    out.assign(g.begin(), g.begin() + r.pos);
    out.insert(out.end(), r.put.begin(), r.put.end());
    out.insert(out.end(), g.begin() + r.pos + r.eat, g.end());
  } else {
    pick -= cands.size();
    size_t site = pick % nInsertSites;
    size_t kind = pick / nInsertSites;
    int idx = static_cast<int>(kind / 3) + 1;
    int variant = static_cast<int>(kind % 3);
    std::vector<BGen> ins;
    if (variant == 0)
      ins = {BGen::tau(idx), BGen::tau(idx)};
    else if (variant == 1)
      ins = {BGen::sigma(idx, +1), BGen::sigma(idx, -1)};
    else
      ins = {BGen::sigma(idx, -1), BGen::sigma(idx, +1)};
    out.assign(g.begin(), g.begin() + site);
    out.insert(out.end(), ins.begin(), ins.end());
    out.insert(out.end(), g.begin() + site, g.end());
  }
  return BraidWord(n, std::move(out));
}

std::vector<long long> vb2NormalForm(const BraidWord& w) {
  if (w.strands != 2) throw std::invalid_argument("vb2NormalForm needs exactly 2 strands");
  std::vector<long long> exps = {0};
  for (const BGen& g : w.gens) {
    if (g.kind == BKind::Sigma) {
      exps.back() += g.sign;
    } else {
      if (exps.size() >= 2 && exps.back() == 0)
        exps.pop_back();
      else
        exps.push_back(0);
    }
  }
  return exps;
}

std::string formatVb2(const std::vector<long long>& form) {
  std::ostringstream out;
  for (size_t i = 0; i < form.size(); ++i) {
    if (i) out << " t ";
    out << "s^" << form[i];
  }
  return out.str();
}

}  // namespace vbraid
