#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vbraid/action.hpp"
#include "vbraid/braid.hpp"
#include "vbraid/reduce.hpp"
#include "vbraid/render.hpp"
#include "vbraid/reps.hpp"

using namespace vbraid;

namespace {

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string permToString(const Perm& p) {
  std::string s = "[";
  for (int i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p(i) + 1);
  }
  return s + "]";
}

RepKind parseKind(const std::string& k) {
  if (k == "phi") return RepKind::ArtinPhi;
  if (k == "welded") return RepKind::WeldedPsi;
  if (k == "bm") return RepKind::BmPsi;
  throw CLI::ValidationError("--kind must be phi, welded or bm");
}

int runSelftest();
int runFuzz(std::uint64_t seed, int cases);
int runBench(int n, int len, int words);
int runKernelDemo();

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"virtual curve diagrams and the word problem in virtual braid groups"};
  app.require_subcommand(1);

  // eq
  auto* eq = app.add_subcommand("eq", "decide equality of two words in VB_n");
  int eqN = 0;
  std::string eqW1, eqW2;
  eq->add_option("--n", eqN, "strand count")->required();
  eq->add_option("word1", eqW1)->required();
  eq->add_option("word2", eqW2)->required();

  // trivial
  auto* tv = app.add_subcommand("trivial", "decide triviality of a word in VB_n");
  int tvN = 0;
  std::string tvW;
  tv->add_option("--n", tvN)->required();
  tv->add_option("word", tvW)->required();

  // act
  auto* ac = app.add_subcommand("act", "act by a word and print the canonical diagram");
  int acN = 0;
  std::string acW, acDiag;
  ac->add_option("--n", acN)->required();
  ac->add_option("--word", acW)->required();
  ac->add_option("--diagram", acDiag, "JSON diagram to act on (default I_n)");

  // undraw
  auto* ud = app.add_subcommand("undraw", "extract a braid word drawing the diagram");
  std::string udFile;
  ud->add_option("diagram", udFile, "diagram JSON file")->required();

  // normalize
  auto* nm = app.add_subcommand("normalize", "reduce a diagram to its minimal form");
  std::string nmFile, nmTrace;
  nm->add_option("diagram", nmFile)->required();
  nm->add_option("--trace", nmTrace, "write the reduction trace to this JSON file");

  // coords
  auto* co = app.add_subcommand("coords", "print the braid coordinates of a word's diagram");
  int coN = 0;
  std::string coW;
  co->add_option("--n", coN)->required();
  co->add_option("word", coW)->required();

  // rep
  auto* rp = app.add_subcommand("rep", "print generator images under a representation");
  int rpN = 0;
  std::string rpW, rpKind = "bm";
  rp->add_option("--kind", rpKind, "phi | welded | bm");
  rp->add_option("--n", rpN)->required();
  rp->add_option("word", rpW)->required();

  // render
  auto* rd = app.add_subcommand("render", "render a diagram as SVG or ASCII");
  int rdN = 0;
  std::string rdW, rdOut, rdDiag;
  bool rdAscii = false;
  rd->add_option("--n", rdN);
  rd->add_option("--word", rdW);
  rd->add_option("--diagram", rdDiag);
  rd->add_option("-o,--out", rdOut, "output SVG path");
  rd->add_flag("--ascii", rdAscii, "print an ASCII sketch instead");

  auto* kd = app.add_subcommand("kernel-demo", "verify the kernel element of the F_{n+1} map");
  auto* st = app.add_subcommand("selftest", "run the pinned fixtures");

  auto* fz = app.add_subcommand("fuzz", "run randomized invariant suites");
  std::uint64_t fzSeed = 1;
  int fzCases = 100;
  fz->add_option("--seed", fzSeed);
  fz->add_option("--cases", fzCases);

  auto* bc = app.add_subcommand("bench", "time long actions");
  int bcN = 6, bcLen = 200, bcWords = 5;
  bc->add_option("--n", bcN);
  bc->add_option("--len", bcLen);
  bc->add_option("--words", bcWords);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*eq) {
      bool equal = wordsEqual(parseBraidWord(eqW1, eqN), parseBraidWord(eqW2, eqN));
      std::cout << (equal ? "equal" : "distinct") << '\n';
      return equal ? 0 : 1;
    }
    if (*tv) {
      bool t = isTrivial(parseBraidWord(tvW, tvN));
      std::cout << (t ? "trivial" : "nontrivial") << '\n';
      return t ? 0 : 1;
    }
    if (*ac) {
      Vcd base = acDiag.empty() ? trivialDiagram(acN) : fromJson(readFile(acDiag));
      Vcd out = actWord(parseBraidWord(acW, acN), base);
      std::cout << toJson(out) << '\n' << excursionString(out) << '\n';
      return 0;
    }
    if (*ud) {
      Vcd d = fromJson(readFile(udFile));
      auto w = undraw(d);
      if (!w) {
        std::cout << "not in the orbit of the trivial diagram\n";
        return 1;
      }
      std::cout << formatBraidWord(*w) << '\n';
      return 0;
    }
    if (*nm) {
      Vcd d = fromJson(readFile(nmFile));
      ReductionTrace tr = normalize(d);
      if (!nmTrace.empty()) {
        nlohmann::json steps = nlohmann::json::array();
        for (const auto& s : tr.steps) {
          nlohmann::json j;
          j["kind"] = s.kind == ReductionStep::Kind::Sigma ? "sigma" : "perm";
          if (s.kind == ReductionStep::Kind::Sigma)
            j["gen"] = formatBraidWord(BraidWord(d.n, {s.gen}));
          else
            j["perm"] = s.perm.img;
          j["before"] = s.beforeDigest;
          j["after"] = s.afterDigest;
          steps.push_back(j);
        }
        nlohmann::json out;
        out["steps"] = steps;
        out["minimal"] = nlohmann::json::parse(toJson(tr.minimal));
        out["extractedWord"] = formatBraidWord(tr.extractedWord);
        writeFile(nmTrace, out.dump(2));
      }
      std::cout << toJson(tr.minimal) << '\n'
                << "steps: " << tr.steps.size() << '\n'
                << "word: " << formatBraidWord(tr.extractedWord) << '\n';
      return 0;
    }
    if (*co) {
      Coordinates c = coordinates(actWord(parseBraidWord(coW, coN), trivialDiagram(coN)));
      std::cout << formatCoordinates(c) << '\n';
      return 0;
    }
    if (*rp) {
      RepKind kind = parseKind(rpKind);
      FreeEndo f = wordEndo(kind, parseBraidWord(rpW, rpN));
      for (int i = 1; i <= rpN; ++i) {
        std::string im = formatGroupWord(f.image(i));
        std::cout << 'x' << i << " -> " << (im.empty() ? "1" : im) << '\n';
      }
      if (kind == RepKind::BmPsi) {
        std::string im = formatGroupWord(f.image(0));
        std::cout << "q -> " << (im.empty() ? "1" : im) << '\n';
      }
      return 0;
    }
    if (*rd) {
      Vcd d = !rdDiag.empty() ? fromJson(readFile(rdDiag))
                              : actWord(parseBraidWord(rdW, rdN), trivialDiagram(rdN));
      if (rdAscii) {
        std::cout << toAscii(d);
      } else {
        std::string svg = toSvg(d);
        if (rdOut.empty())
          std::cout << svg;
        else
          writeFile(rdOut, svg);
      }
      return 0;
    }
    if (*kd) return runKernelDemo();
    if (*st) return runSelftest();
    if (*fz) return runFuzz(fzSeed, fzCases);
    if (*bc) return runBench(bcN, bcLen, bcWords);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

namespace {

int checkCount = 0, failCount = 0;

void check(bool ok, const std::string& what) {
  ++checkCount;
  if (!ok) {
    ++failCount;
    std::cout << "FAIL " << what << '\n';
  } else {
    std::cout << "ok   " << what << '\n';
  }
}

int runKernelDemo() {
  BraidWord beta = parseBraidWord("(t3 s2 t1 S2)^3", 4);
  std::cout << "beta = (t3 s2 t1 S2)^3 in VB_4\n";
  FreeEndo f = wordEndo(RepKind::BmPsi, beta);
  std::cout << "psi(beta) is " << (f.isIdentity() ? "the identity" : "NOT the identity")
            << " on F_5\n";
  bool trivial = isTrivial(beta);
  std::cout << "beta is " << (trivial ? "trivial" : "nontrivial")
            << " in VB_4 by the diagram action\n";

  BraidWord k = concat(parseBraidWord("t2 s1 s2", 3), invertWord(parseBraidWord("s1 s2 t1", 3)));
  std::cout << "\nwelded contrast: k = t2 s1 s2 (s1 s2 t1)^-1 in VB_3\n";
  std::cout << "welded image is "
            << (isKernelElement(RepKind::WeldedPsi, k) ? "the identity" : "NOT the identity")
            << ", diagram action says " << (isTrivial(k) ? "trivial" : "nontrivial") << '\n';
  bool ok = f.isIdentity() && !trivial && isKernelElement(RepKind::WeldedPsi, k) && !isTrivial(k);
  return ok ? 0 : 1;
}

int runSelftest() {
  checkCount = failCount = 0;
  auto act = [](const std::string& w, int n) {
    return actWord(parseBraidWord(w, n), trivialDiagram(n));
  };

  // coordinates of S2 s1 s2
  Coordinates c = coordinates(act("S2 s1 s2", 3));
  check(formatCoordinates(c) == "(x1 <x3>, x1 X3 <x2>, <x1>)", "coordinates of S2 s1 s2");
  // the wmove pair: equal coordinates, distinct diagrams
  check(coordinates(act("t2 s1 s2", 3)) == coordinates(act("s1 s2 t1", 3)),
        "wmove words share coordinates");
  check(!canonicalEqual(act("t2 s1 s2", 3), act("s1 s2 t1", 3)),
        "wmove words give distinct diagrams");
  check(!wordsEqual(parseBraidWord("t2 s1 s2", 3), parseBraidWord("s1 s2 t1", 3)),
        "wmove words are distinct in VB_3");
  // worked example
  Vcd ex;
  {
    ex.n = 3;
    ex.upper = {6, 1, 0, 2, 4, 3, 5};
    ex.base = {10, 11, 12};
    ex.curves = {{10, 0}, {11, 1, 2, 3}, {12, 4, 5, 6}};
  }
  check(canonicalEqual(act("t1 t2 s2 t2 s1 t1", 3), ex), "worked example diagram");
  FreeEndo f = wordEndo(RepKind::BmPsi, parseBraidWord("t1 t2 s2 t2 s1 t1", 3));
  check(formatGroupWord(f.image(1)) == "q q x2 Q Q" &&
            formatGroupWord(f.image(2)) == "x2 q x3 Q X2" &&
            formatGroupWord(f.image(3)) == "x3 Q Q Q x1 q q q X3",
        "worked example images");
  check(psiFromVcd(canonicalize(ex)) == f, "diagram reading of the worked example");
  // kernel element
  check(isKernelElement(RepKind::BmPsi, parseBraidWord("(t3 s2 t1 S2)^3", 4)),
        "kernel element maps to the identity");
  check(!isTrivial(parseBraidWord("(t3 s2 t1 S2)^3", 4)), "kernel element is nontrivial");
  check(wordEndo(RepKind::WeldedPsi, parseBraidWord("t2 s1 s2", 3)) ==
            wordEndo(RepKind::WeldedPsi, parseBraidWord("s1 s2 t1", 3)),
        "welded images of the wmove pair agree");
  // tau and sigma fixtures
  check(excursionString(act("s1", 2)) == "curve(b=1): g0 ^P2 | curve(b=2): .P1",
        "clean sigma action");
  check(excursionString(act("t1", 2)) == "curve(b=1): .P2 | curve(b=2): .P1",
        "clean tau action");
  check(complexity(act("s2", 3)) == 1, "complexity of a single crossing");
  check(terminalOverArcs(canonicalize(ex)).empty(), "worked example has no terminal over arcs");
  // undraw of the worked example returns an equal word
  auto w = undraw(canonicalize(ex));
  check(w.has_value() && wordsEqual(*w, parseBraidWord("t1 t2 s2 t2 s1 t1", 3)),
        "undraw of the worked example");

  std::cout << (failCount == 0 ? "selftest passed" : "selftest FAILED") << " (" << checkCount
            << " checks)\n";
  return failCount == 0 ? 0 : 1;
}

BraidWord randWord(std::mt19937_64& rng, int n, int len) {
  std::vector<BGen> gs;
  for (int i = 0; i < len; ++i) {
    int idx = 1 + static_cast<int>(rng() % (n - 1));
    switch (rng() % 3) {
      case 0: gs.push_back(BGen::sigma(idx, +1)); break;
      case 1: gs.push_back(BGen::sigma(idx, -1)); break;
      default: gs.push_back(BGen::tau(idx)); break;
    }
  }
  return BraidWord(n, std::move(gs));
}

int runFuzz(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  std::cout << "fuzz: seed " << seed << ", " << cases << " cases per suite\n";
  int bad = 0;

  // inverse pairs and the involution
  for (int t = 0; t < cases; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    Vcd d = actWord(randWord(rng, n, 8), trivialDiagram(n));
    int i = 1 + static_cast<int>(rng() % (n - 1));
    if (!canonicalEqual(actGenerator(BGen::sigma(i, 1), actGenerator(BGen::sigma(i, -1), d)), d))
      ++bad;
    if (!canonicalEqual(actGenerator(BGen::tau(i), actGenerator(BGen::tau(i), d)), d)) ++bad;
  }
  std::cout << "  inverse suite: " << (bad ? "FAIL" : "ok") << '\n';

  // rewriting well-definedness
  int bad2 = 0;
  for (int t = 0; t < cases; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    BraidWord w = randWord(rng, n, 10);
    BraidWord r = w;
    for (int k = 0; k < 10; ++k) r = relationRewrite(r, rng());
    if (!canonicalEqual(actWord(w, trivialDiagram(n)), actWord(r, trivialDiagram(n)))) ++bad2;
  }
  std::cout << "  rewriting suite: " << (bad2 ? "FAIL" : "ok") << '\n';

  // coordinates against the welded formula
  int bad3 = 0;
  for (int t = 0; t < cases; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    BraidWord w = randWord(rng, n, 10);
    auto viaEndo = endoCoordinates(wordEndo(RepKind::WeldedPsi, w));
    if (!viaEndo || coordinates(actWord(w, trivialDiagram(n))) != *viaEndo) ++bad3;
  }
  std::cout << "  coordinate suite: " << (bad3 ? "FAIL" : "ok") << '\n';

  return (bad || bad2 || bad3) ? 1 : 0;
}

int runBench(int n, int len, int words) {
  std::mt19937_64 rng(123);
  double worst = 0;
  size_t maxPoints = 0;
  for (int t = 0; t < words; ++t) {
    BraidWord w = randWord(rng, n, len);
    auto start = std::chrono::steady_clock::now();
    Vcd cur = trivialDiagram(n);
    for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) {
      cur = canonicalize(actGenerator(*it, cur));
      maxPoints = std::max(maxPoints, cur.upper.size() + cur.base.size());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    worst = std::max(worst, secs);
    std::cout << "word " << t << ": length " << len << ", " << secs << " s, "
              << cur.upper.size() + cur.base.size() << " points\n";
  }
  std::cout << "worst " << worst << " s, max points " << maxPoints << '\n';
  return worst < 5.0 ? 0 : 1;
}

}  // namespace
