#include "klrw/ambiguity.hpp"

#include <sstream>
#include <stdexcept>

namespace klrw {

Ambiguity Ambiguity::family(int n, Fam f, int base, bool dotted) {
  if (n < 1) throw std::invalid_argument("Ambiguity::family: length must be >= 1");
  if (n == 1 && dotted) {
    // sP1(base+1) is the letter s(base+1), sQ1(base) the letter s(base):
    // both canonicalize to family Q keyed by the chamber of the dot.
    int chamber = (f == Fam::P) ? base + 1 : base;
    return Ambiguity(1, Fam::Q, chamber, true);
  }
  return Ambiguity(n, f, base, dotted);
}

int Ambiguity::tgt() const {
  if (n_ == 0 || (n_ == 1 && dotted_)) return base_;
  return fam_ == Fam::P ? base_ + 1 : base_;
}

int Ambiguity::src() const {
  if (n_ == 0 || (n_ == 1 && dotted_)) return base_;
  if (n_ == 1) return fam_ == Fam::P ? base_ : base_ + 1;
  // The strand alternates between chambers base and base+1; its far end
  // depends on the parity of the strand letter count (dots don't move).
  bool odd = (n_ % 2 != 0);
  if (!dotted_) return (fam_ == Fam::Q) == odd ? base_ + 1 : base_;
  return (fam_ == Fam::P) == odd ? base_ + 1 : base_;
}

int Ambiguity::qdeg() const {
  if (n_ == 0) return 0;
  if (n_ == 1) return dotted_ ? 2 : 1;
  return dotted_ ? n_ + 1 : n_;
}

Path Ambiguity::word() const {
  if (n_ == 0) return Path::vertex(base_);
  std::vector<Arrow> w;
  if (n_ == 1) {
    if (dotted_) w.push_back(S(base_));
    else if (fam_ == Fam::P) w.push_back(P(base_ + 1));
    else w.push_back(Q(base_));
    return Path::word(std::move(w));
  }
  int strand_letters = dotted_ ? n_ - 1 : n_;
  if (dotted_) w.push_back(fam_ == Fam::P ? S(base_ + 1) : S(base_));
  bool p_turn = (fam_ == Fam::P);
  for (int t = 0; t < strand_letters; ++t) {
    w.push_back(p_turn ? P(base_ + 1) : Q(base_));
    p_turn = !p_turn;
  }
  return Path::word(std::move(w));
}

std::vector<Ambiguity> enumerate_S(int n, const QuiverConfig& cfg) {
  std::vector<Ambiguity> out;
  const int N = cfg.punctures;
  if (n == 0) {
    for (int t = 0; t <= N; ++t) out.push_back(Ambiguity::vertex(t));
    return out;
  }
  if (n == 1) {
    for (int i = 0; i < N; ++i) out.push_back(Ambiguity::family(1, Fam::P, i, false));
    for (int i = 0; i < N; ++i) out.push_back(Ambiguity::family(1, Fam::Q, i, false));
    for (int t = 0; t <= N; ++t) out.push_back(Ambiguity::family(1, Fam::Q, t, true));
    return out;
  }
  for (Fam f : {Fam::P, Fam::Q})
    for (bool dotted : {false, true})
      for (int i = 0; i < N; ++i) out.push_back(Ambiguity::family(n, f, i, dotted));
  return out;
}

std::string to_string(const Ambiguity& g) {
  std::ostringstream os;
  if (g.n() == 0) {
    os << "e(" << g.base() << ")";
  } else if (g.n() == 1) {
    if (g.dotted()) os << "s(" << g.base() << ")";
    else if (g.fam() == Fam::P) os << "p(" << g.base() + 1 << ")";
    else os << "q(" << g.base() << ")";
  } else {
    if (g.dotted()) os << "s";
    os << (g.fam() == Fam::P ? "P" : "Q") << g.n() << "("
       << (g.fam() == Fam::P ? g.base() + 1 : g.base()) << ")";
  }
  return os.str();
}

}  // namespace klrw
