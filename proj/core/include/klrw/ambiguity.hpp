#ifndef KLRW_AMBIGUITY_HPP
#define KLRW_AMBIGUITY_HPP

#include <compare>
#include <string>
#include <vector>

#include "klrw/algebra.hpp"

namespace klrw {

// ---------------------------------------------------------------------------
// Overlap generators S_n of the reduction system.
//
//   S_0: the vertices e(t), t = 0..N.
//   S_1: the arrows p(i+1), q(i) (i = 0..N-1) and s(t) (t = 0..N).
//   S_2: the four rule left-hand sides per strand pair i:
//        Q2(i) = q(i).p(i+1), P2(i+1) = p(i+1).q(i),
//        sQ2(i) = s(i).q(i), sP2(i+1) = s(i+1).p(i+1).
//   S_n, n>2: minimal overlaps of those, four alternating families per
//   strand pair:
//        Qn(i)  = q(i).p(i+1).q(i)...          (n letters)
//        Pn(i+1)= p(i+1).q(i).p(i+1)...        (n letters)
//        sQn(i) = s(i).q(i).p(i+1)...          (dot + n-1 letters)
//        sPn(i+1)= s(i+1).p(i+1).q(i)...       (dot + n-1 letters)
//
// So |S_0| = N+1, |S_1| = 3N+1, |S_n| = 4N for n >= 2.  These generators
// index the degree-n projectives P_n = A (x) k.S_n (x) A of the bimodule
// resolution of the algebra over itself.
//
// Storage: family P or Q, a dotted flag, and the base strand-pair index i
// (families P are displayed with index i+1).  Degenerate degrees are
// canonicalized: at n = 1 a dotted generator is the plain dot s(t), stored
// as family Q with base t in 0..N; at n = 0 only vertices exist, stored the
// same way.  Ambiguity::family() performs that canonicalization, so code
// that steps a family from degree n to n-1 need not special-case n = 2.
// ---------------------------------------------------------------------------

enum class Fam : std::uint8_t { P, Q };

class Ambiguity {
 public:
  static Ambiguity vertex(int t) { return Ambiguity(0, Fam::Q, t, false); }

  // The family member of length n >= 1.  For n >= 2, base is the strand
  // pair i (families P give the words at strand i+1).  For n = 1 the
  // degenerate members are p(base+1), q(base), s(base+1) (family P dotted)
  // and s(base) (family Q dotted).
  static Ambiguity family(int n, Fam f, int base, bool dotted);

  int n() const { return n_; }
  Fam fam() const { return fam_; }
  int base() const { return base_; }
  bool dotted() const { return dotted_; }

  int tgt() const;
  int src() const;
  int qdeg() const;
  Path word() const;

  friend auto operator<=>(const Ambiguity&, const Ambiguity&) = default;

 private:
  Ambiguity(int n, Fam f, int base, bool dotted)
      : n_(n), fam_(f), base_(base), dotted_(dotted) {}
  int n_;
  Fam fam_;
  int base_;
  bool dotted_;
};

// Complete duplicate-free list of S_n, in a fixed deterministic order.
std::vector<Ambiguity> enumerate_S(int n, const QuiverConfig& cfg);

std::string to_string(const Ambiguity& g);

}  // namespace klrw

#endif
