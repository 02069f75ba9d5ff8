#ifndef KLRW_BIMODULE_HPP
#define KLRW_BIMODULE_HPP

#include <compare>
#include <string>
#include <vector>

#include "klrw/algebra.hpp"

namespace klrw {

// ---------------------------------------------------------------------------
// Coefficient bimodules for the cochain complexes.
//
//   Diagonal     the algebra acting on itself from both sides.
//   Braiding(i)  the bimodule of the negative braiding move at puncture i.
//                Modelled as the corank-one sub-bimodule of Diagonal spanned
//                by every basis morphism except e(i); the span is closed
//                under the action because a product can only land on e(i)
//                when both factors already are e(i) (q-degrees add and are
//                nonnegative).  The lowest-degree generator of the (i, i)
//                component is s(i).
//   Cokernel(i)  the quotient Diagonal / Braiding(i): one dimension, the
//                class of e(i), killed by every morphism of positive
//                q-degree on either side.
//
// Braiding(i) -> Diagonal -> Cokernel(i) is a short exact sequence via the
// inclusion iota and the projection pi below.
// ---------------------------------------------------------------------------

enum class ModuleKind { Diagonal, Braiding, Cokernel };

struct BimoduleModel {
  ModuleKind kind = ModuleKind::Diagonal;
  int idx = -1;  // distinguished vertex, used by Braiding and Cokernel

  static BimoduleModel diagonal() { return {ModuleKind::Diagonal, -1}; }
  static BimoduleModel braiding(int i) { return {ModuleKind::Braiding, i}; }
  static BimoduleModel cokernel(int i) { return {ModuleKind::Cokernel, i}; }

  friend auto operator<=>(const BimoduleModel&, const BimoduleModel&) = default;
};

// An element of one of the three modules.  Diagonal and Braiding content
// lives in `alg`; Cokernel content is the single coordinate `unit` along
// the class of e(idx).  The module itself is passed to the operations, not
// stored here.
struct ModElem {
  AlgElem alg;
  Rat unit = Rat(0);

  bool is_zero() const { return alg.is_zero() && unit == 0; }

  ModElem& operator+=(const ModElem& o);
  ModElem& operator-=(const ModElem& o);
  ModElem& operator*=(const Rat& c);
  friend ModElem operator+(ModElem x, const ModElem& o) { return x += o; }
  friend ModElem operator-(ModElem x, const ModElem& o) { return x -= o; }
  friend ModElem operator*(const Rat& c, ModElem x) { return x *= c; }
  friend bool operator==(const ModElem&, const ModElem&) = default;
};

// Wraps a basis label as a module element.  Labels are normal forms for
// Diagonal (all of them) and Braiding (all but e(idx)); the Cokernel basis
// label is e(idx) and wraps to unit = c.  Throws std::invalid_argument on a
// label outside the module.
ModElem mod_elem(const BimoduleModel& M, const Mor& label, const Rat& c = Rat(1));

// Basis of M(T_src, T_tgt) in q-degrees <= maxQ, ordered by dot count.
std::vector<Mor> module_basis(const BimoduleModel& M, int tgt, int src, int maxQ,
                              const QuiverConfig& cfg);

// Two-sided action x.m.y.  Diagonal and Braiding act through the algebra
// product; the Cokernel coordinate survives only against the coefficient of
// e(idx) on both sides.
ModElem mod_act(const BimoduleModel& M, const AlgElem& x, const ModElem& m,
                const AlgElem& y);

// q-degree of the Diagonal/Braiding content; the Cokernel class sits in
// degree 0.  Meaningful on homogeneous elements only.
int qdeg(const BimoduleModel& M, const ModElem& m);

// The short exact sequence maps.  iota is the basis inclusion (the kernel
// model makes it the identity on content; it still validates that e(i) is
// absent).  pi extracts the class of e(i).
AlgElem iota(int i, const AlgElem& x);
ModElem pi(int i, const AlgElem& x);

std::string to_string(const BimoduleModel& M);
std::string to_string(const BimoduleModel& M, const ModElem& m);

}  // namespace klrw

#endif
