#ifndef KLRW_TRANSFER_HPP
#define KLRW_TRANSFER_HPP

#include "klrw/bar.hpp"
#include "klrw/resolution.hpp"

namespace klrw {

// Chain map from the normalized bar resolution onto the generator
// resolution.  On a basis tensor a (x) [y_n | ... | y_1] (x) b:
// concatenate the middle words, walk every word reachable from the
// concatenation under the rewriting order, split each one at level n, keep
// each distinct output tensor once (multiplicities are deliberately
// forgotten), then apply the outer factors a and b.  Degree 0 is the
// identity A (x) A -> P_0.  Throws on a degree mismatch with n.
ResolutionElement transfer_G(int n, const BarElement& x);

}  // namespace klrw

#endif
