#ifndef KLRW_QUIVER_HPP
#define KLRW_QUIVER_HPP

#include <stdexcept>

namespace klrw {

// Shape of the cylindrical strand algebra: N red strands (punctures) cut the
// circle into N+1 chambers, giving objects T_0 .. T_N for the single black
// strand.  Braiding moves exchange adjacent punctures and are indexed by
// 1 .. N-1.
struct QuiverConfig {
  int punctures = 1;

  explicit QuiverConfig(int n) : punctures(n) {
    if (n < 1) throw std::invalid_argument("QuiverConfig: need at least one puncture");
  }

  int vertices() const { return punctures + 1; }
  int max_object() const { return punctures; }

  bool valid_object(int j) const { return 0 <= j && j <= punctures; }
  bool valid_braid_index(int i) const { return 1 <= i && i <= punctures - 1; }
};

}  // namespace klrw

#endif
