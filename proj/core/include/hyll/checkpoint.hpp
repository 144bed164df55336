#ifndef HYLL_CHECKPOINT_HPP
#define HYLL_CHECKPOINT_HPP

#include <optional>
#include <string>

#include "hyll/assembly.hpp"

namespace hyll {

struct CheckpointHeader {
  int omega = 0;
  Rational k;
  Rational Z;
  int digits = 0;
  std::size_t n = 0;
  std::string fingerprint;
};

// Text checkpoint, one file per order:
//   HYLL v1; omega; k; Z; digits; n; order_fingerprint
// followed by the lower triangle, one entry per line, as
//   i j S_decimal H_decimal
// with round-trip decimal strings. Reading a written pencil reproduces the
// realized matrices bit-exactly at the header precision.
std::string checkpoint_path(const std::string& dir, int omega);
void checkpoint_write(const Pencil& pencil, const std::string& dir);
Pencil checkpoint_read(const std::string& dir, int omega);
std::optional<CheckpointHeader> checkpoint_peek(const std::string& dir, int omega);

}  // namespace hyll

#endif  // HYLL_CHECKPOINT_HPP
