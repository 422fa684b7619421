#pragma once

#include <string>
#include <vector>

#include "toddzeta/rational.hpp"

namespace toddzeta {

// Periodic sequence b = (b_0, ..., b_{r-1}) of negative-regular continued
// fraction entries defining a real quadratic irrationality: every b_i >= 2
// and at least one b_i >= 3. Indexing is periodic, b_{k+r} = b_k.
class BSeq {
 public:
  explicit BSeq(std::vector<exactmath::Int> entries);

  int r() const { return static_cast<int>(entries_.size()); }
  const std::vector<exactmath::Int>& entries() const { return entries_; }
  // b_{k mod r} for any integer k.
  const exactmath::Int& at(long k) const;

  // Cyclic rotation b -> (b_s, b_{s+1}, ..., b_{s-1}).
  BSeq rotated(int s) const;

  // Comma-separated form, e.g. "2,3".
  static BSeq parse(const std::string& csv);
  std::string str() const;

  bool operator==(const BSeq& o) const { return entries_ == o.entries_; }

 private:
  std::vector<exactmath::Int> entries_;
};

}  // namespace toddzeta
