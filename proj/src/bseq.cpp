#include "toddzeta/bseq.hpp"

#include <sstream>
#include <stdexcept>

namespace toddzeta {

using exactmath::Int;

BSeq::BSeq(std::vector<Int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("BSeq: empty sequence");
  bool all_two = true;
  for (const Int& b : entries_) {
    if (b < 2) throw std::domain_error("BSeq: every entry must be >= 2");
    if (b > 2) all_two = false;
  }
  if (all_two)
    throw std::domain_error("BSeq: at least one entry must be >= 3");
}

const Int& BSeq::at(long k) const {
  long r = static_cast<long>(entries_.size());
  long i = ((k % r) + r) % r;
  return entries_[static_cast<std::size_t>(i)];
}

BSeq BSeq::rotated(int s) const {
  std::vector<Int> out;
  out.reserve(entries_.size());
  for (long k = 0; k < r(); ++k) out.push_back(at(s + k));
  return BSeq(std::move(out));
}

BSeq BSeq::parse(const std::string& csv) {
  std::vector<Int> out;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::size_t first = token.find_first_not_of(" \t");
    std::size_t last = token.find_last_not_of(" \t");
    if (first == std::string::npos)
      throw std::invalid_argument("BSeq::parse: empty entry in '" + csv + "'");
    out.emplace_back(token.substr(first, last - first + 1));
  }
  if (out.empty())
    throw std::invalid_argument("BSeq::parse: no entries in '" + csv + "'");
  return BSeq(std::move(out));
}

std::string BSeq::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) os << ",";
    os << entries_[i].get_str();
  }
  return os.str();
}

}  // namespace toddzeta
