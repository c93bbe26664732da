#include "eulerode/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "eulerode/errors.hpp"

namespace eulerode {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw Error(ErrorKind::InvalidArgument, "partition parts must be nonnegative");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string cleaned = text;
  for (char& ch : cleaned)
    if (ch == ',' || ch == '(' || ch == ')') ch = ' ';
  std::istringstream is(cleaned);
  std::string tok;
  while (is >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorKind::InvalidArgument, "bad partition '" + text + "'");
    parts.push_back(std::stoi(tok));
  }
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int n) const {
  if (length() > n)
    throw Error(ErrorKind::TooManyParts,
                "partition " + str() + " has more than " + std::to_string(n) + " nonzero parts");
  std::vector<int> out(parts_);
  out.resize(static_cast<std::size_t>(n), 0);
  return out;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

std::optional<std::partial_ordering> dominance_compare(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return std::nullopt;
  bool a_le_b = true;
  bool b_le_a = true;
  int sa = 0;
  int sb = 0;
  const int len = std::max(a.length(), b.length());
  for (int i = 0; i < len; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa > sb) a_le_b = false;
    if (sb > sa) b_le_a = false;
  }
  if (a_le_b && b_le_a) return std::partial_ordering::equivalent;
  if (a_le_b) return std::partial_ordering::less;
  if (b_le_a) return std::partial_ordering::greater;
  return std::nullopt;
}

bool dominated_by(const Partition& a, const Partition& b) {
  auto c = dominance_compare(a, b);
  return c && (*c == std::partial_ordering::less || *c == std::partial_ordering::equivalent);
}

std::vector<Partition> partitions(int w, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(w, w);
  return out;
}

}  // namespace eulerode
