#ifndef EULERODE_PARTITION_HPP
#define EULERODE_PARTITION_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace eulerode {

// Integer partition, stored weakly decreasing with trailing zeros trimmed.
class Partition {
 public:
  Partition() = default;
  // Sorts into weakly decreasing order; rejects negative parts.
  explicit Partition(std::vector<int> parts);

  // "2,1,1" or "2 1 1"; empty string is the empty partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  // Parts padded with zeros to n entries; TooManyParts if length() > n.
  std::vector<int> padded(int n) const;

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on parts; descending lex order refines dominance.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

// Dominance: a <= b iff every partial sum of a is <= that of b (equal
// weights). Returns nullopt for incomparable pairs or unequal weights.
std::optional<std::partial_ordering> dominance_compare(const Partition& a, const Partition& b);
bool dominated_by(const Partition& a, const Partition& b);

// Partitions of weight w with at most max_parts parts, in reverse
// lexicographic order, which is a linear extension of dominance
// (largest first).
std::vector<Partition> partitions(int w, int max_parts);

}  // namespace eulerode

#endif  // EULERODE_PARTITION_HPP
