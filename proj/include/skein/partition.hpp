#pragma once

#include <compare>
#include <string>
#include <vector>

#include <json.hpp>

namespace skein {

/// A partition: weakly decreasing positive parts.  The empty partition is
/// the unique partition of 0.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    /// Sorts arbitrary positive parts into a partition.
    static Partition from_parts(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    /// Part i (0-based); 0 beyond the length.
    int part(int i) const { return i < length() ? parts_[i] : 0; }
    Partition conjugate() const;

    /// Lexicographic on the parts.
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Concatenation, re-sorted: the index of a product of monomials.
Partition join(const Partition& a, const Partition& b);

/// All partitions of n in decreasing lexicographic order, (n) first.
std::vector<Partition> partitions(int n);

std::string to_string(const Partition& p);
nlohmann::json to_json(const Partition& p);

}  // namespace skein
