#include "skein/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace skein {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_parts(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int col = 0; !parts_.empty() && col < parts_[0]; ++col) {
        int h = 0;
        while (h < length() && parts_[h] > col) ++h;
        c.push_back(h);
    }
    return Partition(std::move(c));
}

Partition join(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.length() + b.length());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(parts), std::greater<>());
    return Partition(std::move(parts));
}

std::vector<Partition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::string to_string(const Partition& p) {
    std::string out = "(";
    for (int i = 0; i < p.length(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.parts()[i]);
    }
    return out + ")";
}

nlohmann::json to_json(const Partition& p) { return p.parts(); }

}  // namespace skein
