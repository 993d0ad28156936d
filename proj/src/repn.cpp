#include "skein/repn.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace skein {

StdTableau::StdTableau(Partition shape, std::vector<std::pair<int, int>> cells)
    : shape_(std::move(shape)), cells_(std::move(cells)) {
    if (static_cast<int>(cells_.size()) != shape_.weight())
        throw std::invalid_argument("tableau size does not match its shape");
    std::vector<int> filled(shape_.length(), 0);
    for (const auto& [r, c] : cells_) {
        // Entries arrive in increasing order, so standardness means each new
        // cell extends its row and sits under a filled cell.
        if (r < 0 || r >= shape_.length() || c != filled[r] || c >= shape_.part(r) ||
            (r > 0 && filled[r - 1] <= c))
            throw std::invalid_argument("not a standard tableau");
        ++filled[r];
    }
}

std::vector<std::vector<int>> StdTableau::rows() const {
    std::vector<std::vector<int>> out(shape_.length());
    for (int k = 0; k < size(); ++k) out[cells_[k].first].push_back(k + 1);
    return out;
}

std::vector<StdTableau> std_tableaux(const Partition& lambda, int bound) {
    if (lambda.weight() > bound)
        throw std::invalid_argument("partition weight " + std::to_string(lambda.weight()) +
                                    " exceeds bound " + std::to_string(bound));
    std::vector<StdTableau> out;
    const int n = lambda.weight();
    std::vector<int> filled(lambda.length(), 0);
    std::vector<std::pair<int, int>> cells;
    auto place = [&](auto&& self) -> void {
        if (static_cast<int>(cells.size()) == n) {
            out.emplace_back(lambda, cells);
            return;
        }
        for (int r = 0; r < lambda.length(); ++r) {
            if (filled[r] >= lambda.part(r) || (r > 0 && filled[r - 1] <= filled[r])) continue;
            cells.emplace_back(r, filled[r]);
            ++filled[r];
            self(self);
            --filled[r];
            cells.pop_back();
        }
    };
    place(place);
    return out;
}

namespace {

struct Module {
    std::vector<StdTableau> tableaux;
    std::vector<SparseColumns> gens;  // gens[i - 1] is sigma_i
};

Module build_module(const Partition& lambda) {
    Module m;
    m.tableaux = std_tableaux(lambda);
    const int dim = static_cast<int>(m.tableaux.size());
    const int n = lambda.weight();
    std::map<std::vector<std::pair<int, int>>, int> index;
    for (int t = 0; t < dim; ++t) index.emplace(m.tableaux[t].cells(), t);

    const Scalar s = sym::s();
    const Scalar z = sym::z();
    for (int i = 1; i < n; ++i) {
        SparseColumns g{dim, std::vector<std::vector<std::pair<int, Scalar>>>(dim)};
        for (int t = 0; t < dim; ++t) {
            const StdTableau& tab = m.tableaux[t];
            if (tab.row(i) == tab.row(i + 1)) {
                g.cols[t].emplace_back(t, s);
                continue;
            }
            if (tab.col(i) == tab.col(i + 1)) {
                g.cols[t].emplace_back(t, -s.inv());
                continue;
            }
            auto swapped = tab.cells();
            std::swap(swapped[i - 1], swapped[i]);
            const int u = index.at(swapped);
            const int d = tab.content(i + 1) - tab.content(i);
            const Scalar alpha = z / (Scalar(1) - s.pow(-2 * d));
            // Upper off-diagonal 1: the earlier tableau (i above i+1) carries
            // 1 in the later column, the later one carries the product.
            const Scalar other = tab.row(i) < tab.row(i + 1) ? alpha * (z - alpha) + Scalar(1) : Scalar(1);
            g.cols[t].emplace_back(t, alpha);
            g.cols[t].emplace_back(u, other);
        }
        m.gens.push_back(std::move(g));
    }
    return m;
}

const Module& module_for(const Partition& lambda) {
    static std::mutex mutex;
    static std::map<Partition, std::unique_ptr<Module>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(lambda);
        if (it != cache.end()) return *it->second;
    }
    auto built = std::make_unique<Module>(build_module(lambda));
    std::lock_guard lock(mutex);
    auto [it, fresh] = cache.try_emplace(lambda, std::move(built));
    return *it->second;
}

void check_shape(const HeckeElt& x, const Partition& lambda) {
    if (x.strands() != lambda.weight())
        throw std::invalid_argument("element of H_" + std::to_string(x.strands()) +
                                    " against a partition of " + std::to_string(lambda.weight()));
}

// Calls visit(rank, rho(omega_rank)) for each rank in `targets`.
template <class Visit>
void walk_basis_matrices(const Module& m, int n, std::span<const std::uint32_t> targets, Visit&& visit) {
    const int dim = static_cast<int>(m.tableaux.size());
    walk_canonical_words(
        SymmetricGroup::get(n), targets, ScalarMatrix::identity(dim),
        [&](ScalarMatrix mat, int gen) { return mat * m.gens[gen - 1]; }, visit);
}

}  // namespace

RepMatrix rho(const Partition& lambda, int i) {
    if (i < 1 || i >= lambda.weight())
        throw std::invalid_argument("generator index " + std::to_string(i) + " out of range");
    return {lambda, i, module_for(lambda).gens[i - 1].dense()};
}

ScalarMatrix rep_of(const HeckeElt& x, const Partition& lambda) {
    check_shape(x, lambda);
    const Module& m = module_for(lambda);
    const int dim = static_cast<int>(m.tableaux.size());
    ScalarMatrix acc(dim, dim);
    std::vector<std::uint32_t> targets;
    std::map<std::uint32_t, Scalar> coeff;
    for (const auto& [r, c] : x.rank_terms()) {
        targets.push_back(r);
        coeff.emplace(r, c);
    }
    walk_basis_matrices(m, x.strands(), targets, [&](std::uint32_t r, const ScalarMatrix& mat) {
        ScalarMatrix term = mat;
        term *= coeff.at(r);
        acc += term;
    });
    return acc;
}

Scalar character(const HeckeElt& x, const Partition& lambda) { return rep_of(x, lambda).trace(); }

SchurExpansion closure_schur(const HeckeElt& x) {
    SchurExpansion out;
    for (const Partition& lambda : partitions(x.strands())) {
        Scalar c = character(x, lambda);
        if (!c.is_zero()) out.emplace(lambda, std::move(c));
    }
    return out;
}

SymFunc closure(const HeckeElt& x) { return from_schur(closure_schur(x)); }

Scalar central_scalar(const HeckeElt& x, const Partition& lambda) {
    check_shape(x, lambda);
    if (!is_central(x)) throw std::invalid_argument("central_scalar: element is not central");
    auto c = rep_of(x, lambda).as_scalar();
    if (!c) throw std::invalid_argument("central_scalar: element does not act by a scalar");
    return *c;
}

Scalar t_lambda(const Partition& lambda) {
    static std::mutex mutex;
    static std::map<Partition, Scalar> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(lambda);
        if (it != cache.end()) return it->second;
    }
    Scalar t = central_scalar(t_circle(lambda.weight()), lambda);
    std::lock_guard lock(mutex);
    return cache.emplace(lambda, std::move(t)).first->second;
}

nlohmann::json character_table_json(int n) {
    const auto& group = SymmetricGroup::get(n);
    std::vector<std::uint32_t> all(group.order());
    for (std::uint32_t r = 0; r < group.order(); ++r) all[r] = r;
    auto table = nlohmann::json::array();
    for (const Partition& lambda : partitions(n)) {
        std::vector<Scalar> values(group.order());
        walk_basis_matrices(module_for(lambda), n, all,
                            [&](std::uint32_t r, const ScalarMatrix& mat) { values[r] = mat.trace(); });
        nlohmann::json obj = nlohmann::json::object();
        for (std::uint32_t r = 0; r < group.order(); ++r)
            obj[to_json(group.perm(r)).dump()] = to_json(values[r]);
        table.push_back({{"lambda", to_json(lambda)}, {"values", std::move(obj)}});
    }
    return table;
}

}  // namespace skein
