#pragma once

// Young's seminormal irreducible representations of H_n, characters, and the
// closure map H_n -> symmetric functions.

#include <utility>
#include <vector>

#include <json.hpp>

#include "skein/hecke.hpp"
#include "skein/matrix.hpp"
#include "skein/partition.hpp"
#include "skein/symfun.hpp"

namespace skein {

/// A standard filling of a Young diagram by 1..n.
class StdTableau {
public:
    /// cells[k] = (row, col), 0-based, of the entry k + 1.  Throws
    /// std::invalid_argument unless the filling is standard of shape `shape`.
    StdTableau(Partition shape, std::vector<std::pair<int, int>> cells);

    const Partition& shape() const noexcept { return shape_; }
    int size() const noexcept { return shape_.weight(); }
    int row(int entry) const { return cells_[entry - 1].first; }
    int col(int entry) const { return cells_[entry - 1].second; }
    /// col - row of the cell holding `entry`.
    int content(int entry) const { return col(entry) - row(entry); }
    const std::vector<std::pair<int, int>>& cells() const noexcept { return cells_; }
    /// Rows as lists of entries.
    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const StdTableau& a, const StdTableau& b) { return a.cells_ == b.cells_; }

private:
    Partition shape_;
    std::vector<std::pair<int, int>> cells_;
};

/// All standard tableaux of shape lambda, ordered lexicographically by the
/// row sequence (row of 1, row of 2, ...).
std::vector<StdTableau> std_tableaux(const Partition& lambda, int bound = kMaxStrands);

struct RepMatrix {
    Partition lambda;
    int generator;
    ScalarMatrix matrix;
};

/// The matrix of sigma_i on the seminormal module V_lambda, columns indexed
/// by std_tableaux(lambda).
RepMatrix rho(const Partition& lambda, int i);
ScalarMatrix rep_of(const HeckeElt& x, const Partition& lambda);
Scalar character(const HeckeElt& x, const Partition& lambda);

/// sum_lambda character(x, lambda) s_lambda.
SchurExpansion closure_schur(const HeckeElt& x);
SymFunc closure(const HeckeElt& x);

/// The scalar by which a central x acts on V_lambda.  Throws
/// std::invalid_argument if x is not central or does not act as a scalar.
Scalar central_scalar(const HeckeElt& x, const Partition& lambda);

/// central_scalar(t_circle(n), lambda), cached.
Scalar t_lambda(const Partition& lambda);

/// [{"lambda": [...], "values": {"[1,2,...]": ScalarJSON, ...}}, ...] over
/// all partitions of n and all basis permutations.
nlohmann::json character_table_json(int n);

}  // namespace skein
