#pragma once

// psi_n: symmetric functions -> centre of H_n, fixed on power sums by
//   psi_n(P_m) = ev_sym(P_m) + (s^m - s^-m) v^-m sum_j T(j)^m.

#include <string>
#include <vector>

#include "skein/hecke.hpp"
#include "skein/partition.hpp"
#include "skein/symfun.hpp"

namespace skein {

HeckeElt psi(int n, const SymFunc& f);
HeckeElt psi(int n, const PowerSumPoly& f);

struct SeriesCheck {
    int degree;
    bool equal;
};

struct MurphySeriesReport {
    int n;
    int order;
    std::vector<SeriesCheck> degrees;
    bool passed() const {
        for (const auto& d : degrees)
            if (!d.equal) return false;
        return true;
    }
};

/// Compares psi_n(H(t)) with psi_0(H(t)) HM(s v^-1 t) / HM(s^-1 v^-1 t)
/// degree by degree through t^order.
MurphySeriesReport verify_murphy_series(int n, int order);

/// central_scalar(psi(n, f), lambda) against the content-sum prediction.
bool psi_eigen_check(int n, const SymFunc& f, const Partition& lambda);

}  // namespace skein
