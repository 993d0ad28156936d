#pragma once

// The Markov trace on H_n and the HOMFLY polynomial of closed braids.

#include <span>

#include "skein/hecke.hpp"
#include "skein/symfun.hpp"

namespace skein {

/// Framed plane evaluation of the closure of x: linear, delta per free loop,
/// v^{-1} per positive curl.  Identity of H_n maps to delta^n.
Scalar markov_ev(const HeckeElt& x);

/// The algebra map on symmetric functions with ev_sym(h_k) = markov_ev(h_idem(k)).
Scalar ev_sym(const SymFunc& f);
Scalar ev_sym(const PowerSumPoly& f);

struct HomflyResult {
    Scalar polynomial;
    int writhe;
};

/// Unframed invariant v^w markov_ev(word) / delta of the closed braid;
/// the unknot gives 1.  Throws std::invalid_argument on a bad word.
HomflyResult homfly(int n, std::span<const int> word);

}  // namespace skein
