#ifndef FPCL_ARCHLIB_HPP
#define FPCL_ARCHLIB_HPP

#include <string>
#include <vector>

#include "fpcl/algebra.hpp"
#include "fpcl/formula.hpp"
#include "fpcl/interaction.hpp"

namespace fpcl {

struct ArchFormula {
    PclPtr formula;
    std::vector<std::string> ports;
};

// Peer-to-Peer with n >= 2 components. Ports r1..rn (receive) and s1..sn
// (send). phi_{j,j'} states that j receives from j' and every other port
// stays silent; zeta coalesces the chosen pairs per receiver and sums over
// every nonempty choice of receivers and partner sets.
ArchFormula p2p_formula(int components);

// Master/Slave with m >= 1 masters and s >= 1 slaves. Ports m1..mm, s1..ss.
// Every master picks exactly one slave; the per-master choices are summed
// and the masters' interactions coalesced. For 2x2 this is
// (phi_{s1,m1} + phi_{s2,m1}) # (phi_{s1,m2} + phi_{s2,m2}).
ArchFormula master_slave_formula(int masters, int slaves);

// Architecture uncertainty valuation: the closure value of zeta on gamma,
// i.e. the best satisfaction degree over nonempty sub-configurations.
Value uncertainty(const PclPtr& z, const Configuration& g);

}  // namespace fpcl

#endif
